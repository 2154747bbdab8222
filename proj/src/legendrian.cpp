#include "linkinv/legendrian.hpp"

#include <map>

namespace linkinv {

namespace {

void validate_component(const LegendrianComponent& c) {
    if (c.cusps_up < 0 || c.cusps_down < 0)
        throw PreconditionError("negative cusp count on " + c.vertex);
    Int total = c.cusps_up + c.cusps_down;
    if (total < 2 || total % 2 != 0)
        throw PreconditionError("cusp count on " + c.vertex + " must be even and at least 2");
    if (c.tb > -1) throw PreconditionError("unrealizable tb on " + c.vertex);
    if (abs(c.rot) > -c.tb - 1 || (c.rot - (c.tb + 1)) % 2 != 0)
        throw PreconditionError("unrealizable rotation number on " + c.vertex);
}

}  // namespace

FrontInvariants front_invariants(const FrontData& f) {
    if (f.cusps_down < 0 || f.cusps_up < 0) throw PreconditionError("negative cusp count");
    Int total = f.cusps_down + f.cusps_up;
    if (total % 2 != 0) throw PreconditionError("odd cusp total");
    if (total < 2) throw PreconditionError("a front has at least two cusps");
    return FrontInvariants{f.writhe - total / 2, (f.cusps_down - f.cusps_up) / 2};
}

LegendrianDiagram canonical_surgery_diagram(const PlumbingGraph& g, ZigzagSide side) {
    if (!g.all_genus_zero())
        throw PreconditionError("surgery diagram requires all vertex genera zero");
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.vertex(i).weight >= -1)
            throw PreconditionError(
                "vertex " + g.vertex(i).id + " has weight " + g.vertex(i).weight.get_str() +
                " >= -1: not realizable as a tb-1 framed Legendrian unknot"
                " (rolled-up presentations are out of scope)");

    LegendrianDiagram d;
    d.side = side;
    d.components.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Int& e = g.vertex(i).weight;
        LegendrianComponent c;
        c.vertex = g.vertex(i).id;
        c.weight = e;
        c.tb = e + 1;
        c.surgery = e;
        if (side == ZigzagSide::AllUp) {
            c.rot = e + 2;
            c.cusps_down = 1;
            c.cusps_up = -2 * e - 3;
        } else {
            c.rot = -(e + 2);
            c.cusps_down = -2 * e - 3;
            c.cusps_up = 1;
        }
        validate_component(c);
        d.components.push_back(std::move(c));
    }
    d.clasps = g.edges();
    return d;
}

AdjunctionReport adjunction_check(const LegendrianDiagram& d, const PlumbingGraph& g) {
    if (d.components.size() != g.size())
        throw PreconditionError("diagram and graph have different vertex counts");
    std::map<std::string, std::size_t> by_id;
    for (std::size_t i = 0; i < d.components.size(); ++i)
        by_id.emplace(d.components[i].vertex, i);

    AdjunctionReport rep;
    rep.certified = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto it = by_id.find(g.vertex(i).id);
        if (it == by_id.end())
            throw PreconditionError("diagram has no component for vertex " + g.vertex(i).id);
        const LegendrianComponent& c = d.components[it->second];
        AdjunctionRow row;
        row.vertex = c.vertex;
        row.tb = c.tb;
        row.rot = c.rot;
        row.expected_rot = c.tb + 1;
        row.ok = (c.rot == row.expected_rot);
        rep.certified = rep.certified && row.ok;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::vector<Int> chern_evaluation(const LegendrianDiagram& d) {
    std::vector<Int> rots;
    rots.reserve(d.components.size());
    for (const auto& c : d.components) rots.push_back(c.rot);
    return rots;
}

LegendrianDiagram flip_zigzag(const LegendrianDiagram& d, std::size_t component,
                              bool up_to_down) {
    if (component >= d.components.size()) throw PreconditionError("component index out of range");
    LegendrianDiagram out = d;
    LegendrianComponent& c = out.components[component];
    if (up_to_down) {
        if (c.cusps_up < 3)
            throw PreconditionError("no spare up zigzag to flip on " + c.vertex);
        c.cusps_up -= 2;
        c.cusps_down += 2;
        c.rot += 2;
    } else {
        if (c.cusps_down < 3)
            throw PreconditionError("no spare down zigzag to flip on " + c.vertex);
        c.cusps_down -= 2;
        c.cusps_up += 2;
        c.rot -= 2;
    }
    validate_component(c);
    return out;
}

}  // namespace linkinv
