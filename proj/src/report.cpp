#include "linkinv/report.hpp"

#include <sstream>

namespace linkinv {

using nlohmann::json;

json json_int(const Int& v) {
    if (fits_json_number(v)) return json(v.get_si());
    return json(v.get_str());
}

json json_vector(const std::vector<Int>& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(json_int(x));
    return arr;
}

namespace {

json input_to_json(const ParsedInput& input) {
    json j;
    json verts = json::array();
    for (const Vertex& v : input.graph.vertices()) {
        json jv;
        jv["id"] = v.id;
        jv["weight"] = json_int(v.weight);
        if (v.genus != 0) jv["genus"] = json_int(v.genus);
        verts.push_back(std::move(jv));
    }
    j["vertices"] = std::move(verts);
    json edges = json::array();
    for (const auto& [a, b] : input.graph.edges())
        edges.push_back(json::array(
            {input.graph.vertex(a).id, input.graph.vertex(b).id}));
    j["edges"] = std::move(edges);
    if (input.seifert) {
        json s;
        s["e0"] = json_int(input.seifert->e0);
        s["r"] = json::array({input.seifert->r1.get_str(), input.seifert->r2.get_str(),
                              input.seifert->r3.get_str()});
        j["seifert"] = std::move(s);
    }
    return j;
}

json h1_to_json(const HomologyStructure& h) {
    json j;
    j["rank"] = static_cast<long>(h.rank);
    j["invariant_factors"] = json_vector(h.invariant_factors);
    j["order"] = json_int(h.order);
    return j;
}

}  // namespace

json openbook_to_json(const MilnorOpenBook& ob, const SupportClass& sc) {
    json j;
    j["m"] = json_vector(ob.m.z);
    j["n"] = json_vector(ob.n);
    j["genus"] = json_int(ob.page_genus);
    j["binding"] = json_int(ob.binding_count);
    j["norm"] = json_int(ob.norm);
    j["class"] = support_kind_name(sc.kind);
    return j;
}

json diagram_to_json(const LegendrianDiagram& d, const AdjunctionReport& adj) {
    json j;
    json comps = json::array();
    for (const auto& c : d.components) {
        json jc;
        jc["vertex"] = c.vertex;
        jc["weight"] = json_int(c.weight);
        jc["tb"] = json_int(c.tb);
        jc["rot"] = json_int(c.rot);
        jc["surgery"] = json_int(c.surgery);
        jc["cusps_up"] = json_int(c.cusps_up);
        jc["cusps_down"] = json_int(c.cusps_down);
        comps.push_back(std::move(jc));
    }
    j["components"] = std::move(comps);
    j["orientation"] = d.side == ZigzagSide::AllUp ? "all-up" : "all-down";
    j["certified"] = adj.certified;
    return j;
}

Report build_report(const std::string& file, const ParsedInput& input, long coeff_cap) {
    Report r;
    r.file = file;
    r.input = input;
    const PlumbingGraph& g = input.graph;

    IntMatrix im = intersection_matrix(g);
    r.determinant_value = determinant(im);
    r.fillable = g.size() > 0 && im.symmetric() && is_negative_definite(im);
    if (!r.fillable) {
        r.warnings.push_back("intersection matrix is not negative definite:"
                             " not a singularity link; invariants suppressed");
        return r;
    }

    r.h1 = smith_normal_form(im);
    if (r.h1->order != abs(r.determinant_value))
        throw std::logic_error("report: |H1| disagrees with |det|");

    if (!g.is_tree()) {
        r.warnings.push_back("plumbing graph is not a tree: cycle and open book"
                             " invariants suppressed");
        return r;
    }
    if (!g.all_genus_zero()) {
        r.warnings.push_back("higher-genus vertex present: cycle and open book"
                             " invariants suppressed");
        return r;
    }

    r.rationality = is_rational(g, coeff_cap);
    if (r.rationality->rational) {
        r.minimal_openbook = minimal_milnor_openbook(g);
        r.support = input.seifert ? classify_support(g, *input.seifert) : classify_support(g);
    } else {
        r.warnings.push_back("not a rational singularity link: Milnor open book"
                             " invariants unavailable");
    }

    bool all_low = true;
    for (const Vertex& v : g.vertices()) all_low = all_low && v.weight <= -2;
    if (all_low) {
        r.diagram = canonical_surgery_diagram(g);
        r.adjunction = adjunction_check(*r.diagram, g);
    } else {
        r.warnings.push_back("some weight exceeds -2: canonical Legendrian diagram"
                             " not emitted");
    }
    return r;
}

json report_to_json(const Report& r) {
    json j;
    j["file"] = r.file;
    j["input"] = input_to_json(r.input);
    j["determinant"] = json_int(r.determinant_value);
    j["fillable"] = r.fillable;
    if (r.rationality) {
        json cert;
        cert["rational"] = r.rationality->rational;
        cert["cycle"] = json_vector(r.rationality->cycle.z);
        cert["certificate_sum"] = json_int(r.rationality->sum);
        j["rational"] = std::move(cert);
        j["fundamental_cycle"] = json_vector(r.rationality->cycle.z);
    }
    if (r.h1) j["h1"] = h1_to_json(*r.h1);
    if (r.minimal_openbook && r.support)
        j["openbook"] = openbook_to_json(*r.minimal_openbook, *r.support);
    if (r.diagram && r.adjunction) j["diagram"] = diagram_to_json(*r.diagram, *r.adjunction);
    j["warnings"] = r.warnings;
    return j;
}

std::string report_to_table(const Report& r) {
    std::ostringstream out;
    out << "file:            " << r.file << '\n';
    out << "vertices:        " << r.input.graph.size() << '\n';
    out << "determinant:     " << r.determinant_value.get_str() << '\n';
    out << "fillable:        " << (r.fillable ? "yes" : "no") << '\n';
    if (r.rationality) {
        out << "rational:        " << (r.rationality->rational ? "yes" : "no")
            << "  (Artin sum " << r.rationality->sum.get_str() << ")\n";
        out << "fundamental Z:   (";
        for (std::size_t i = 0; i < r.rationality->cycle.z.size(); ++i)
            out << (i ? "," : "") << r.rationality->cycle.z[i].get_str();
        out << ")\n";
    }
    if (r.h1) {
        out << "H1:              rank " << r.h1->rank;
        if (!r.h1->invariant_factors.empty()) {
            out << ", factors (";
            for (std::size_t i = 0; i < r.h1->invariant_factors.size(); ++i)
                out << (i ? "," : "") << r.h1->invariant_factors[i].get_str();
            out << ")";
        }
        out << ", order " << r.h1->order.get_str() << '\n';
    }
    if (r.minimal_openbook && r.support) {
        const MilnorOpenBook& ob = *r.minimal_openbook;
        out << "Milnor genus:    " << ob.page_genus.get_str() << '\n';
        out << "Milnor binding:  " << ob.binding_count.get_str() << '\n';
        out << "Milnor norm:     " << ob.norm.get_str() << '\n';
        out << "support class:   " << support_kind_name(r.support->kind);
        if (r.support->kind == SupportKind::Higher)
            out << "(" << r.support->genus.get_str() << ")";
        out << '\n';
    }
    if (r.diagram && r.adjunction) {
        out << "diagram:         " << r.diagram->components.size()
            << " components, adjunction certificate "
            << (r.adjunction->certified ? "holds" : "FAILS") << '\n';
        for (const auto& c : r.diagram->components)
            out << "  " << c.vertex << ": tb " << c.tb.get_str() << ", rot " << c.rot.get_str()
                << ", surgery " << c.surgery.get_str() << '\n';
    }
    for (const auto& w : r.warnings) out << "warning:         " << w << '\n';
    return out.str();
}

}  // namespace linkinv
