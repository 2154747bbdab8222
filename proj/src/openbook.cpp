#include "linkinv/openbook.hpp"

#include <sstream>

#include "linkinv/lattice.hpp"

namespace linkinv {

MilnorOpenBook milnor_openbook(const PlumbingGraph& g, const Cycle& m) {
    if (m.z.size() != g.size()) throw PreconditionError("cycle length does not match graph");
    for (std::size_t i = 0; i < m.z.size(); ++i)
        if (m.z[i] < 1)
            throw PreconditionError("cycle entry m[" + std::to_string(i) + "] = " +
                                    m.z[i].get_str() + " is not positive");
    RationalityCertificate cert = is_rational(g);
    if (!cert.rational)
        throw PreconditionError("Milnor open book invariants require a rational singularity link"
                                " (Artin sum " + cert.sum.get_str() + ")");

    const IntMatrix im = intersection_matrix(g);
    std::vector<Int> products = im * m.z;

    MilnorOpenBook ob;
    ob.m = m;
    ob.n.reserve(g.size());
    std::ostringstream bad;
    Int binding = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        Int ni = -products[i];
        if (ni < 0) bad << (bad.tellp() > 0 ? ", " : "") << "n[" << i << "] = " << ni.get_str();
        binding += ni;
        ob.n.push_back(std::move(ni));
    }
    if (bad.tellp() > 0)
        throw PreconditionError("m is not an allowable divisor class: " + bad.str());
    if (binding == 0)
        throw PreconditionError("m is not an allowable divisor class: binding vector is zero");

    Int twice = 0;  // sum of (d_i - 2) m_i + (m_i - 1) n_i
    for (std::size_t i = 0; i < g.size(); ++i) {
        twice += (Int(static_cast<long>(g.degree(i))) - 2) * m.z[i];
        twice += (m.z[i] - 1) * ob.n[i];
    }
    if (twice % 2 != 0) throw std::logic_error("open book genus formula returned an odd sum");
    ob.page_genus = 1 + twice / 2;
    if (ob.page_genus < 0) throw std::logic_error("open book genus formula returned genus < 0");
    ob.binding_count = binding;
    ob.norm = 2 * ob.page_genus - 2 + ob.binding_count;
    return ob;
}

MilnorOpenBook minimal_milnor_openbook(const PlumbingGraph& g) {
    return milnor_openbook(g, fundamental_cycle(g));
}

PlanarInvariants planar_invariants(const PlumbingGraph& g) {
    std::vector<std::string> bad = bad_vertices(g);
    if (!bad.empty()) {
        std::string msg = "bad vertex present:";
        for (const auto& id : bad) msg += " " + id;
        throw PreconditionError(msg);
    }
    Int binding = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        binding -= g.vertex(i).weight + Int(static_cast<long>(g.degree(i)));

    // The all-ones cycle must be fundamental here, so the closed form and the
    // minimal open book have to agree.
    MilnorOpenBook ob = minimal_milnor_openbook(g);
    bool all_ones = true;
    for (const Int& zi : ob.m.z) all_ones = all_ones && zi == 1;
    if (!all_ones || ob.page_genus != 0 || ob.binding_count != binding)
        throw std::logic_error("planar invariants disagree with the minimal Milnor open book");

    return PlanarInvariants{Int(0), binding, binding - 2};
}

SupportClass classify_support(const PlumbingGraph& g) {
    MilnorOpenBook ob = minimal_milnor_openbook(g);
    SupportClass sc;
    sc.genus = ob.page_genus;
    sc.kind = ob.page_genus == 0   ? SupportKind::Planar
              : ob.page_genus == 1 ? SupportKind::Elliptic
                                   : SupportKind::Higher;
    return sc;
}

SupportClass classify_support(const PlumbingGraph& g, const SeifertData& s) {
    SupportClass sc = classify_support(g);
    bool planar = sc.kind == SupportKind::Planar;
    if (planar != (s.e0 <= -3))
        throw std::logic_error("support classification contradicts the e0 <= -3 criterion");
    return sc;
}

const char* support_kind_name(SupportKind k) {
    switch (k) {
        case SupportKind::Planar: return "planar";
        case SupportKind::Elliptic: return "elliptic";
        case SupportKind::Higher: return "higher";
    }
    return "?";
}

HeegaardBounds heegaard_bounds(const Int& page_genus, const Int& binding_count,
                               std::optional<Int> heegaard_genus) {
    if (page_genus < 0) throw PreconditionError("page genus must be nonnegative");
    if (binding_count < 1) throw PreconditionError("binding count must be at least 1");
    HeegaardBounds hb;
    hb.heegaard_upper = 2 * page_genus + binding_count - 1;
    hb.page_norm = 2 * page_genus + binding_count - 2;
    if (heegaard_genus) {
        hb.heegaard_genus = *heegaard_genus;
        hb.support_norm_lower = *heegaard_genus - 1;  // Hg <= 1 + sn
        hb.rank_pi1_upper = *heegaard_genus;          // rk(pi_1) <= Hg
    }
    return hb;
}

}  // namespace linkinv
