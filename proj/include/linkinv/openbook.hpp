#pragma once

#include <optional>
#include <vector>

#include "linkinv/common.hpp"
#include "linkinv/cycle.hpp"
#include "linkinv/graph.hpp"

namespace linkinv {

// Horizontal open book attached to a cycle m with I(G) m = -n.
struct MilnorOpenBook {
    Cycle m;
    std::vector<Int> n;  // binding vector, nonnegative, not all zero
    Int page_genus;
    Int binding_count;   // sum of n
    Int norm;            // 2*page_genus - 2 + binding_count
};

// Requires a negative definite rational tree and a valid m (all entries >= 1,
// -I(G)m componentwise >= 0 and nonzero). Genus by
//   g = 1 + sum_i ((d_i - 2) m_i + (m_i - 1) n_i) / 2
// with d_i the vertex degree.
MilnorOpenBook milnor_openbook(const PlumbingGraph& g, const Cycle& m);

// The open book of the fundamental cycle; realizes Mg, Mb, Mn of the canonical
// contact structure.
MilnorOpenBook minimal_milnor_openbook(const PlumbingGraph& g);

struct PlanarInvariants {
    Int genus;    // always 0
    Int binding;  // -sum_i (e_i + d_i)
    Int norm;     // binding - 2
};

// Closed form for trees without bad vertices; asserts agreement with
// minimal_milnor_openbook (the all-ones cycle must be fundamental).
PlanarInvariants planar_invariants(const PlumbingGraph& g);

enum class SupportKind { Planar, Elliptic, Higher };

struct SupportClass {
    SupportKind kind;
    Int genus;  // minimal Milnor page genus
};

SupportClass classify_support(const PlumbingGraph& g);
// Seifert inputs additionally cross-check planar <=> e0 <= -3.
SupportClass classify_support(const PlumbingGraph& g, const SeifertData& s);

const char* support_kind_name(SupportKind k);

struct HeegaardBounds {
    Int heegaard_upper;  // 2g + r - 1, genus of the doubled-page splitting
    Int page_norm;       // 2g + r - 2 = -Euler characteristic of the page
    std::optional<Int> heegaard_genus;      // echoed when supplied
    std::optional<Int> support_norm_lower;  // Hg - 1 <= sn
    std::optional<Int> rank_pi1_upper;      // rk(pi_1) <= Hg
};

HeegaardBounds heegaard_bounds(const Int& page_genus, const Int& binding_count,
                               std::optional<Int> heegaard_genus = std::nullopt);

}  // namespace linkinv
