#pragma once

#include <string>
#include <vector>

#include "linkinv/common.hpp"
#include "linkinv/graph.hpp"

namespace linkinv {

// Effective divisor on the exceptional set, indexed by vertex order.
struct Cycle {
    std::vector<Int> z;

    bool operator==(const Cycle&) const = default;
};

inline constexpr long kDefaultCoeffCap = 1000000;

// Componentwise smallest positive cycle with Z.E_i <= 0 everywhere, by the
// increment scan: start at all ones, bump the first vertex (in scan order)
// whose product is positive, restart. Requires a tree, all genera zero and a
// negative definite intersection matrix. The cap aborts runaway growth if the
// definiteness check was bypassed.
Cycle fundamental_cycle(const PlumbingGraph& g, long coeff_cap = kDefaultCoeffCap);
Cycle fundamental_cycle(const PlumbingGraph& g, const std::vector<std::size_t>& scan_order,
                        long coeff_cap = kDefaultCoeffCap);

struct RationalityCertificate {
    bool rational = false;
    Cycle cycle;   // the fundamental cycle Z
    Int sum;       // Z.Z + sum_i z_i(-e_i - 2); rational iff equal to -2
};

// Artin's criterion on the fundamental cycle.
RationalityCertificate is_rational(const PlumbingGraph& g, long coeff_cap = kDefaultCoeffCap);

// Vertices with weight + degree > 0, in vertex order.
std::vector<std::string> bad_vertices(const PlumbingGraph& g);

}  // namespace linkinv
