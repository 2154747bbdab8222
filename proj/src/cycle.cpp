#include "linkinv/cycle.hpp"

#include <numeric>

#include "linkinv/lattice.hpp"

namespace linkinv {

namespace {

void check_laufer_preconditions(const PlumbingGraph& g) {
    if (g.size() == 0) throw PreconditionError("empty graph");
    if (!g.all_genus_zero())
        throw PreconditionError("fundamental cycle requires all vertex genera zero");
    if (!g.is_tree())
        throw PreconditionError(g.connected() ? "plumbing graph contains a cycle"
                                              : "plumbing graph is disconnected");
    if (!is_negative_definite(intersection_matrix(g)))
        throw PreconditionError("intersection matrix is not negative definite");
}

}  // namespace

Cycle fundamental_cycle(const PlumbingGraph& g, const std::vector<std::size_t>& scan_order,
                        long coeff_cap) {
    check_laufer_preconditions(g);
    if (scan_order.size() != g.size()) throw PreconditionError("scan order size mismatch");

    const IntMatrix im = intersection_matrix(g);
    std::vector<Int> z(g.size(), Int(1));
    std::vector<Int> products = im * z;  // products[i] = Z.E_i, updated incrementally
    const Int cap(coeff_cap);

    for (;;) {
        bool bumped = false;
        for (std::size_t idx : scan_order) {
            if (products[idx] > 0) {
                z[idx] += 1;
                if (z[idx] > cap)
                    throw PreconditionError("fundamental cycle coefficient exceeded cap");
                for (std::size_t j = 0; j < g.size(); ++j) products[j] += im(j, idx);
                bumped = true;
                break;  // restart the scan after each increment
            }
        }
        if (!bumped) return Cycle{std::move(z)};
    }
}

Cycle fundamental_cycle(const PlumbingGraph& g, long coeff_cap) {
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return fundamental_cycle(g, order, coeff_cap);
}

RationalityCertificate is_rational(const PlumbingGraph& g, long coeff_cap) {
    RationalityCertificate cert;
    cert.cycle = fundamental_cycle(g, coeff_cap);
    const IntMatrix im = intersection_matrix(g);
    std::vector<Int> products = im * cert.cycle.z;
    Int sum = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        sum += cert.cycle.z[i] * products[i];                       // Z.Z
        sum += cert.cycle.z[i] * (-g.vertex(i).weight - 2);          // z_i(-e_i - 2)
    }
    cert.sum = sum;
    cert.rational = (sum == -2);
    return cert;
}

std::vector<std::string> bad_vertices(const PlumbingGraph& g) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.vertex(i).weight + Int(static_cast<long>(g.degree(i))) > 0)
            out.push_back(g.vertex(i).id);
    return out;
}

}  // namespace linkinv
