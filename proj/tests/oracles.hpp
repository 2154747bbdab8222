#pragma once

// Independent oracles. These deliberately avoid the code paths they check:
// continued fractions are folded with raw integer pairs instead of mpq, and
// determinants expand by cofactors instead of elimination.

#include <utility>
#include <vector>

#include "linkinv/cycle.hpp"
#include "linkinv/graph.hpp"
#include "linkinv/lattice.hpp"
#include "linkinv/openbook.hpp"

namespace oracles {

using linkinv::Cycle;
using linkinv::Int;
using linkinv::IntMatrix;
using linkinv::PlumbingGraph;

// Fold a1 - 1/(a2 - 1/(...)) as a num/den pair, no rational class involved.
inline std::pair<Int, Int> cf_fold(const std::vector<Int>& terms) {
    Int num = terms.back(), den = 1;
    for (std::size_t i = terms.size() - 1; i-- > 0;) {
        // a - den/num = (a*num - den)/num
        Int nnum = terms[i] * num - den;
        den = num;
        num = nnum;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 0) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

inline Int det_cofactor(const IntMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = m(i, c);
            }
        }
        Int term = m(0, j) * det_cofactor(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

inline std::vector<Int> laufer_products(const PlumbingGraph& g, const std::vector<Int>& z) {
    return linkinv::intersection_matrix(g) * z;
}

inline bool anti_nef(const PlumbingGraph& g, const std::vector<Int>& z) {
    for (const Int& p : laufer_products(g, z))
        if (p > 0) return false;
    return true;
}

// All cycles m with 1 <= m_i <= bound_i and -I(G)m componentwise >= 0, != 0.
// Visits them with an odometer, keeping the matrix product incremental.
template <typename Fn>
void for_each_valid_cycle(const PlumbingGraph& g, const std::vector<Int>& bounds, Fn&& fn) {
    const IntMatrix im = linkinv::intersection_matrix(g);
    const std::size_t n = g.size();
    std::vector<Int> m(n, Int(1));
    std::vector<Int> products = im * m;
    for (;;) {
        bool valid = true;
        bool nonzero = false;
        for (std::size_t i = 0; i < n && valid; ++i) {
            if (products[i] > 0) valid = false;
            if (products[i] < 0) nonzero = true;
        }
        if (valid && nonzero) fn(Cycle{m});
        std::size_t pos = 0;
        while (pos < n) {
            if (m[pos] < bounds[pos]) {
                m[pos] += 1;
                for (std::size_t j = 0; j < n; ++j) products[j] += im(j, pos);
                break;
            }
            Int delta = m[pos] - 1;
            m[pos] = 1;
            for (std::size_t j = 0; j < n; ++j) products[j] -= im(j, pos) * delta;
            ++pos;
        }
        if (pos == n) return;
    }
}

}  // namespace oracles
