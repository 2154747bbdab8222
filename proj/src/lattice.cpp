#include "linkinv/lattice.hpp"

#include <algorithm>
#include <utility>

namespace linkinv {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : dim_(rows.size()), data_() {
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) throw PreconditionError("ragged matrix literal");
        for (const Int& v : row) data_.push_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (dim_ != other.dim_) throw PreconditionError("matrix dimension mismatch");
    IntMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
    if (v.size() != dim_) throw PreconditionError("matrix/vector dimension mismatch");
    std::vector<Int> out(dim_, Int(0));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(i, j) = -(*this)(i, j);
    return out;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != dim_) throw PreconditionError("permutation size mismatch");
    IntMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(i, j) = (*this)(perm[i], perm[j]);
    return out;
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
    IntMatrix m(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) m(i, i) = g.vertex(i).weight;
    for (const auto& [a, b] : g.edges()) {
        m(a, b) += 1;
        m(b, a) += 1;
    }
    return m;
}

Int determinant(const IntMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == k) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

bool is_negative_definite(const IntMatrix& m) {
    if (!m.symmetric()) throw PreconditionError("definiteness test requires a symmetric matrix");
    const std::size_t n = m.dim();
    // Bareiss without pivoting on -m: after stage k the pivot equals the
    // (k+1)-th leading principal minor, which Sylvester requires positive.
    IntMatrix a = m.negated();
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return true;
}

namespace {

// Smallest-magnitude nonzero entry of the trailing submatrix, if any.
bool locate_pivot(const IntMatrix& a, std::size_t s, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = s; i < a.dim(); ++i)
        for (std::size_t j = s; j < a.dim(); ++j) {
            if (a(i, j) == 0) continue;
            Int mag = abs(a(i, j));
            if (!found || mag < best) {
                found = true;
                best = mag;
                pi = i;
                pj = j;
            }
        }
    return found;
}

bool lone_pivot(const IntMatrix& a, std::size_t s) {
    for (std::size_t i = s + 1; i < a.dim(); ++i)
        if (a(i, s) != 0) return false;
    for (std::size_t j = s + 1; j < a.dim(); ++j)
        if (a(s, j) != 0) return false;
    return true;
}

}  // namespace

HomologyStructure smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t n = a.dim();
    std::vector<Int> diag;
    for (std::size_t s = 0; s < n; ++s) {
        std::size_t pi = s, pj = s;
        if (!locate_pivot(a, s, pi, pj)) break;  // trailing block is zero
        for (;;) {
            // Move the smallest entry to (s,s); it controls coefficient growth.
            if (pi != s)
                for (std::size_t j = 0; j < n; ++j) std::swap(a(s, j), a(pi, j));
            if (pj != s)
                for (std::size_t i = 0; i < n; ++i) std::swap(a(i, s), a(i, pj));
            for (std::size_t i = s + 1; i < n; ++i) {
                if (a(i, s) == 0) continue;
                Int q = a(i, s) / a(s, s);
                if (q != 0)
                    for (std::size_t j = s; j < n; ++j) a(i, j) -= q * a(s, j);
            }
            for (std::size_t j = s + 1; j < n; ++j) {
                if (a(s, j) == 0) continue;
                Int q = a(s, j) / a(s, s);
                if (q != 0)
                    for (std::size_t i = s; i < n; ++i) a(i, j) -= q * a(i, s);
            }
            if (!lone_pivot(a, s)) {
                locate_pivot(a, s, pi, pj);
                continue;
            }
            // Divisibility fixup: fold a non-multiple into the pivot row.
            bool divides_all = true;
            for (std::size_t i = s + 1; i < n && divides_all; ++i)
                for (std::size_t j = s + 1; j < n; ++j)
                    if (a(i, j) % a(s, s) != 0) {
                        for (std::size_t jj = s; jj < n; ++jj) a(s, jj) += a(i, jj);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
            locate_pivot(a, s, pi, pj);
        }
        diag.push_back(abs(a(s, s)));
    }

    HomologyStructure h;
    h.rank = n - diag.size();
    h.order = h.rank > 0 ? Int(0) : Int(1);
    for (const Int& d : diag) {
        if (d >= 2) h.invariant_factors.push_back(d);
        if (h.rank == 0) h.order *= d;
    }
    return h;
}

Int h1_order_three_holed(const Int& q, const Int& r, const Int& s) {
    Int expected = q * r + q * s + r * s;
    IntMatrix link{{Int(0), Int(1), Int(1), Int(1)},
                   {Int(1), q, Int(0), Int(0)},
                   {Int(1), Int(0), r, Int(0)},
                   {Int(1), Int(0), Int(0), s}};
    if (abs(determinant(link)) != abs(expected))
        throw std::logic_error("h1_order_three_holed: formula and linking matrix disagree");
    return expected;
}

}  // namespace linkinv
