#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "linkinv/common.hpp"
#include "linkinv/graph.hpp"

namespace linkinv {

// Dense square matrix of exact integers. Row/column order is inherited from
// the vertex order of the graph that produced it.
class IntMatrix {
public:
    IntMatrix() : dim_(0) {}
    explicit IntMatrix(std::size_t n) : dim_(n), data_(n * n, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t dim() const { return dim_; }
    Int& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    bool symmetric() const;
    IntMatrix operator*(const IntMatrix& other) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;
    bool operator==(const IntMatrix&) const = default;

    IntMatrix negated() const;
    IntMatrix permuted(const std::vector<std::size_t>& perm) const;  // simultaneous rows+cols

private:
    std::size_t dim_;
    std::vector<Int> data_;
};

// Diagonal = vertex weights, off-diagonal (i,j) = number of edges between i and j.
IntMatrix intersection_matrix(const PlumbingGraph& g);

// Exact determinant by Bareiss fraction-free elimination. det of the empty
// 0x0 matrix is 1 (minor recursion base).
Int determinant(const IntMatrix& m);

// Sylvester criterion on -m: (-1)^k (k-th leading principal minor of m) > 0
// for all k. Rejects non-symmetric input.
bool is_negative_definite(const IntMatrix& m);

struct HomologyStructure {
    std::size_t rank = 0;              // number of zero diagonal entries
    std::vector<Int> invariant_factors;  // entries >= 2, each dividing the next
    Int order = 0;                     // product of factors, 0 when rank > 0
};

// Invariant factors of the integer matrix; for a negative-definite plumbing
// matrix this is H1 of the link, with rank 0.
HomologyStructure smith_normal_form(const IntMatrix& m);

// |H1| of the open book with planar 3-holed page and monodromy t1^q t2^r t3^s:
// returns qr+qs+rs, cross-checked against |det| of the 4x4 linking matrix
// [[0,1,1,1],[1,q,0,0],[1,0,r,0],[1,0,0,s]].
Int h1_order_three_holed(const Int& q, const Int& r, const Int& s);

}  // namespace linkinv
