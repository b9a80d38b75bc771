#ifndef ORTHOPOLY_SUBPRODUCT_TREE_HPP
#define ORTHOPOLY_SUBPRODUCT_TREE_HPP

#include <cstddef>
#include <vector>

#include "orthopoly/poly.hpp"
#include "orthopoly/recurrence.hpp"

namespace orthopoly {

// 2x2 polynomial matrix advancing a pair of consecutive family
// members: (F_{i-1}, F_i) -> (F_i, F_{i+1}).
struct TransitionMatrix {
    Poly m00, m01, m10, m11;
};

// The elementary matrix for step i >= 0:
//   [ 0         1               ]
//   [ c_{i+1}   a_{i+1} x + b_{i+1} ]
TransitionMatrix transition(const RecurrenceFamily& fam, u64 i);

// lhs * rhs with 8 polynomial multiplications.
TransitionMatrix mat_mul(const Field& F, const TransitionMatrix& lhs,
                         const TransitionMatrix& rhs);

// Binary tree of products of consecutive transition matrices for a
// conversion of size n = 2^d. Level d-1 holds the pairwise leaf
// products, and each inner node is the product of its two children
// (right child times left child, so ranges compose left to right).
// The node at (j, i) covers steps [2^(d-j) i + 1, 2^(d-j) (i+1) + 1).
//
// The rightmost node of every level is never consumed by the
// conversions and is not stored: level j holds indices 0..2^j-2, so
// level 0 is always empty. Entry (u, v) of a level-j node has degree
// at most 2^(d-j) - 2 + u + v.
class SubproductTree {
public:
    u32 depth() const noexcept { return depth_; }
    std::size_t level_size(u32 j) const { return levels_[j].size(); }
    const TransitionMatrix& node(u32 j, std::size_t i) const { return levels_[j][i]; }

private:
    friend SubproductTree build_tree(const RecurrenceFamily&, u64);
    u32 depth_ = 0;
    std::vector<std::vector<TransitionMatrix>> levels_;
};

// Requires n = 2^d with d >= 1 (callers pad first) and the family
// valid up to index n-1. For n = 2 the tree stores no matrices.
SubproductTree build_tree(const RecurrenceFamily& fam, u64 n);

} // namespace orthopoly

#endif // ORTHOPOLY_SUBPRODUCT_TREE_HPP
