#include "orthopoly/subproduct_tree.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace orthopoly {

TransitionMatrix transition(const RecurrenceFamily& fam, u64 i) {
    const Field& F = fam.field();
    Triple t = fam.triple(i + 1);
    return TransitionMatrix{
        Poly{},            // 0
        Poly{F.one()},     // 1
        Poly{t.c},         // c_{i+1}
        Poly{t.b, t.a},    // a_{i+1} x + b_{i+1}
    };
}

TransitionMatrix mat_mul(const Field& F, const TransitionMatrix& lhs,
                         const TransitionMatrix& rhs) {
    TransitionMatrix out;
    out.m00 = poly_add(F, poly_mul(F, lhs.m00, rhs.m00), poly_mul(F, lhs.m01, rhs.m10));
    out.m01 = poly_add(F, poly_mul(F, lhs.m00, rhs.m01), poly_mul(F, lhs.m01, rhs.m11));
    out.m10 = poly_add(F, poly_mul(F, lhs.m10, rhs.m00), poly_mul(F, lhs.m11, rhs.m10));
    out.m11 = poly_add(F, poly_mul(F, lhs.m10, rhs.m01), poly_mul(F, lhs.m11, rhs.m11));
    return out;
}

namespace {

#ifndef NDEBUG
void assert_degree_bounds(const TransitionMatrix& m, u32 d, u32 j) {
    const long base = (long{1} << (d - j)) - 2;
    assert(poly_degree(m.m00) <= base);
    assert(poly_degree(m.m01) <= base + 1);
    assert(poly_degree(m.m10) <= base + 1);
    assert(poly_degree(m.m11) <= base + 2);
}
#endif

} // namespace

SubproductTree build_tree(const RecurrenceFamily& fam, u64 n) {
    if (n < 2 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("build_tree: n must be a power of two, n >= 2");
    }
    const Field& F = fam.field();
    const u32 d = static_cast<u32>(std::bit_width(n)) - 1;

    SubproductTree tree;
    tree.depth_ = d;
    tree.levels_.resize(d);
    for (u32 j = 0; j < d; ++j) {
        tree.levels_[j].resize((std::size_t{1} << j) - 1);
    }
    if (d == 1) return tree;

    auto& leaves = tree.levels_[d - 1];
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        leaves[i] = mat_mul(F, transition(fam, 2 * i + 2), transition(fam, 2 * i + 1));
#ifndef NDEBUG
        assert_degree_bounds(leaves[i], d, d - 1);
#endif
    }
    for (u32 j = d - 2; j >= 1; --j) {
        auto& level = tree.levels_[j];
        const auto& below = tree.levels_[j + 1];
        for (std::size_t i = 0; i < level.size(); ++i) {
            level[i] = mat_mul(F, below[2 * i + 1], below[2 * i]);
#ifndef NDEBUG
            assert_degree_bounds(level[i], d, j);
#endif
        }
    }
    return tree;
}

} // namespace orthopoly
