#include "orthopoly/expand.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>
#include <utility>

#include "orthopoly/subproduct_tree.hpp"

namespace orthopoly {

namespace {

struct AscentBounds {
    u32 depth;
    // Degree bounds of the per-node vector pairs: deg(v0) < lo(j),
    // deg(v1) < hi(j).
    std::size_t lo(u32 j) const {
        const std::size_t e = std::size_t{1} << (depth - j);
        return (e >= 3 ? e - 3 : 0) + 1;
    }
    std::size_t hi(u32 j) const { return (std::size_t{1} << (depth - j)) - 1; }
};

// The internal pad() below only covers the power-of-two extension; the
// family itself must define F_0 .. F_{n-1}.
void require_indices(const RecurrenceFamily& fam, u64 needed) {
    if (fam.available_length() < needed) {
        throw FamilyError(fam.available_length() + 1,
                          "conversion needs recurrence indices up to " + std::to_string(needed) +
                              " but the family provides " + std::to_string(fam.available_length()));
    }
}

} // namespace

Poly expand(const RecurrenceFamily& fam, std::span<const Fp> alpha) {
    if (alpha.empty()) throw std::invalid_argument("expand: empty coefficient vector");
    const std::size_t n0 = alpha.size();
    if (n0 == 1) return Poly{alpha[0]};
    require_indices(fam, n0 - 1);
    if (n0 == 2) { // alpha_0 F_0 + alpha_1 F_1, no tree needed
        const Field& F = fam.field();
        Triple t1 = fam.triple(1);
        return Poly{F.add(alpha[0], F.mul(alpha[1], t1.b)), F.mul(alpha[1], t1.a)};
    }

    const Field& F = fam.field();
    const std::size_t n = std::bit_ceil(n0);
    const u32 d = static_cast<u32>(std::bit_width(n)) - 1;
    [[maybe_unused]] const AscentBounds bounds{d};
    const RecurrenceFamily padded = pad(fam, n - 1);
    const SubproductTree tree = build_tree(padded, n);

    auto coeff = [&](std::size_t i) { return i < n0 ? alpha[i] : Fp{0}; };
    std::vector<std::pair<Poly, Poly>> level(n / 2);
    for (std::size_t i = 0; i < n / 2; ++i) {
        level[i] = {Poly{coeff(2 * i)}, Poly{coeff(2 * i + 1)}};
    }

    for (u32 j = d - 1; j-- > 0;) {
        std::vector<std::pair<Poly, Poly>> next(std::size_t{1} << j);
        for (std::size_t i = 0; i < next.size(); ++i) {
            const TransitionMatrix& L = tree.node(j + 1, 2 * i);
            const Poly& w0 = level[2 * i + 1].first;
            const Poly& w1 = level[2 * i + 1].second;
            Poly v0 = poly_add(F, level[2 * i].first,
                               poly_add(F, poly_mul(F, w0, L.m00), poly_mul(F, w1, L.m10)));
            Poly v1 = poly_add(F, level[2 * i].second,
                               poly_add(F, poly_mul(F, w0, L.m01), poly_mul(F, w1, L.m11)));
            assert(v0.size() <= bounds.lo(j) && v1.size() <= bounds.hi(j));
            next[i] = {std::move(v0), std::move(v1)};
        }
        level = std::move(next);
    }

    Triple t1 = padded.triple(1);
    Poly result = poly_add(F, level[0].first,
                           poly_mul(F, level[0].second, Poly{t1.b, t1.a}));
    result.resize(n, Fp{0});
#ifndef NDEBUG
    for (std::size_t i = n0; i < n; ++i) assert(result[i].v == 0);
#endif
    result.resize(n0);
    return result;
}

std::vector<Fp> expand_transposed(const RecurrenceFamily& fam, std::span<const Fp> u) {
    if (u.empty()) throw std::invalid_argument("expand_transposed: empty input vector");
    const std::size_t n0 = u.size();
    if (n0 == 1) return {u[0]};
    require_indices(fam, n0 - 1);
    if (n0 == 2) {
        const Field& F = fam.field();
        Triple t1 = fam.triple(1);
        return {u[0], F.add(F.mul(t1.b, u[0]), F.mul(t1.a, u[1]))};
    }

    const Field& F = fam.field();
    const std::size_t n = std::bit_ceil(n0);
    const u32 d = static_cast<u32>(std::bit_width(n)) - 1;
    const AscentBounds bounds{d};
    const RecurrenceFamily padded = pad(fam, n - 1);
    const SubproductTree tree = build_tree(padded, n);

    Poly input(u.begin(), u.end());
    input.resize(n, Fp{0});

    Triple t1 = padded.triple(1);
    std::vector<std::pair<Poly, Poly>> level(1);
    level[0].first = poly_mul_transposed(F, input, Poly{F.one()}, bounds.lo(0));
    level[0].second = poly_mul_transposed(F, input, Poly{t1.b, t1.a}, bounds.hi(0));

    for (u32 j = 0; j + 1 < d; ++j) {
        std::vector<std::pair<Poly, Poly>> next(std::size_t{1} << (j + 1));
        const std::size_t lo = bounds.lo(j + 1);
        const std::size_t hi = bounds.hi(j + 1);
        for (std::size_t i = std::size_t{1} << j; i-- > 0;) {
            const TransitionMatrix& L = tree.node(j + 1, 2 * i);
            const Poly& v0 = level[i].first;
            const Poly& v1 = level[i].second;
            next[2 * i].first = trunc(v0, lo);
            next[2 * i].second = trunc(v1, hi);
            next[2 * i + 1].first = poly_add(F, poly_mul_transposed(F, v0, L.m00, lo),
                                             poly_mul_transposed(F, v1, L.m01, lo));
            next[2 * i + 1].second = poly_add(F, poly_mul_transposed(F, v0, L.m10, hi),
                                              poly_mul_transposed(F, v1, L.m11, hi));
        }
        level = std::move(next);
    }

    // At the bottom every v0/v1 is a single scalar; concatenate in
    // index order and drop the padding tail.
    std::vector<Fp> out(n, Fp{0});
    for (std::size_t i = 0; i < n / 2; ++i) {
        out[2 * i] = level[i].first.empty() ? Fp{0} : level[i].first[0];
        out[2 * i + 1] = level[i].second.empty() ? Fp{0} : level[i].second[0];
    }
    out.resize(n0);
    return out;
}

} // namespace orthopoly
