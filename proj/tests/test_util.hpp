#ifndef ORTHOPOLY_TEST_UTIL_HPP
#define ORTHOPOLY_TEST_UTIL_HPP

// Shared helpers and independent reference implementations used as
// oracles. Everything here is deliberately written the slow, obvious
// way and avoids the fast code paths under test.

#include <random>
#include <span>
#include <vector>

#include "orthopoly/field.hpp"
#include "orthopoly/poly.hpp"
#include "orthopoly/recurrence.hpp"
#include "orthopoly/subproduct_tree.hpp"

namespace testutil {

using orthopoly::Field;
using orthopoly::Fp;
using orthopoly::Poly;
using orthopoly::RecurrenceFamily;
using orthopoly::TransitionMatrix;
using orthopoly::Triple;
using orthopoly::u64;

struct Rng {
    explicit Rng(u64 seed) : gen(seed) {}

    u64 next() { return gen(); }

    Fp element(const Field& F) { return F.from_uint(gen()); }

    Fp nonzero(const Field& F) {
        Fp x;
        do {
            x = element(F);
        } while (x.v == 0);
        return x;
    }

    std::vector<Fp> vec(const Field& F, std::size_t n) {
        std::vector<Fp> out(n);
        for (Fp& x : out) x = element(F);
        return out;
    }

    // Valid random family of the given available length: a_i and c_i
    // nonzero, b_i arbitrary.
    RecurrenceFamily family(const Field& F, std::size_t len) {
        std::vector<Fp> a(len), b(len), c(len);
        for (std::size_t i = 0; i < len; ++i) {
            a[i] = nonzero(F);
            b[i] = element(F);
            c[i] = nonzero(F);
        }
        return RecurrenceFamily::custom(F, std::move(a), std::move(b), std::move(c));
    }

    std::mt19937_64 gen;
};

inline bool poly_eq(const Poly& x, const Poly& y) {
    const std::size_t n = std::max(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        u64 xv = i < x.size() ? x[i].v : 0;
        u64 yv = i < y.size() ? y[i].v : 0;
        if (xv != yv) return false;
    }
    return true;
}

inline Fp dot(const Field& F, std::span<const Fp> a, std::span<const Fp> b) {
    Fp acc = F.zero();
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) acc = F.add(acc, F.mul(a[i], b[i]));
    return acc;
}

inline Poly ref_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Fp{0});
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
        }
    }
    return out;
}

inline Poly ref_add(const Field& F, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Fp{0});
    for (std::size_t i = 0; i < out.size(); ++i) {
        Fp x = i < a.size() ? a[i] : Fp{0};
        Fp y = i < b.size() ? b[i] : Fp{0};
        out[i] = F.add(x, y);
    }
    return out;
}

// F_0 .. F_{n-1} by running the recurrence directly.
inline std::vector<Poly> ref_basis(const RecurrenceFamily& fam, u64 n) {
    const Field& F = fam.field();
    std::vector<Poly> out;
    out.reserve(n);
    Poly prev2;
    Poly prev{F.one()};
    out.push_back(prev);
    for (u64 i = 1; i < n; ++i) {
        Triple t = fam.triple(i);
        Poly cur = ref_add(F, ref_mul(F, Poly{t.b, t.a}, prev),
                           ref_mul(F, Poly{t.c}, prev2));
        cur.resize(i + 1, Fp{0});
        prev2 = prev;
        prev = cur;
        out.push_back(cur);
    }
    return out;
}

// Companion sequence: G_{-1} = 0, G_0 = 1,
// G_i = (a_{i+1} x + b_{i+1}) G_{i-1} + c_{i+1} G_{i-2}.
inline Poly ref_g(const RecurrenceFamily& fam, u64 idx) {
    const Field& F = fam.field();
    Poly prev2;
    Poly prev{F.one()};
    for (u64 i = 1; i <= idx; ++i) {
        Triple t = fam.triple(i + 1);
        Poly cur = ref_add(F, ref_mul(F, Poly{t.b, t.a}, prev),
                           ref_mul(F, Poly{t.c}, prev2));
        cur.resize(i + 1, Fp{0});
        prev2 = prev;
        prev = cur;
    }
    return prev;
}

inline TransitionMatrix ref_elementary(const RecurrenceFamily& fam, u64 i) {
    const Field& F = fam.field();
    Triple t = fam.triple(i + 1);
    return TransitionMatrix{Poly{}, Poly{F.one()}, Poly{t.c}, Poly{t.b, t.a}};
}

inline TransitionMatrix ref_mat_mul(const Field& F, const TransitionMatrix& x,
                                    const TransitionMatrix& y) {
    TransitionMatrix out;
    out.m00 = ref_add(F, ref_mul(F, x.m00, y.m00), ref_mul(F, x.m01, y.m10));
    out.m01 = ref_add(F, ref_mul(F, x.m00, y.m01), ref_mul(F, x.m01, y.m11));
    out.m10 = ref_add(F, ref_mul(F, x.m10, y.m00), ref_mul(F, x.m11, y.m10));
    out.m11 = ref_add(F, ref_mul(F, x.m10, y.m01), ref_mul(F, x.m11, y.m11));
    return out;
}

// M^(lo,hi): left-to-right product of the elementary matrices for
// steps lo .. hi-1 (identity when lo == hi).
inline TransitionMatrix ref_transition_product(const RecurrenceFamily& fam, u64 lo, u64 hi) {
    const Field& F = fam.field();
    TransitionMatrix acc{Poly{F.one()}, Poly{}, Poly{}, Poly{F.one()}};
    for (u64 i = lo; i < hi; ++i) {
        acc = ref_mat_mul(F, ref_elementary(fam, i), acc);
    }
    return acc;
}

inline bool mat_eq(const TransitionMatrix& x, const TransitionMatrix& y) {
    return poly_eq(x.m00, y.m00) && poly_eq(x.m01, y.m01) &&
           poly_eq(x.m10, y.m10) && poly_eq(x.m11, y.m11);
}

// L(P) evaluated against a moment table.
inline Fp apply_form(const Field& F, const Poly& moments, const Poly& p) {
    Fp acc = F.zero();
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc = F.add(acc, F.mul(p[i], moments[i]));
    }
    return acc;
}

} // namespace testutil

#endif // ORTHOPOLY_TEST_UTIL_HPP
