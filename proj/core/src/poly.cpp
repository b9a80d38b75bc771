#include "orthopoly/poly.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>

namespace orthopoly {

long poly_degree(const Poly& f) noexcept {
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i].v != 0) return static_cast<long>(i);
    }
    return -1;
}

Poly trunc(const Poly& f, std::size_t k) {
    if (f.size() <= k) return f;
    return Poly(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    const Poly& lo = a.size() <= b.size() ? a : b;
    Poly out = a.size() <= b.size() ? b : a;
    for (std::size_t i = 0; i < lo.size(); ++i) out[i] = F.add(out[i], lo[i]);
    return out;
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        Fp x = i < a.size() ? a[i] : Fp{0};
        Fp y = i < b.size() ? b[i] : Fp{0};
        out[i] = F.sub(x, y);
    }
    return out;
}

namespace detail {

Poly mul_schoolbook(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Fp{0});
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].v == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
        }
    }
    return out;
}

namespace {

// out[offset ..] += src. The middle Karatsuba term carries a declared
// length that can formally stick out one slot past the product bound;
// the overhang is a cancellation artifact and always zero.
void accumulate(const Field& F, Poly& out, const Poly& src, std::size_t offset) {
    assert(offset <= out.size());
    const std::size_t n = std::min(src.size(), out.size() - offset);
    for (std::size_t i = 0; i < n; ++i) {
        out[offset + i] = F.add(out[offset + i], src[i]);
    }
#ifndef NDEBUG
    for (std::size_t i = n; i < src.size(); ++i) assert(src[i].v == 0);
#endif
}

} // namespace

Poly mul_karatsuba(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= kSchoolbookThreshold) {
        return mul_schoolbook(F, a, b);
    }
    const std::size_t h = (std::max(a.size(), b.size()) + 1) / 2;
    const Poly a0 = trunc(a, h);
    const Poly a1 = a.size() > h ? Poly(a.begin() + static_cast<std::ptrdiff_t>(h), a.end()) : Poly{};
    const Poly b0 = trunc(b, h);
    const Poly b1 = b.size() > h ? Poly(b.begin() + static_cast<std::ptrdiff_t>(h), b.end()) : Poly{};

    const Poly z0 = mul_karatsuba(F, a0, b0);
    const Poly z2 = mul_karatsuba(F, a1, b1);
    Poly z1 = mul_karatsuba(F, poly_add(F, a0, a1), poly_add(F, b0, b1));
    z1 = poly_sub(F, z1, z0);
    z1 = poly_sub(F, z1, z2);

    Poly out(a.size() + b.size() - 1, Fp{0});
    accumulate(F, out, z0, 0);
    accumulate(F, out, z1, h);
    accumulate(F, out, z2, 2 * h);
    return out;
}

void ntt(const Field& F, std::vector<Fp>& values, bool invert) {
    const std::size_t n = values.size();
    assert(n > 0 && (n & (n - 1)) == 0);
    if (n == 1) return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(values[i], values[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        Fp wlen = F.root_of_unity(len);
        if (invert) wlen = F.inv(wlen);
        for (std::size_t i = 0; i < n; i += len) {
            Fp w = F.one();
            for (std::size_t j = 0; j < len / 2; ++j) {
                Fp u = values[i + j];
                Fp v = F.mul(values[i + j + len / 2], w);
                values[i + j] = F.add(u, v);
                values[i + j + len / 2] = F.sub(u, v);
                w = F.mul(w, wlen);
            }
        }
    }

    if (invert) {
        Fp n_inv = F.inv(F.from_uint(n));
        for (Fp& x : values) x = F.mul(x, n_inv);
    }
}

Poly mul_ntt(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t out_len = a.size() + b.size() - 1;
    const std::size_t size = std::bit_ceil(out_len);
    if (static_cast<int>(std::bit_width(size)) - 1 > F.two_adicity()) {
        throw NttCapacityError("poly_mul: transform size " + std::to_string(size) +
                               " exceeds 2^" + std::to_string(F.two_adicity()) +
                               " supported by modulus " + std::to_string(F.modulus()));
    }
    std::vector<Fp> fa(a);
    std::vector<Fp> fb(b);
    fa.resize(size);
    fb.resize(size);
    ntt(F, fa, false);
    ntt(F, fb, false);
    for (std::size_t i = 0; i < size; ++i) fa[i] = F.mul(fa[i], fb[i]);
    ntt(F, fa, true);
    fa.resize(out_len);
    return fa;
}

} // namespace detail

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t lo = std::min(a.size(), b.size());
    const std::size_t hi = std::max(a.size(), b.size());
    if (lo < detail::kSchoolbookThreshold) return detail::mul_schoolbook(F, a, b);
    if (hi < detail::kKaratsubaThreshold) return detail::mul_karatsuba(F, a, b);
    return detail::mul_ntt(F, a, b);
}

Poly rev(const Poly& f, std::size_t m) {
    if (m == 0) throw std::invalid_argument("rev: m must be positive");
    if (poly_degree(f) >= static_cast<long>(m)) {
        throw std::invalid_argument("rev: polynomial degree exceeds m-1");
    }
    Poly out(m, Fp{0});
    for (std::size_t i = 0; i < m && i < f.size(); ++i) {
        out[m - 1 - i] = f[i];
    }
    return out;
}

Poly series_inv(const Field& F, const Poly& f, std::size_t k) {
    if (k == 0) throw std::invalid_argument("series_inv: k must be positive");
    if (f.empty() || f[0].v == 0) {
        throw std::domain_error("series_inv: constant term is zero, series not invertible");
    }
    Poly g{F.inv(f[0])};
    std::size_t prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        // g <- g * (2 - f*g) mod x^prec
        Poly fg = trunc(poly_mul(F, trunc(f, prec), g), prec);
        Poly t(fg.size(), Fp{0});
        for (std::size_t i = 0; i < fg.size(); ++i) t[i] = F.neg(fg[i]);
        t[0] = F.add(t[0], F.from_uint(2));
        g = trunc(poly_mul(F, g, t), prec);
    }
    g.resize(k, Fp{0});
    return g;
}

Poly poly_mul_transposed(const Field& F, const Poly& a, const Poly& b, std::size_t k) {
    if (k == 0) throw std::invalid_argument("poly_mul_transposed: k must be positive");
    if (b.empty()) {
        throw std::invalid_argument("poly_mul_transposed: multiplier must have a declared degree");
    }
    const std::size_t m = b.size() - 1;
    const Poly p = poly_mul(F, trunc(a, k + m), rev(b, m + 1));
    Poly out(k, Fp{0});
    for (std::size_t i = 0; i < k && m + i < p.size(); ++i) {
        out[i] = p[m + i];
    }
    return out;
}

} // namespace orthopoly
