#ifndef ORTHOPOLY_FIELD_HPP
#define ORTHOPOLY_FIELD_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace orthopoly {

#if !defined(__SIZEOF_INT128__)
#error "orthopoly requires compiler support for unsigned __int128 (GCC/Clang)."
#endif

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Element of Z/pZ, always kept in canonical form 0 <= v < p.
struct Fp {
    u64 v = 0;
    friend bool operator==(Fp, Fp) = default;
};

// Arithmetic context for Z/pZ with a fixed odd prime p < 2^62 whose
// multiplicative group contains power-of-two roots of unity up to
// order 2^two_adicity(), where two_adicity() = v2(p-1).
//
// All operations are pure and the context is immutable after
// construction, so a Field may be shared freely across threads.
// Operands are assumed canonical; results are canonical.
class Field {
public:
    // 119 * 2^23 + 1; supports transform sizes up to 2^23.
    static constexpr u64 kDefaultModulus = 998244353;
    // Small prime with v2(p-1) = 8, handy for exhaustive tests.
    static constexpr u64 kTestModulus = 257;

    Field() : Field(kDefaultModulus) {}
    // Throws std::invalid_argument unless p is an odd prime with 3 <= p < 2^62.
    explicit Field(u64 p);

    u64 modulus() const noexcept { return p_; }
    // v2(p-1): the largest k such that 2^k-th roots of unity exist.
    int two_adicity() const noexcept { return two_adicity_; }

    Fp zero() const noexcept { return Fp{0}; }
    Fp one() const noexcept { return Fp{1}; }

    Fp from_uint(u64 x) const noexcept { return Fp{x % p_}; }
    Fp from_int(i64 x) const noexcept {
        i64 r = x % static_cast<i64>(p_);
        if (r < 0) r += static_cast<i64>(p_);
        return Fp{static_cast<u64>(r)};
    }

    Fp add(Fp a, Fp b) const noexcept {
        u64 s = a.v + b.v; // no overflow: a.v, b.v < 2^62
        if (s >= p_) s -= p_;
        return Fp{s};
    }
    Fp sub(Fp a, Fp b) const noexcept {
        return Fp{a.v >= b.v ? a.v - b.v : a.v + (p_ - b.v)};
    }
    Fp neg(Fp a) const noexcept { return Fp{a.v == 0 ? 0 : p_ - a.v}; }

    Fp mul(Fp a, Fp b) const noexcept {
        const u128 t = static_cast<u128>(a.v) * b.v;
        if (barrett_im_ != 0) {
            // p < 2^32: Barrett reduction with im = floor(2^64 / p).
            const u64 x = static_cast<u64>(t);
            const u64 q = static_cast<u64>((static_cast<u128>(x) * barrett_im_) >> 64);
            u64 r = x - q * p_;
            if (r >= p_) r -= p_;
            return Fp{r};
        }
        return Fp{static_cast<u64>(t % p_)};
    }
    Fp sqr(Fp a) const noexcept { return mul(a, a); }

    Fp pow(Fp a, u64 e) const noexcept {
        Fp base = a;
        Fp res = one();
        while (e > 0) {
            if (e & 1) res = mul(res, base);
            e >>= 1;
            if (e) base = sqr(base);
        }
        return res;
    }

    // Fermat inverse; throws std::domain_error on zero input.
    Fp inv(Fp a) const;

    // In-place inversion of every element (Montgomery's trick:
    // 3(n-1) multiplications and a single inversion).
    // Throws std::domain_error if any element is zero.
    void batch_inv(std::span<Fp> xs) const;

    // Primitive root of unity of the given power-of-two order:
    // w^order = 1 and w^(order/2) = p - 1 (for order >= 2).
    // Throws std::invalid_argument if order is not a power of two
    // dividing 2^two_adicity().
    Fp root_of_unity(u64 order) const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p_ == b.p_;
    }

private:
    u64 p_;
    u64 barrett_im_ = 0; // floor(2^64 / p) when p < 2^32, else 0
    int two_adicity_ = 0;
    Fp sylow_gen_{};     // element of order exactly 2^two_adicity_
};

// Deterministic Miller-Rabin for 64-bit n.
bool is_prime_u64(u64 n);

} // namespace orthopoly

#endif // ORTHOPOLY_FIELD_HPP
