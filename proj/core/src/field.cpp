#include "orthopoly/field.hpp"

#include <stdexcept>
#include <string>

namespace orthopoly {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for all n < 3.3 * 10^24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field::Field(u64 p) : p_(p) {
    if (p < 3 || p >= (1ull << 62)) {
        throw std::invalid_argument("Field: modulus must satisfy 3 <= p < 2^62, got " +
                                    std::to_string(p));
    }
    if ((p & 1) == 0 || !is_prime_u64(p)) {
        throw std::invalid_argument("Field: modulus " + std::to_string(p) +
                                    " is not an odd prime");
    }
    if (p < (1ull << 32)) {
        barrett_im_ = static_cast<u64>((static_cast<u128>(1) << 64) / p);
    }

    u64 odd = p - 1;
    while ((odd & 1) == 0) {
        odd >>= 1;
        ++two_adicity_;
    }

    // A quadratic non-residue z gives z^odd of order exactly 2^two_adicity_.
    u64 z = 2;
    while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
    sylow_gen_ = Fp{powmod_u64(z, odd, p)};
}

Fp Field::inv(Fp a) const {
    if (a.v == 0) throw std::domain_error("Field::inv: zero is not invertible");
    return pow(a, p_ - 2);
}

void Field::batch_inv(std::span<Fp> xs) const {
    const std::size_t n = xs.size();
    if (n == 0) return;
    std::vector<Fp> prefix(n);
    Fp acc = one();
    for (std::size_t i = 0; i < n; ++i) {
        if (xs[i].v == 0) throw std::domain_error("Field::batch_inv: zero element");
        prefix[i] = acc;
        acc = mul(acc, xs[i]);
    }
    Fp inv_acc = inv(acc);
    for (std::size_t i = n; i-- > 0;) {
        Fp old = xs[i];
        xs[i] = mul(inv_acc, prefix[i]);
        inv_acc = mul(inv_acc, old);
    }
}

Fp Field::root_of_unity(u64 order) const {
    if (order == 0 || (order & (order - 1)) != 0) {
        throw std::invalid_argument("Field::root_of_unity: order must be a power of two");
    }
    if (order == 1) return one();
    int log = 0;
    for (u64 t = order; t > 1; t >>= 1) ++log;
    if (log > two_adicity_) {
        throw std::invalid_argument("Field::root_of_unity: order " + std::to_string(order) +
                                    " exceeds 2^" + std::to_string(two_adicity_) +
                                    " supported by modulus " + std::to_string(p_));
    }
    return pow(sylow_gen_, u64{1} << (two_adicity_ - log));
}

} // namespace orthopoly
