#ifndef ORTHOPOLY_POLY_HPP
#define ORTHOPOLY_POLY_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "orthopoly/field.hpp"

namespace orthopoly {

// Dense univariate polynomial: coefficient of x^i at index i.
// The vector length is the declared bound (trailing zeros allowed);
// an empty vector is the zero polynomial. Several operations below
// depend on declared lengths, not on actual degrees.
using Poly = std::vector<Fp>;

// Thrown when a product would need a transform size beyond what the
// modulus supports (next power of two above the output length must
// divide p-1).
struct NttCapacityError : std::length_error {
    using std::length_error::length_error;
};

// Actual degree: index of the last nonzero coefficient, or -1 for zero.
long poly_degree(const Poly& f) noexcept;

// mod x^k: the first k coefficients.
Poly trunc(const Poly& f, std::size_t k);

// Coefficient-wise sum; the result keeps the longer declared length.
Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);

// Exact product with declared length len(a)+len(b)-1 (empty if either
// input is empty). Backend picked by operand size: schoolbook below 32,
// Karatsuba below 512, NTT above. Throws NttCapacityError when the
// required transform size is unsupported.
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);

// rev(f, m) = x^(m-1) f(1/x): coefficient i of the result is
// coefficient m-1-i of f, declared length m. Requires deg(f) < m.
Poly rev(const Poly& f, std::size_t m);

// Truncated inverse power series: g of declared length k with
// f*g = 1 (mod x^k), by Newton iteration with precision doubling.
// Requires f(0) != 0 (throws std::domain_error otherwise) and k >= 1.
Poly series_inv(const Field& F, const Poly& f, std::size_t k);

// Transpose of the multiplication-by-b map from K[x]_k to K[x]_{k+m},
// where m = len(b)-1 is the declared degree of b:
//
//   a  |->  (a * rev(b, m+1) mod x^(k+m)) div x^m,
//
// returned with declared length k. Coefficients of a at index >= k+m
// do not reach the output and are ignored, which matches composing
// with the transpose of the zero-padding embedding.
Poly poly_mul_transposed(const Field& F, const Poly& a, const Poly& b, std::size_t k);

namespace detail {

inline constexpr std::size_t kSchoolbookThreshold = 32;
inline constexpr std::size_t kKaratsubaThreshold = 512;

Poly mul_schoolbook(const Field& F, const Poly& a, const Poly& b);
Poly mul_karatsuba(const Field& F, const Poly& a, const Poly& b);
Poly mul_ntt(const Field& F, const Poly& a, const Poly& b);

// In-place radix-2 transform; values.size() must be a power of two
// not exceeding 2^F.two_adicity().
void ntt(const Field& F, std::vector<Fp>& values, bool invert);

} // namespace detail

} // namespace orthopoly

#endif // ORTHOPOLY_POLY_HPP
