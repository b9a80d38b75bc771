#ifndef ORTHOPOLY_DECOMP_HPP
#define ORTHOPOLY_DECOMP_HPP

#include <vector>

#include "orthopoly/expand.hpp"
#include "orthopoly/poly.hpp"
#include "orthopoly/recurrence.hpp"

namespace orthopoly {

// Truncated moment sequence of the linear form L that makes the family
// formally orthogonal: moments[i] = L(x^i) for 0 <= i <= 2n-2.
// moments[0] = 1/a_1 always.
struct MomentSeries {
    Poly moments; // declared length 2n-1
    u64 n = 0;
};

// d[i] = L(F_i^2) = (-1)^i c_2 ... c_{i+1} / a_{i+1}, all nonzero.
struct NormalizationConstants {
    std::vector<Fp> d;
};

// Companion sequence sharing the recurrence with indices shifted up by
// one: G_{-1} = 0, G_0 = 1, G_i = (a_{i+1} x + b_{i+1}) G_{i-1} +
// c_{i+1} G_{i-2}. Returns G_i with declared length i+1, computed as
// the fast expansion of the unit vector x^i under the shifted family.
// Uses family indices up to i+1, padding beyond the available data.
Poly g_polynomial(const RecurrenceFamily& fam, u64 i);

// Moments via the series quotient rev(G_{n-1}, n) / rev(F_n, n+1)
// truncated to 2n-1 terms, with the denominator inverted by Newton
// iteration. F_n and G_{n-1} are built from the family padded to
// index n, so moment_series(fam, n) and normalization(fam, n) always
// agree on the same coefficient data.
MomentSeries moment_series(const RecurrenceFamily& fam, u64 n);

// The n diagonal values, O(n) via running products and one batched
// inversion. Uses family indices up to n (padded like moment_series).
NormalizationConstants normalization(const RecurrenceFamily& fam, u64 n);

// Coefficients alpha with sum(alpha_i * F_i) = A, for A of declared
// length n >= 1, in O(M(n) log n). Writing H for the n x n Hankel
// matrix of the moments and D = diag(d), the basis matrix satisfies
// B^t H B = D, so alpha = D^-1 B^t H A:
//   V     = poly_mul_transposed(Q, A, n)   (the Hankel action H A)
//   w     = expand_transposed(V)           (B^t V)
//   alpha = w / d componentwise            (batched inversion)
// Agrees exactly with naive_decomp.
std::vector<Fp> decomp(const RecurrenceFamily& fam, const Poly& A);

// Test utility: the n x n Hankel matrix with entry (i, j) equal to
// moment i+j.
std::vector<std::vector<Fp>> hankel_matrix(const RecurrenceFamily& fam, u64 n);

} // namespace orthopoly

#endif // ORTHOPOLY_DECOMP_HPP
