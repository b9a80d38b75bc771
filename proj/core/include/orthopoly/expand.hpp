#ifndef ORTHOPOLY_EXPAND_HPP
#define ORTHOPOLY_EXPAND_HPP

#include <span>
#include <vector>

#include "orthopoly/poly.hpp"
#include "orthopoly/recurrence.hpp"

namespace orthopoly {

// Monomial coefficients of sum(alpha_i * F_i), i < n, in O(M(n) log n):
// pairs (alpha_{2i}, alpha_{2i+1}) ascend the subproduct tree, picking
// up the stored matrix products, until a single pair (v0, v1) remains;
// the result is v0 * F_0 + v1 * F_1.
//
// n = len(alpha) >= 1; when n is not a power of two, alpha is
// zero-padded and the family padded to the next power of two
// internally. Output declared length n. Agrees exactly with
// naive_expand.
Poly expand(const RecurrenceFamily& fam, std::span<const Fp> alpha);

// The transposed map u |-> (sum_i u_i coeff(F_j, i))_{j < n}, same
// cost: the flow of expand reversed, descending the tree with
// truncations toward left children and transposed multiplications
// toward right children. Padding as in expand.
std::vector<Fp> expand_transposed(const RecurrenceFamily& fam, std::span<const Fp> u);

} // namespace orthopoly

#endif // ORTHOPOLY_EXPAND_HPP
