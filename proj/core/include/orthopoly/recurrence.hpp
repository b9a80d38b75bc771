#ifndef ORTHOPOLY_RECURRENCE_HPP
#define ORTHOPOLY_RECURRENCE_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orthopoly/field.hpp"
#include "orthopoly/poly.hpp"

namespace orthopoly {

// Invalid coefficient data; `index` names the offending recurrence index.
struct FamilyError : std::invalid_argument {
    FamilyError(u64 idx, const std::string& what)
        : std::invalid_argument(what), index(idx) {}
    u64 index;
};

struct Triple {
    Fp a, b, c;
};

// A family of polynomials defined by F_{-1} = 0, F_0 = 1 and
//
//   F_i = (a_i x + b_i) F_{i-1} + c_i F_{i-2},   i >= 1,
//
// given by its coefficient triples (a_i, b_i, c_i). Every a_i must be
// nonzero, and every c_i for i >= 2; c_1 multiplies F_{-1} = 0 and is
// stored normalized to 1. Families are immutable and cheap to copy.
class RecurrenceFamily {
public:
    static constexpr u64 kUnbounded = ~u64{0};

    // Known presets: chebyshev-t, chebyshev-u, legendre, hermite,
    // laguerre ('_' accepted for '-'). Throws std::invalid_argument on
    // an unknown name. Preset coefficients involving rational values
    // are realized through modular inverses, so indices at or beyond
    // the modulus fail validation when sampled.
    static RecurrenceFamily preset(const Field& F, std::string_view name);

    // Arrays use 1-indexed semantics: element k holds the triple of
    // index k+1. The arrays must have equal length.
    static RecurrenceFamily custom(const Field& F, std::vector<Fp> a,
                                   std::vector<Fp> b, std::vector<Fp> c);

    const Field& field() const noexcept { return field_; }
    const std::string& kind() const noexcept { return kind_; }
    u64 available_length() const noexcept { return available_; }

    // Triple for index i >= 1, validated on access. Indices past the
    // underlying data but within available_length() (see pad) yield
    // the neutral triple (1, 0, 1). Throws FamilyError on a_i = 0,
    // on c_i = 0 with i >= 2, and on out-of-range indices.
    Triple triple(u64 i) const;

private:
    enum class Kind { custom, chebyshev_t, chebyshev_u, legendre, hermite, laguerre };

    RecurrenceFamily(const Field& F, Kind k, std::string name)
        : field_(F), preset_(k), kind_(std::move(name)) {}

    Triple raw_triple(u64 i) const;

    Field field_;
    Kind preset_;
    std::string kind_;
    std::vector<Fp> a_, b_, c_;
    u64 base_ = kUnbounded;      // largest index with real data
    u64 available_ = kUnbounded; // largest valid index after padding

    friend RecurrenceFamily pad(const RecurrenceFamily&, u64);
};

struct SampledCoefficients {
    // a[k] = a_{k+1} and likewise for b, c.
    std::vector<Fp> a, b, c;
};

// Triples for indices 1..m, validating the nonzero invariants.
SampledCoefficients sample(const RecurrenceFamily& fam, u64 m);

// A family agreeing with `fam` where it is defined and yielding
// (1, 0, 1) beyond, valid up to index at least m. Presets are
// unbounded and returned unchanged.
RecurrenceFamily pad(const RecurrenceFamily& fam, u64 m);

// Quadratic-time reference: runs the recurrence directly and
// accumulates sum(alpha_i * F_i) on the monomial basis. Output
// declared length = len(alpha).
Poly naive_expand(const RecurrenceFamily& fam, std::span<const Fp> alpha);

// Quadratic-time reference inverse: coefficients alpha with
// sum(alpha_i * F_i) = A, by back-substitution against basis_matrix.
std::vector<Fp> naive_decomp(const RecurrenceFamily& fam, const Poly& A);

// Entry [i][j] = coefficient of x^i in F_j; upper-triangular n x n
// with diagonal a_1 * ... * a_i.
using BasisMatrix = std::vector<std::vector<Fp>>;
BasisMatrix basis_matrix(const RecurrenceFamily& fam, u64 n);

} // namespace orthopoly

#endif // ORTHOPOLY_RECURRENCE_HPP
