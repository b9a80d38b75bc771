#include "orthopoly/decomp.hpp"

#include <stdexcept>

namespace orthopoly {

namespace {

// Family with triples (a_{i+1}, b_{i+1}, c_{i+1}) built from a sample
// of the original, dropping the first triple.
RecurrenceFamily shifted_family(const Field& F, const SampledCoefficients& s) {
    std::vector<Fp> a(s.a.begin() + 1, s.a.end());
    std::vector<Fp> b(s.b.begin() + 1, s.b.end());
    std::vector<Fp> c(s.c.begin() + 1, s.c.end());
    return RecurrenceFamily::custom(F, std::move(a), std::move(b), std::move(c));
}

std::vector<Fp> unit_vector(std::size_t len, std::size_t pos) {
    std::vector<Fp> e(len, Fp{0});
    e[pos] = Fp{1};
    return e;
}

} // namespace

Poly g_polynomial(const RecurrenceFamily& fam, u64 i) {
    const Field& F = fam.field();
    if (i == 0) return Poly{F.one()};
    SampledCoefficients s = sample(pad(fam, i + 1), i + 1);
    RecurrenceFamily shifted = shifted_family(F, s);
    return expand(shifted, unit_vector(i + 1, i));
}

MomentSeries moment_series(const RecurrenceFamily& fam, u64 n) {
    if (n == 0) throw std::invalid_argument("moment_series: n must be positive");
    const Field& F = fam.field();
    SampledCoefficients s = sample(pad(fam, n), n);
    RecurrenceFamily extended = RecurrenceFamily::custom(F, s.a, s.b, s.c);

    Poly f_n = expand(extended, unit_vector(n + 1, n));
    Poly g_nm1 = expand(shifted_family(F, s), unit_vector(n, n - 1));

    const std::size_t len = 2 * n - 1;
    Poly q = trunc(poly_mul(F, rev(g_nm1, n), series_inv(F, rev(f_n, n + 1), len)), len);
    q.resize(len, Fp{0});
    return MomentSeries{std::move(q), n};
}

NormalizationConstants normalization(const RecurrenceFamily& fam, u64 n) {
    if (n == 0) throw std::invalid_argument("normalization: n must be positive");
    const Field& F = fam.field();
    SampledCoefficients s = sample(pad(fam, n), n);

    std::vector<Fp> denom(s.a.begin(), s.a.end()); // a_{i+1} at slot i
    F.batch_inv(denom);

    NormalizationConstants out;
    out.d.resize(n);
    Fp num = F.one(); // (-1)^i c_2 ... c_{i+1}
    out.d[0] = denom[0];
    for (u64 i = 1; i < n; ++i) {
        num = F.neg(F.mul(num, s.c[i])); // c_{i+1}
        out.d[i] = F.mul(num, denom[i]);
    }
    return out;
}

std::vector<Fp> decomp(const RecurrenceFamily& fam, const Poly& A) {
    if (A.empty()) throw std::invalid_argument("decomp: empty polynomial");
    const Field& F = fam.field();
    const std::size_t n = A.size();
    if (fam.available_length() < n - 1) {
        throw FamilyError(fam.available_length() + 1,
                          "decomp needs recurrence indices up to " + std::to_string(n - 1) +
                              " but the family provides " +
                              std::to_string(fam.available_length()));
    }

    MomentSeries ms = moment_series(fam, n);
    NormalizationConstants nc = normalization(fam, n);

    Poly hankel_action = poly_mul_transposed(F, ms.moments, A, n);
    std::vector<Fp> w = expand_transposed(fam, hankel_action);

    F.batch_inv(nc.d);
    std::vector<Fp> alpha(n);
    for (std::size_t i = 0; i < n; ++i) alpha[i] = F.mul(w[i], nc.d[i]);
    return alpha;
}

std::vector<std::vector<Fp>> hankel_matrix(const RecurrenceFamily& fam, u64 n) {
    MomentSeries ms = moment_series(fam, n);
    std::vector<std::vector<Fp>> h(n, std::vector<Fp>(n));
    for (u64 i = 0; i < n; ++i) {
        for (u64 j = 0; j < n; ++j) h[i][j] = ms.moments[i + j];
    }
    return h;
}

} // namespace orthopoly
