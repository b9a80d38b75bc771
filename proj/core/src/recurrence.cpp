#include "orthopoly/recurrence.hpp"

#include <algorithm>

namespace orthopoly {

namespace {

std::string normalize_name(std::string_view name) {
    std::string out(name);
    std::replace(out.begin(), out.end(), '_', '-');
    return out;
}

} // namespace

RecurrenceFamily RecurrenceFamily::preset(const Field& F, std::string_view name) {
    const std::string n = normalize_name(name);
    Kind k;
    if (n == "chebyshev-t") k = Kind::chebyshev_t;
    else if (n == "chebyshev-u") k = Kind::chebyshev_u;
    else if (n == "legendre") k = Kind::legendre;
    else if (n == "hermite") k = Kind::hermite;
    else if (n == "laguerre") k = Kind::laguerre;
    else throw std::invalid_argument("RecurrenceFamily: unknown preset '" + std::string(name) + "'");
    return RecurrenceFamily(F, k, n);
}

RecurrenceFamily RecurrenceFamily::custom(const Field& F, std::vector<Fp> a,
                                          std::vector<Fp> b, std::vector<Fp> c) {
    if (a.size() != b.size() || a.size() != c.size()) {
        throw std::invalid_argument("RecurrenceFamily: coefficient arrays must have equal length");
    }
    RecurrenceFamily fam(F, Kind::custom, "custom");
    if (!c.empty()) c[0] = F.one(); // c_1 multiplies F_{-1} = 0
    fam.a_ = std::move(a);
    fam.b_ = std::move(b);
    fam.c_ = std::move(c);
    fam.base_ = fam.a_.size();
    fam.available_ = fam.base_;
    return fam;
}

Triple RecurrenceFamily::raw_triple(u64 i) const {
    const Field& F = field_;
    switch (preset_) {
    case Kind::custom:
        if (i <= base_) return {a_[i - 1], b_[i - 1], c_[i - 1]};
        return {F.one(), F.zero(), F.one()}; // padding
    case Kind::chebyshev_t:
        return {i == 1 ? F.one() : F.from_uint(2), F.zero(),
                i == 1 ? F.one() : F.neg(F.one())};
    case Kind::chebyshev_u:
        return {F.from_uint(2), F.zero(), i == 1 ? F.one() : F.neg(F.one())};
    case Kind::legendre: {
        // P_i = ((2i-1)/i) x P_{i-1} - ((i-1)/i) P_{i-2}
        Fp fi = F.from_uint(i);
        if (fi.v == 0) throw FamilyError(i, "legendre: index " + std::to_string(i) +
                                                " not invertible modulo " + std::to_string(F.modulus()));
        Fp inv_i = F.inv(fi);
        Fp a = F.mul(F.sub(F.add(fi, fi), F.one()), inv_i);
        Fp c = i == 1 ? F.one() : F.neg(F.mul(F.sub(fi, F.one()), inv_i));
        return {a, F.zero(), c};
    }
    case Kind::hermite: {
        // H_i = 2x H_{i-1} - 2(i-1) H_{i-2}
        Fp im1 = F.from_uint(i - 1);
        return {F.from_uint(2), F.zero(),
                i == 1 ? F.one() : F.neg(F.add(im1, im1))};
    }
    case Kind::laguerre: {
        // L_i = ((2i-1-x)/i) L_{i-1} - ((i-1)/i) L_{i-2}
        Fp fi = F.from_uint(i);
        if (fi.v == 0) throw FamilyError(i, "laguerre: index " + std::to_string(i) +
                                                " not invertible modulo " + std::to_string(F.modulus()));
        Fp inv_i = F.inv(fi);
        Fp a = F.neg(inv_i);
        Fp b = F.mul(F.sub(F.add(fi, fi), F.one()), inv_i);
        Fp c = i == 1 ? F.one() : F.neg(F.mul(F.sub(fi, F.one()), inv_i));
        return {a, b, c};
    }
    }
    throw std::logic_error("unreachable");
}

Triple RecurrenceFamily::triple(u64 i) const {
    if (i == 0) throw FamilyError(0, "RecurrenceFamily: indices start at 1");
    if (i > available_) {
        throw FamilyError(i, "RecurrenceFamily: index " + std::to_string(i) +
                                 " exceeds available length " + std::to_string(available_));
    }
    Triple t = raw_triple(i);
    if (t.a.v == 0) {
        throw FamilyError(i, "RecurrenceFamily: a_" + std::to_string(i) + " = 0");
    }
    if (i >= 2 && t.c.v == 0) {
        throw FamilyError(i, "RecurrenceFamily: c_" + std::to_string(i) + " = 0");
    }
    return t;
}

SampledCoefficients sample(const RecurrenceFamily& fam, u64 m) {
    SampledCoefficients out;
    out.a.reserve(m);
    out.b.reserve(m);
    out.c.reserve(m);
    for (u64 i = 1; i <= m; ++i) {
        Triple t = fam.triple(i);
        out.a.push_back(t.a);
        out.b.push_back(t.b);
        out.c.push_back(t.c);
    }
    return out;
}

RecurrenceFamily pad(const RecurrenceFamily& fam, u64 m) {
    RecurrenceFamily out = fam;
    if (out.available_ != RecurrenceFamily::kUnbounded) {
        out.available_ = std::max(out.available_, m);
    }
    return out;
}

Poly naive_expand(const RecurrenceFamily& fam, std::span<const Fp> alpha) {
    if (alpha.empty()) throw std::invalid_argument("naive_expand: empty coefficient vector");
    const Field& F = fam.field();
    const std::size_t n = alpha.size();
    Poly acc(n, Fp{0});
    acc[0] = alpha[0];

    Poly prev2;          // F_{-1}
    Poly prev{F.one()};  // F_0
    for (std::size_t i = 1; i < n; ++i) {
        Triple t = fam.triple(i);
        Poly cur(i + 1, Fp{0});
        for (std::size_t j = 0; j <= i; ++j) {
            Fp v = F.zero();
            if (j > 0) v = F.mul(t.a, prev[j - 1]);
            if (j < prev.size()) v = F.add(v, F.mul(t.b, prev[j]));
            if (j < prev2.size()) v = F.add(v, F.mul(t.c, prev2[j]));
            cur[j] = v;
        }
        if (alpha[i].v != 0) {
            for (std::size_t j = 0; j <= i; ++j) {
                acc[j] = F.add(acc[j], F.mul(alpha[i], cur[j]));
            }
        }
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return acc;
}

BasisMatrix basis_matrix(const RecurrenceFamily& fam, u64 n) {
    if (n == 0) throw std::invalid_argument("basis_matrix: n must be positive");
    const Field& F = fam.field();
    BasisMatrix m(n, std::vector<Fp>(n, Fp{0}));
    Poly prev2;
    Poly prev{F.one()};
    m[0][0] = F.one();
    for (u64 j = 1; j < n; ++j) {
        Triple t = fam.triple(j);
        Poly cur(j + 1, Fp{0});
        for (std::size_t i = 0; i <= j; ++i) {
            Fp v = F.zero();
            if (i > 0) v = F.mul(t.a, prev[i - 1]);
            if (i < prev.size()) v = F.add(v, F.mul(t.b, prev[i]));
            if (i < prev2.size()) v = F.add(v, F.mul(t.c, prev2[i]));
            cur[i] = v;
            m[i][j] = v;
        }
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return m;
}

std::vector<Fp> naive_decomp(const RecurrenceFamily& fam, const Poly& A) {
    if (A.empty()) throw std::invalid_argument("naive_decomp: empty polynomial");
    const Field& F = fam.field();
    const std::size_t n = A.size();
    BasisMatrix m = basis_matrix(fam, n);

    std::vector<Fp> diag(n);
    for (std::size_t j = 0; j < n; ++j) diag[j] = m[j][j];
    F.batch_inv(diag);

    std::vector<Fp> rem(A);
    std::vector<Fp> alpha(n);
    for (std::size_t j = n; j-- > 0;) {
        alpha[j] = F.mul(rem[j], diag[j]);
        if (alpha[j].v == 0) continue;
        for (std::size_t i = 0; i <= j; ++i) {
            rem[i] = F.sub(rem[i], F.mul(alpha[j], m[i][j]));
        }
    }
    return alpha;
}

} // namespace orthopoly
