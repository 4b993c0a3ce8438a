#include "hilbzeta/closed_forms.hpp"

namespace hilbzeta {

namespace {

LaurentPoly t2_minus_1() {
    return LaurentPoly::term(1, 0, 2) - LaurentPoly::one();
}

std::vector<Factor> plane_factors(int v, int multiplicity) {
    std::vector<Factor> den;
    for (int i = 1; i <= v; ++i)
        for (int e = 0; e < multiplicity; ++e)
            den.push_back(Factor{i, 2 * (i - 1)});
    return den;
}

// the k-term of a transfer-matrix sum, brought over the common denominator
// prod_{i=1}^{v}(1 - Q^i T^{2(i-1)})^2 by padding with the missing factors
LaurentPoly pad_to_common(LaurentPoly num, int k, int v) {
    for (int i = k + 1; i <= v; ++i)
        num = num * LaurentPoly::one_minus(i, 2 * (i - 1)).pow(2);
    return num;
}

}  // namespace

TransferMatrix TransferMatrix::make(int k, int s) {
    if (s < 2 || s > k)
        throw std::domain_error("TransferMatrix: need 2 <= s <= k");
    int d = k - s;
    LaurentPoly qd = LaurentPoly::term(1, d + 1, 2 * d);        // Q^{k-s+1} T^{2(k-s)}
    LaurentPoly qd2 = LaurentPoly::term(1, 2 * (d + 1), 4 * d); // its square in the grading
    TransferMatrix m;
    m.k = k;
    m.s = s;
    m.entries[0][0] = qd2 * t2_minus_1() + LaurentPoly::one_minus(d + 1, 2 * d).pow(2);
    m.entries[0][1] = qd * t2_minus_1();
    m.entries[1][0] = qd;
    m.entries[1][1] = qd2.shifted(0, 2);
    return m;
}

std::array<LaurentPoly, 2> TransferMatrix::apply(
    const std::array<LaurentPoly, 2>& v) const {
    return {entries[0][0] * v[0] + entries[0][1] * v[1],
            entries[1][0] * v[0] + entries[1][1] * v[1]};
}

std::array<LaurentPoly, 2> initial_vector(InitialVectorKind kind, int k) {
    if (k < 1) throw std::domain_error("initial_vector: k >= 1 required");
    switch (kind) {
        case InitialVectorKind::V1:
            return {LaurentPoly::term(1, 2 * k, 4 * (k - 1)) * t2_minus_1(),
                    LaurentPoly::term(1, k, 2 * (k - 1))};
        case InitialVectorKind::W1:
            // bottom row pinned by the fixed generator x^{v-1} y^v
            return {LaurentPoly(),
                    LaurentPoly::term(1, k, 2 * (k - 1)) *
                        LaurentPoly::one_minus(k, 2 * (k - 1))};
        case InitialVectorKind::D1: {
            // innermost row empty; row v-2 seeds a (k-1)-row stack
            LaurentPoly pin = LaurentPoly::one_minus(k - 1, 2 * (k - 2));
            return {LaurentPoly::term(1, 2 * (k - 1), 4 * (k - 2)) * t2_minus_1() * pin,
                    (LaurentPoly::term(1, k - 1, 2 * (k - 2)) +
                     LaurentPoly::term(1, 2 * (k - 1), 4 * (k - 2))) *
                        pin};
        }
        case InitialVectorKind::D2: {
            // rows v-1 and v-2 seeded together, both generators pinned
            LaurentPoly pre =
                LaurentPoly::term(1, k + 2 * (k - 1), 2 * (k - 1 + 2 * (k - 2)));
            LaurentPoly pins = LaurentPoly::one_minus(k, 2 * (k - 1)) *
                               LaurentPoly::one_minus(k - 1, 2 * (k - 2));
            return {pre * t2_minus_1() * pins, pre * pins};
        }
    }
    throw std::logic_error("initial_vector: unreachable");
}

FactoredRational cf_nodal_reduced() {
    LaurentPoly num = LaurentPoly::one() - LaurentPoly::term(1, 1, 0) +
                      LaurentPoly::term(1, 2, 2);
    return FactoredRational(std::move(num), {Factor{1, 0}, Factor{1, 0}});
}

FactoredRational cf_fat_line(int k, bool doubled_t) {
    if (k < 1) throw std::domain_error("cf_fat_line: k >= 1 required");
    std::vector<Factor> den;
    for (int i = 1; i <= k; ++i)
        den.push_back(Factor{i, doubled_t ? 2 * (i - 1) : i - 1});
    return FactoredRational(LaurentPoly::one(), std::move(den));
}

FactoredRational cf_xyv(int v) {
    if (v < 1) throw std::domain_error("cf_xyv: v >= 1 required");
    LaurentPoly num = LaurentPoly::one() - LaurentPoly::term(1, 1, 0) +
                      LaurentPoly::term(1, v + 1, 2 * v);
    std::vector<Factor> den = plane_factors(v, 1);
    den.push_back(Factor{1, 0});
    return FactoredRational(std::move(num), std::move(den));
}

FactoredRational cf_x2yv(int v) {
    if (v < 1) throw std::domain_error("cf_x2yv: v >= 1 required");
    LaurentPoly one_m_q = LaurentPoly::one_minus(1, 0);
    LaurentPoly one_m_q2t2 = LaurentPoly::one_minus(2, 2);
    LaurentPoly num = one_m_q * one_m_q2t2;
    num += one_m_q * (LaurentPoly::one() + LaurentPoly::term(1, 1, 2)) *
           LaurentPoly::term(1, v + 1, 2 * v);
    num += LaurentPoly::term(1, 2 * (v + 1), 4 * v);
    std::vector<Factor> den = plane_factors(v, 1);
    den.push_back(Factor{1, 0});
    den.push_back(Factor{2, 2});
    return FactoredRational(std::move(num), std::move(den));
}

LaurentPoly cf_F(int k) {
    if (k < 1) throw std::domain_error("cf_F: k >= 1 required");
    if (k == 1)
        return LaurentPoly::term(1, 2, 2) - LaurentPoly::term(1, 1, 0) +
               LaurentPoly::one();
    std::array<LaurentPoly, 2> vec = initial_vector(InitialVectorKind::V1, k);
    for (int s = 2; s <= k; ++s) vec = TransferMatrix::make(k, s).apply(vec);
    return vec[0] + vec[1];
}

FactoredRational cf_xvyv(int v) {
    if (v < 1) throw std::domain_error("cf_xvyv: v >= 1 required");
    LaurentPoly num;
    for (int k = 1; k <= v; ++k) num += pad_to_common(cf_F(k), k, v);
    return FactoredRational(std::move(num), plane_factors(v, 2));
}

FactoredRational cf_xvm1yv(int v) {
    if (v < 1) throw std::domain_error("cf_xvm1yv: v >= 1 required");
    LaurentPoly num;
    for (int k = 1; k <= v - 1; ++k) num += pad_to_common(cf_F(k), k, v);
    std::array<LaurentPoly, 2> vec = initial_vector(InitialVectorKind::W1, v);
    for (int s = 2; s <= v; ++s) vec = TransferMatrix::make(v, s).apply(vec);
    num += vec[0] + vec[1];
    return FactoredRational(std::move(num), plane_factors(v, 2));
}

FactoredRational cf_xvm2yv(int v) {
    if (v < 3) throw std::domain_error("cf_xvm2yv: v >= 3 required");
    LaurentPoly num;
    for (int k = 1; k <= v - 2; ++k) num += pad_to_common(cf_F(k), k, v);
    // D1 and D2 already carry two rows' worth of seed, so their stacks are
    // completed by the steps s = 3..v; D1 lives over the (v-1)-row
    // denominator and is padded by the one missing factor
    std::array<LaurentPoly, 2> vec = initial_vector(InitialVectorKind::D1, v);
    for (int s = 3; s <= v; ++s) vec = TransferMatrix::make(v, s).apply(vec);
    num += (vec[0] + vec[1]) * LaurentPoly::one_minus(v, 2 * (v - 1)).pow(2);
    vec = initial_vector(InitialVectorKind::D2, v);
    for (int s = 3; s <= v; ++s) vec = TransferMatrix::make(v, s).apply(vec);
    num += vec[0] + vec[1];
    return FactoredRational(std::move(num), plane_factors(v, 2));
}

FactoredRational cf_plane(int kmax) {
    if (kmax < 1) throw std::domain_error("cf_plane: kmax >= 1 required");
    return FactoredRational(LaurentPoly::one(), plane_factors(kmax, 1));
}

FactoredRational cf_durfee_lhs(int kmax) {
    if (kmax < 1) throw std::domain_error("cf_durfee_lhs: kmax >= 1 required");
    LaurentPoly num;
    for (int k = 1; k <= kmax; ++k) num += pad_to_common(cf_F(k), k, kmax);
    return FactoredRational(std::move(num), plane_factors(kmax, 2));
}

std::optional<FactoredRational> series_for_curve(int u, int v) {
    if (u < 1 || v < u) return std::nullopt;
    if (u == 1) return cf_xyv(v);
    if (u == 2) return cf_x2yv(v);
    if (u == v) return cf_xvyv(v);
    if (u == v - 1) return cf_xvm1yv(v);
    if (u == v - 2) return cf_xvm2yv(v);
    return std::nullopt;
}

}  // namespace hilbzeta
