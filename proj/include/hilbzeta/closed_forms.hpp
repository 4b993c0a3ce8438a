#pragma once

#include "hilbzeta/series.hpp"

#include <array>
#include <optional>

namespace hilbzeta {

/* Closed-form generating functions for sum_n chi(Hilb^n(x^u y^v, 0)) Q^n.
 *
 * The u = v, v-1, v-2 families are transfer-matrix sums
 * sum_k F_u(k) / prod_{i=1}^{k} (1 - Q^i T^{2(i-1)})^2 where F_u(k) counts
 * the minimal k-row weak diagonal partitions compatible with the curve;
 * each sum is assembled over the common denominator prod_{i=1}^{v}(...)^2
 * so the result stays a single FactoredRational. */

// 2x2 step matrix for extending a minimal partition from row s to row s-1
// of a k-row stack; entries are indexed [row][col] with row/col 0 = kind
// One and 1 = kind Two
struct TransferMatrix {
    std::array<std::array<LaurentPoly, 2>, 2> entries;
    int k = 2;
    int s = 2;

    static TransferMatrix make(int k, int s);  // 2 <= s <= k
    std::array<LaurentPoly, 2> apply(const std::array<LaurentPoly, 2>& v) const;
};

enum class InitialVectorKind { V1, W1, D1, D2 };

// innermost-row seeds: V1 for x^v y^v, W1 for the k = v branch of
// x^{v-1} y^v, D1/D2 for the k = v-1 and k = v branches of x^{v-2} y^v
std::array<LaurentPoly, 2> initial_vector(InitialVectorKind kind, int k);

// (1 - Q + Q^2 T^2) / (1 - Q)^2, the reduced node xy = 0
FactoredRational cf_nodal_reduced();

// prod_{i=1}^{k} 1/(1 - Q^i T^{i-1}) for the fat line y^k; doubled_t
// rebuilds it in the even grading T^{2(i-1)} used everywhere else
FactoredRational cf_fat_line(int k, bool doubled_t = false);

// prod_{i=1}^{v} 1/(1 - Q^i T^{2(i-1)}) * (1 + Q^{v+1} T^{2v} / (1 - Q))
FactoredRational cf_xyv(int v);

FactoredRational cf_x2yv(int v);

// minimal-partition count for exactly k rows: Q^2 T^2 - Q + 1 when k = 1,
// otherwise the entry sum of M_k ... M_2 V_1 (matrices applied in
// increasing s from the right)
LaurentPoly cf_F(int k);

FactoredRational cf_xvyv(int v);
FactoredRational cf_xvm1yv(int v);
FactoredRational cf_xvm2yv(int v);  // v >= 3, so u = v-2 >= 1

FactoredRational cf_plane(int kmax);
FactoredRational cf_durfee_lhs(int kmax);

// dispatch for the supported curve families u=1, u=2, u=v, u=v-1, u=v-2
// (requires 1 <= u <= v); nullopt when no closed form exists
std::optional<FactoredRational> series_for_curve(int u, int v);

}  // namespace hilbzeta
