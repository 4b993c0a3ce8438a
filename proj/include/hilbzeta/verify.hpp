#pragma once

#include "hilbzeta/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbzeta {

/* Cross-identity checks tying the modules together. Every check is
 * deterministic; on failure it reports the first diverging Q-degree with
 * both coefficients. Enumeration-backed checks take a wall-clock budget in
 * milliseconds (0 = unlimited) and stop extending n once it is spent. */

struct Divergence {
    int q_degree = 0;
    LaurentPoly expected;
    LaurentPoly actual;
};

struct CheckReport {
    std::string name;
    bool pass = false;
    std::optional<Divergence> first_divergence;  // present iff !pass
    long runtime_ms = 0;
    int nmax_checked = -1;  // last Q-degree actually compared

    std::string json() const;
};

// core comparator: expected vs actual through Q-degree nmax
CheckReport compare_series(const std::string& name, const QSeries& expected,
                           const QSeries& actual, int nmax);

// Hilb series of xy^v against the Hopf-link homology, both through the
// closed form and through the binary-string recursion
CheckReport check_ors_xyv(int v, int nmax);
// same comparison with a caller-supplied curve-side form (negative controls)
CheckReport check_ors_xyv(int v, int nmax, const FactoredRational& curve_side);

CheckReport check_durfee(int kmax, int nmax);
CheckReport check_durfee_t1(int kmax, int nmax);  // T=1: partition numbers

// zero difference of cf_xvyv(v) and cf_plane up to Q^min(nmax, 2v)
CheckReport check_plane_agreement(int v, int nmax);

// the Macaulay2 printout of seriesForCurve(3,10) and the printed v=2
// rational function, matched exactly
CheckReport check_appendix_golden();

// weak-diagonal enumeration with (m1, m2) statistics against cf_xvyv(v)
// restricted to <= v rows; v = 0 means unrestricted rows against cf_plane
CheckReport check_wdp_oracle(int v, int nmax, long budget_ms = 0);

CheckReport check_vertical_oracle(int u, int v, int nmax, long budget_ms = 0);

// the curve-overlap identities: xvyv(1) = xyv(1) = nodal, x2yv(2) = xvyv(2),
// xvm1yv(2) = xyv(2), xvm2yv(3) = xyv(3), xvm2yv(4) = x2yv(4)
std::vector<CheckReport> check_overlaps(int nmax);

// the default desk-scale battery, sorted by name
std::vector<CheckReport> run_default_battery(long budget_ms = 0);

// single-exponent perturbations for negative controls
FactoredRational perturb_factor(const FactoredRational& r, std::size_t index,
                                int dalpha, int dbeta);
FactoredRational perturb_numerator_term(const FactoredRational& r,
                                        std::size_t term_index, int dq, int dt);

}  // namespace hilbzeta
