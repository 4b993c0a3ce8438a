#include "hilbzeta/verify.hpp"

#include "hilbzeta/closed_forms.hpp"
#include "hilbzeta/kr.hpp"
#include "hilbzeta/partitions.hpp"

#include <chrono>
#include <sstream>

namespace hilbzeta {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 start)
        .count();
}

CheckReport finish(CheckReport report, Clock::time_point start) {
    report.runtime_ms = ms_since(start);
    return report;
}

// the printed seriesForCurve(3,10) output, term for term
LaurentPoly appendix_golden_poly() {
    struct Term { int q, t, c; };
    static const Term terms[] = {
        {10, 0, 1}, {8, 2, 1},  {6, 4, 2}, {4, 6, 1}, {9, 0, 1}, {7, 2, 1},
        {5, 4, 2},  {8, 0, 1},  {6, 2, 1}, {4, 4, 2}, {7, 0, 1}, {5, 2, 1},
        {3, 4, 1},  {6, 0, 1},  {4, 2, 1}, {5, 0, 1}, {3, 2, 1}, {4, 0, 1},
        {2, 2, 1},  {3, 0, 1},  {2, 0, 1}, {1, 0, 1}, {0, 0, 1}};
    LaurentPoly p;
    for (const Term& t : terms) p.add_term(Monomial(t.q, t.t), t.c);
    return p;
}

// the printed x^2y^2 rational function: numerator and expanded denominator
LaurentPoly printed_v2_numerator() {
    struct Term { int q, t, c; };
    static const Term terms[] = {{6, 8, 1}, {5, 6, -1}, {4, 6, 1},
                                 {4, 4, -1}, {3, 4, 1}, {3, 2, 1},
                                 {2, 2, -1}, {1, 0, -1}, {0, 0, 1}};
    LaurentPoly p;
    for (const Term& t : terms) p.add_term(Monomial(t.q, t.t), t.c);
    return p;
}

LaurentPoly printed_v2_denominator() {
    struct Term { int q, t, c; };
    static const Term terms[] = {{6, 4, 1}, {5, 4, -2}, {4, 4, 1},
                                 {4, 2, -2}, {3, 2, 4}, {2, 2, -2},
                                 {2, 0, 1},  {1, 0, -2}, {0, 0, 1}};
    LaurentPoly p;
    for (const Term& t : terms) p.add_term(Monomial(t.q, t.t), t.c);
    return p;
}

CheckReport compare_polys(const std::string& name, const LaurentPoly& expected,
                          const LaurentPoly& actual) {
    CheckReport report;
    report.name = name;
    report.pass = expected == actual;
    if (!report.pass) {
        LaurentPoly diff = expected - actual;
        int q = diff.terms().begin()->first.q;
        for (const auto& [m, c] : diff.terms()) q = std::min(q, m.q);
        report.first_divergence = Divergence{q, expected, actual};
        report.nmax_checked = q;
    } else {
        report.nmax_checked = std::max(expected.max_q(), actual.max_q());
    }
    return report;
}

}  // namespace

std::string CheckReport::json() const {
    std::ostringstream out;
    out << "{\"name\":\"" << name << "\",\"status\":\""
        << (pass ? "PASS" : "FAIL") << "\"";
    if (first_divergence) {
        out << ",\"first_divergence\":{\"q_degree\":" << first_divergence->q_degree
            << ",\"expected\":" << first_divergence->expected.json()
            << ",\"actual\":" << first_divergence->actual.json() << "}";
    }
    out << ",\"nmax_checked\":" << nmax_checked << ",\"runtime_ms\":" << runtime_ms
        << "}";
    return out.str();
}

CheckReport compare_series(const std::string& name, const QSeries& expected,
                           const QSeries& actual, int nmax) {
    auto start = Clock::now();
    CheckReport report;
    report.name = name;
    int upto = std::min({nmax, expected.nmax(), actual.nmax()});
    report.nmax_checked = upto;
    std::optional<int> div = expected.first_divergence(actual, upto);
    report.pass = !div.has_value();
    if (div)
        report.first_divergence =
            Divergence{*div, expected.coeff(*div), actual.coeff(*div)};
    return finish(std::move(report), start);
}

CheckReport check_ors_xyv(int v, int nmax) {
    return check_ors_xyv(v, nmax, cf_xyv(v));
}

CheckReport check_ors_xyv(int v, int nmax, const FactoredRational& curve_side) {
    auto start = Clock::now();
    QSeries curve = curve_side.to_series(nmax);
    QSeries hopf_sub = cf_hopf_closed(v).substitute_T().to_series(nmax);
    std::string name = "ors_xyv_v" + std::to_string(v);
    CheckReport report = compare_series(name, curve, hopf_sub, nmax);
    if (report.pass) {
        KRValue link = kr_torus_link(TorusLinkSpec::make(2, 2, v), nmax);
        QSeries rec = qseries_substitute_T(strip_monomial(link, v), nmax);
        report = compare_series(name, curve, rec, nmax);
    }
    return finish(std::move(report), start);
}

CheckReport check_durfee(int kmax, int nmax) {
    auto start = Clock::now();
    QSeries lhs = cf_durfee_lhs(kmax).to_series(nmax);
    QSeries rhs = cf_plane(nmax).to_series(nmax);
    return finish(compare_series("durfee", rhs, lhs, nmax), start);
}

CheckReport check_durfee_t1(int kmax, int nmax) {
    auto start = Clock::now();
    QSeries lhs = specialize(cf_durfee_lhs(kmax).to_series(nmax), Variable::T, 1);
    QSeries rhs = specialize(cf_plane(nmax).to_series(nmax), Variable::T, 1);
    return finish(compare_series("durfee_t1", rhs, lhs, nmax), start);
}

CheckReport check_plane_agreement(int v, int nmax) {
    auto start = Clock::now();
    int upto = std::min(nmax, 2 * v);
    QSeries lhs = cf_xvyv(v).to_series(upto);
    QSeries rhs = cf_plane(std::max(upto, 1)).to_series(upto);
    std::string name = "plane_agreement_v" + std::to_string(v);
    return finish(compare_series(name, rhs, lhs, upto), start);
}

CheckReport check_appendix_golden() {
    auto start = Clock::now();
    LaurentPoly got = cf_xvyv(3).to_polynomial_total_degree(10);
    CheckReport report = compare_polys("appendix_golden", appendix_golden_poly(), got);
    if (report.pass) {
        FactoredRational v2 = cf_xvyv(2);
        report = compare_polys("appendix_golden", printed_v2_numerator(),
                               v2.numerator());
        if (report.pass)
            report = compare_polys("appendix_golden", printed_v2_denominator(),
                                   v2.denominator_expanded());
    }
    return finish(std::move(report), start);
}

CheckReport check_wdp_oracle(int v, int nmax, long budget_ms) {
    auto start = Clock::now();
    CheckReport report;
    report.name = v > 0 ? "wdp_oracle_v" + std::to_string(v) : "wdp_oracle_plane";
    FactoredRational form = v > 0 ? cf_xvyv(v) : cf_plane(std::max(nmax, 1));
    QSeries series = form.to_series(nmax);
    report.pass = true;
    for (int n = 0; n <= nmax; ++n) {
        if (budget_ms > 0 && n > 0 && ms_since(start) > budget_ms) break;
        int rows = v > 0 ? v : (n + 1) / 2;
        LaurentPoly agg = wdp_aggregate(n, std::max(rows, 1));
        LaurentPoly expect = series.coeff(n).shifted(n, 0);
        report.nmax_checked = n;
        if (agg != expect) {
            report.pass = false;
            report.first_divergence = Divergence{n, expect, agg};
            break;
        }
    }
    return finish(std::move(report), start);
}

CheckReport check_vertical_oracle(int u, int v, int nmax, long budget_ms) {
    auto start = Clock::now();
    CheckReport report;
    report.name =
        "vertical_oracle_u" + std::to_string(u) + "_v" + std::to_string(v);
    FactoredRational form = u == 1 ? cf_xyv(v) : cf_x2yv(v);
    QSeries series = form.to_series(nmax);
    report.pass = true;
    for (int n = 0; n <= nmax; ++n) {
        if (budget_ms > 0 && n > 0 && ms_since(start) > budget_ms) break;
        LaurentPoly agg = vertical_aggregate(n, u, v);
        LaurentPoly expect = series.coeff(n).shifted(n, 0);
        report.nmax_checked = n;
        if (agg != expect) {
            report.pass = false;
            report.first_divergence = Divergence{n, expect, agg};
            break;
        }
    }
    return finish(std::move(report), start);
}

std::vector<CheckReport> check_overlaps(int nmax) {
    struct Item {
        const char* name;
        FactoredRational lhs, rhs;
    };
    std::vector<Item> items;
    items.push_back({"overlap_xvyv1_nodal", cf_xvyv(1), cf_nodal_reduced()});
    items.push_back({"overlap_xyv1_nodal", cf_xyv(1), cf_nodal_reduced()});
    items.push_back({"overlap_x2y2_xvyv2", cf_x2yv(2), cf_xvyv(2)});
    items.push_back({"overlap_xvm1yv2_xyv2", cf_xvm1yv(2), cf_xyv(2)});
    items.push_back({"overlap_xvm2yv3_xyv3", cf_xvm2yv(3), cf_xyv(3)});
    items.push_back({"overlap_xvm2yv4_x2yv4", cf_xvm2yv(4), cf_x2yv(4)});
    std::vector<CheckReport> out;
    for (const Item& item : items) {
        auto start = Clock::now();
        out.push_back(finish(compare_series(item.name, item.lhs.to_series(nmax),
                                            item.rhs.to_series(nmax), nmax),
                             start));
    }
    return out;
}

std::vector<CheckReport> run_default_battery(long budget_ms) {
    std::vector<CheckReport> out;
    for (int v = 1; v <= 6; ++v) out.push_back(check_ors_xyv(v, 20));
    out.push_back(check_durfee(12, 24));
    out.push_back(check_durfee_t1(12, 24));
    out.push_back(check_plane_agreement(10, 20));
    out.push_back(check_appendix_golden());
    for (CheckReport& r : check_overlaps(20)) out.push_back(std::move(r));
    for (int v = 1; v <= 4; ++v) out.push_back(check_wdp_oracle(v, 12, budget_ms));
    out.push_back(check_wdp_oracle(0, 12, budget_ms));
    for (int v = 1; v <= 4; ++v)
        out.push_back(check_vertical_oracle(1, v, 14, budget_ms));
    for (int v = 1; v <= 3; ++v)
        out.push_back(check_vertical_oracle(2, v, 14, budget_ms));
    std::sort(out.begin(), out.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
    return out;
}

FactoredRational perturb_factor(const FactoredRational& r, std::size_t index,
                                int dalpha, int dbeta) {
    std::vector<Factor> den = r.denominator();
    den.at(index).alpha += dalpha;
    den.at(index).beta += dbeta;
    return FactoredRational(r.numerator(), std::move(den));
}

FactoredRational perturb_numerator_term(const FactoredRational& r,
                                        std::size_t term_index, int dq, int dt) {
    LaurentPoly num;
    std::size_t i = 0;
    for (const auto& [m, c] : r.numerator().terms()) {
        if (i++ == term_index)
            num.add_term(Monomial(m.q + dq, m.t + dt, m.a), c);
        else
            num.add_term(m, c);
    }
    return FactoredRational(std::move(num), r.denominator());
}

}  // namespace hilbzeta
