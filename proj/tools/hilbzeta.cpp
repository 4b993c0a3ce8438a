// Command-line front end: compute the Poincare series of a curve, list
// strata, or run the verification battery. One JSON document per
// invocation (JSON lines for enumeration); exit 0 on success / all-pass,
// 1 on a failed verification, 2 on usage errors.

#include "hilbzeta/closed_forms.hpp"
#include "hilbzeta/kr.hpp"
#include "hilbzeta/partitions.hpp"
#include "hilbzeta/series.hpp"
#include "hilbzeta/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <future>
#include <iostream>
#include <sstream>

namespace {

using namespace hilbzeta;
using Clock = std::chrono::steady_clock;

bool g_profile = false;

struct PhaseTimer {
    const char* label;
    Clock::time_point start = Clock::now();
    explicit PhaseTimer(const char* l) : label(l) {}
    ~PhaseTimer() {
        if (g_profile) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          Clock::now() - start)
                          .count();
            std::cerr << "profile: " << label << " " << ms << " ms\n";
        }
    }
};

constexpr const char* kSupportedFamilies =
    "supported curve families x^u y^v: u=1, u=2, u=v, u=v-1, u=v-2 (1 <= u <= v)";

int cmd_series(int u, int v, int nmax, const std::string& truncation) {
    std::optional<FactoredRational> form;
    {
        PhaseTimer t("build_form");
        form = series_for_curve(u, v);
    }
    if (!form) {
        std::cerr << "no closed form for u=" << u << ", v=" << v << "; "
                  << kSupportedFamilies << "\n";
        return 2;
    }
    std::string out;
    {
        PhaseTimer t("series_arithmetic");
        if (truncation == "total_degree") {
            LaurentPoly poly = form->to_polynomial_total_degree(nmax);
            out = QSeries::from_poly(poly, nmax).json();
        } else {
            out = form->to_series(nmax).json();
        }
    }
    std::cout << out << "\n";
    return 0;
}

std::string json_layers(const WeakDiagonalPartition& p) {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const Layer& l : p.layers()) {
        if (!first) out << ",";
        first = false;
        out << "[\"" << (l.kind == LayerKind::One ? "ONE" : "TWO") << "\","
            << l.i << "," << l.j << "]";
    }
    out << "]";
    return out.str();
}

int cmd_enumerate(std::optional<int> u, std::optional<int> v, int n,
                  const std::string& format) {
    bool json = format == "json";
    std::ostringstream out;
    if (!u && !v) {  // the plane: every weak diagonal partition of n boxes
        std::vector<WeakDiagonalPartition> strata;
        {
            PhaseTimer t("enumeration");
            strata = wdp_enumerate(n, std::max((n + 1) / 2, 1));
        }
        PhaseTimer t("serialization");
        for (const WeakDiagonalPartition& p : strata) {
            StratumStats st = p.stats();
            if (json)
                out << "{\"layers\":" << json_layers(p) << ",\"n\":" << st.n
                    << ",\"m1\":" << st.m1 << ",\"m2\":" << st.m2
                    << ",\"contribution\":" << st.contribution().json() << "}\n";
            else
                out << p.str() << "  n=" << st.n << " m1=" << st.m1
                    << " m2=" << st.m2 << "  " << st.contribution().str() << "\n";
        }
    } else if (u && v && (*u == 1 || *u == 2) && *v >= *u) {
        std::vector<VerticalStratum> strata;
        {
            PhaseTimer t("enumeration");
            strata = vertical_enumerate(n, *u, *v);
        }
        PhaseTimer t("serialization");
        for (const VerticalStratum& s : strata) {
            if (json) {
                out << "{\"parts\":[";
                for (size_t i = 0; i < s.parts.size(); ++i)
                    out << (i ? "," : "") << s.parts[i];
                out << "],\"u\":" << s.u << ",\"v\":" << s.v << ",\"n\":" << s.n()
                    << ",\"dim\":" << s.dimension()
                    << ",\"contribution\":" << s.contribution().json() << "}\n";
            } else {
                out << "(";
                for (size_t i = 0; i < s.parts.size(); ++i)
                    out << (i ? "," : "") << s.parts[i];
                out << ")  u=" << s.u << " v=" << s.v << " n=" << s.n()
                    << " dim=" << s.dimension() << "  " << s.contribution().str()
                    << "\n";
            }
        }
    } else if (u && v && *u == *v && *u >= 1) {
        std::vector<WeakDiagonalPartition> strata;
        {
            PhaseTimer t("enumeration");
            strata = wdp_enumerate(n, *v);
        }
        PhaseTimer t("serialization");
        for (const WeakDiagonalPartition& p : strata) {
            StratumStats st = p.stats();
            if (json)
                out << "{\"layers\":" << json_layers(p) << ",\"n\":" << st.n
                    << ",\"m1\":" << st.m1 << ",\"m2\":" << st.m2
                    << ",\"contribution\":" << st.contribution().json() << "}\n";
            else
                out << p.str() << "  n=" << st.n << " m1=" << st.m1
                    << " m2=" << st.m2 << "  " << st.contribution().str() << "\n";
        }
    } else {
        std::cerr << "enumeration needs either no curve (the plane), u in {1,2} "
                     "(vertical strata), or u=v (diagonal strata)\n";
        return 2;
    }
    std::cout << out.str();
    return 0;
}

int cmd_verify(const std::string& suite, std::optional<int> v,
               std::optional<int> kmax, std::optional<int> nmax, long budget_ms) {
    std::vector<std::function<CheckReport()>> tasks;
    std::istringstream names(suite);
    std::string name;
    while (std::getline(names, name, ',')) {
        if (name == "all") {
            for (int vv = 1; vv <= 6; ++vv)
                tasks.push_back([vv] { return check_ors_xyv(vv, 20); });
            tasks.push_back([] { return check_durfee(12, 24); });
            tasks.push_back([] { return check_durfee_t1(12, 24); });
            tasks.push_back([] { return check_plane_agreement(10, 20); });
            tasks.push_back([] { return check_appendix_golden(); });
            tasks.push_back([] {
                CheckReport marker;
                marker.name = "__overlaps__";
                marker.nmax_checked = 20;
                return marker;
            });
            for (int vv = 1; vv <= 4; ++vv)
                tasks.push_back([vv, budget_ms] {
                    return check_wdp_oracle(vv, 12, budget_ms);
                });
            tasks.push_back(
                [budget_ms] { return check_wdp_oracle(0, 12, budget_ms); });
            for (int vv = 1; vv <= 4; ++vv)
                tasks.push_back([vv, budget_ms] {
                    return check_vertical_oracle(1, vv, 14, budget_ms);
                });
            for (int vv = 1; vv <= 3; ++vv)
                tasks.push_back([vv, budget_ms] {
                    return check_vertical_oracle(2, vv, 14, budget_ms);
                });
        } else if (name == "ors_xyv") {
            int lo = v.value_or(1), hi = v.value_or(6);
            for (int vv = lo; vv <= hi; ++vv)
                tasks.push_back(
                    [vv, nmax] { return check_ors_xyv(vv, nmax.value_or(20)); });
        } else if (name == "durfee") {
            tasks.push_back([kmax, nmax] {
                return check_durfee(kmax.value_or(12), nmax.value_or(24));
            });
            tasks.push_back([kmax, nmax] {
                return check_durfee_t1(kmax.value_or(12), nmax.value_or(24));
            });
        } else if (name == "plane_agreement") {
            tasks.push_back([v, nmax] {
                return check_plane_agreement(v.value_or(10), nmax.value_or(20));
            });
        } else if (name == "appendix_golden") {
            tasks.push_back([] { return check_appendix_golden(); });
        } else if (name == "overlaps") {
            // expanded below as a grouped task set
            tasks.push_back([nmax]() -> CheckReport {
                CheckReport marker;
                marker.name = "__overlaps__";
                marker.nmax_checked = nmax.value_or(20);
                return marker;
            });
        } else if (name == "wdp_oracle") {
            int lo = v.value_or(1), hi = v.value_or(4);
            for (int vv = lo; vv <= hi; ++vv)
                tasks.push_back([vv, nmax, budget_ms] {
                    return check_wdp_oracle(vv, nmax.value_or(12), budget_ms);
                });
            if (!v)
                tasks.push_back([nmax, budget_ms] {
                    return check_wdp_oracle(0, nmax.value_or(12), budget_ms);
                });
        } else if (name == "vertical_oracle") {
            int lo1 = v.value_or(1), hi1 = v.value_or(4);
            for (int vv = lo1; vv <= hi1; ++vv)
                tasks.push_back([vv, nmax, budget_ms] {
                    return check_vertical_oracle(1, vv, nmax.value_or(14), budget_ms);
                });
            int lo2 = v.value_or(1), hi2 = v.value_or(3);
            for (int vv = lo2; vv <= hi2; ++vv)
                tasks.push_back([vv, nmax, budget_ms] {
                    return check_vertical_oracle(2, vv, nmax.value_or(14), budget_ms);
                });
        } else {
            std::cerr << "unknown check suite '" << name
                      << "'; known: all, ors_xyv, durfee, plane_agreement, "
                         "appendix_golden, overlaps, wdp_oracle, vertical_oracle\n";
            return 2;
        }
    }
    if (name.empty() && tasks.empty()) {
        std::cerr << "verify: --suite is required\n";
        return 2;
    }

    PhaseTimer total("verify_total");
    std::vector<std::future<CheckReport>> futures;
    futures.reserve(tasks.size());
    for (auto& task : tasks)
        futures.push_back(std::async(std::launch::async, task));
    std::vector<CheckReport> reports;
    for (auto& f : futures) {
        CheckReport r = f.get();
        if (r.name == "__overlaps__") {
            for (CheckReport& o : check_overlaps(r.nmax_checked))
                reports.push_back(std::move(o));
        } else {
            reports.push_back(std::move(r));
        }
    }
    std::sort(reports.begin(), reports.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
    std::cout << "[";
    for (size_t i = 0; i < reports.size(); ++i)
        std::cout << (i ? ",\n " : "\n ") << reports[i].json();
    std::cout << "\n]\n";
    bool all_pass = std::all_of(reports.begin(), reports.end(),
                                [](const CheckReport& r) { return r.pass; });
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poincare series of punctual Hilbert schemes on x^u y^v = 0 "
                 "and colored Khovanov-Rozansky polynomials of torus links"};
    app.require_subcommand(1);
    app.add_flag("--profile", g_profile, "print per-phase timings to stderr");

    int u = 0, v = 0, n = 0, nmax = 0;
    std::string truncation = "q_degree", format = "json", suite;
    long budget_ms = 0;
    bool has_u = false, has_v = false, has_nmax = false;

    CLI::App* series = app.add_subcommand("series", "Poincare series of a curve");
    series->add_option("--u", u, "multiplicity of x")->required();
    series->add_option("--v", v, "multiplicity of y")->required();
    series->add_option("--nmax", nmax, "truncation degree")->required();
    series->add_option("--truncation", truncation, "q_degree or total_degree")
        ->check(CLI::IsMember({"q_degree", "total_degree"}));

    CLI::App* enumerate = app.add_subcommand("enumerate", "list strata");
    enumerate->add_option("--u", u, "multiplicity of x")
        ->each([&](const std::string&) { has_u = true; });
    enumerate->add_option("--v", v, "multiplicity of y")
        ->each([&](const std::string&) { has_v = true; });
    enumerate->add_option("--n", n, "number of points")->required();
    enumerate->add_option("--format", format, "json or ascii")
        ->check(CLI::IsMember({"json", "ascii"}));

    CLI::App* verify = app.add_subcommand("verify", "run identity checks");
    verify->add_option("--suite", suite, "comma-separated check names or 'all'")
        ->required();
    verify->add_option("--v", v, "restrict to one v")
        ->each([&](const std::string&) { has_v = true; });
    int kmax = 0;
    bool has_kmax = false;
    verify->add_option("--kmax", kmax, "Durfee truncation")
        ->each([&](const std::string&) { has_kmax = true; });
    verify->add_option("--nmax", nmax, "comparison depth")
        ->each([&](const std::string&) { has_nmax = true; });
    verify->add_option("--budget-ms", budget_ms, "wall-clock cap per oracle check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(series)) {
            if (u < 1 || v < 1 || u > v) {
                std::cerr << "need 1 <= u <= v; " << kSupportedFamilies << "\n";
                return 2;
            }
            if (nmax < 0) {
                std::cerr << "nmax must be nonnegative\n";
                return 2;
            }
            return cmd_series(u, v, nmax, truncation);
        }
        if (app.got_subcommand(enumerate)) {
            if (n < 0) {
                std::cerr << "n must be nonnegative\n";
                return 2;
            }
            if (has_u != has_v) {
                std::cerr << "give both --u and --v, or neither for the plane\n";
                return 2;
            }
            return cmd_enumerate(has_u ? std::optional<int>(u) : std::nullopt,
                                 has_v ? std::optional<int>(v) : std::nullopt, n,
                                 format);
        }
        if (app.got_subcommand(verify)) {
            return cmd_verify(suite,
                              has_v ? std::optional<int>(v) : std::nullopt,
                              has_kmax ? std::optional<int>(kmax) : std::nullopt,
                              has_nmax ? std::optional<int>(nmax) : std::nullopt,
                              budget_ms);
        }
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
