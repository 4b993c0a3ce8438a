#include "hilbzeta/verify.hpp"

#include "hilbzeta/closed_forms.hpp"

#include <doctest.h>

using namespace hilbzeta;

TEST_SUITE("verify") {

TEST_CASE("ors check passes for v = 1 and 3") {
    CheckReport r1 = check_ors_xyv(1, 20);
    CHECK(r1.pass);
    CHECK(r1.name == "ors_xyv_v1");
    CHECK(!r1.first_divergence.has_value());
    CHECK(check_ors_xyv(3, 20).pass);
}

TEST_CASE("ors check fails on a perturbed curve form") {
    FactoredRational bad = perturb_factor(cf_xyv(3), 1, 1, 0);
    CheckReport r = check_ors_xyv(3, 20, bad);
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.first_divergence.has_value());
    CHECK(r.first_divergence->q_degree <= 10);
    CHECK(r.first_divergence->expected != r.first_divergence->actual);
}

TEST_CASE("durfee check") {
    CHECK(check_durfee(12, 24).pass);
    CHECK(check_durfee_t1(12, 24).pass);
    CheckReport r = check_durfee(1, 4);
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.first_divergence.has_value());
    CHECK(r.first_divergence->q_degree == 3);
    // the truncated core sum overshoots by T^2 and misses T^4 at Q^3
    CHECK(r.first_divergence->actual - r.first_divergence->expected ==
          LaurentPoly::term(1, 0, 2) - LaurentPoly::term(1, 0, 4));
}

TEST_CASE("plane agreement compares only inside the isomorphism window") {
    CHECK(check_plane_agreement(10, 20).pass);
    CHECK(check_plane_agreement(2, 20).pass);  // window ends at Q^4
    CHECK(check_plane_agreement(1, 20).pass);  // window ends at Q^2
    CHECK(check_plane_agreement(1, 20).nmax_checked == 2);
}

TEST_CASE("appendix golden") {
    CheckReport r = check_appendix_golden();
    CHECK(r.pass);
    CHECK(r.runtime_ms < 1000);
}

TEST_CASE("enumeration oracles") {
    CHECK(check_wdp_oracle(2, 10).pass);
    CHECK(check_wdp_oracle(0, 10).pass);  // plane, unrestricted rows
    CHECK(check_vertical_oracle(1, 2, 14).pass);
    CHECK(check_vertical_oracle(2, 2, 12).pass);
}

TEST_CASE("budget caps the oracle depth") {
    CheckReport r = check_wdp_oracle(3, 12, /*budget_ms=*/1);
    CHECK(r.pass);  // whatever was checked in time agreed
    CHECK(r.nmax_checked <= 12);
}

TEST_CASE("overlap battery") {
    for (const CheckReport& r : check_overlaps(20)) {
        CAPTURE(r.name);
        CHECK(r.pass);
    }
}

TEST_CASE("report json shape") {
    CheckReport r = check_ors_xyv(1, 8);
    std::string j = r.json();
    CHECK(j.find("\"name\":\"ors_xyv_v1\"") != std::string::npos);
    CHECK(j.find("\"status\":\"PASS\"") != std::string::npos);
    CHECK(j.find("\"runtime_ms\":") != std::string::npos);
    CHECK(j.find("first_divergence") == std::string::npos);

    CheckReport f = check_durfee(1, 4);
    std::string jf = f.json();
    CHECK(jf.find("\"status\":\"FAIL\"") != std::string::npos);
    CHECK(jf.find("\"first_divergence\":{\"q_degree\":3") != std::string::npos);
    CHECK(jf.find("\"expected\":{\"terms\":") != std::string::npos);
}

TEST_CASE("perturbation helpers") {
    FactoredRational base = cf_xyv(2);
    FactoredRational p = perturb_factor(base, 0, 1, 0);
    CHECK(p.denominator() != base.denominator());
    CHECK(p.numerator() == base.numerator());
    FactoredRational q = perturb_numerator_term(base, 1, 0, 1);
    CHECK(q.numerator() != base.numerator());
    CHECK(q.denominator() == base.denominator());
    CHECK_THROWS_AS(perturb_factor(base, 99, 1, 0), std::out_of_range);
}

TEST_CASE("high-degree numerator perturbations diverge at their own degree") {
    // terms of cf_xvyv(3) above Q^10 cannot show up by Q^10; they do show
    // up at their own degree once the window is deep enough
    FactoredRational base = cf_xvyv(3);
    QSeries ref = base.to_series(14);
    std::size_t idx = 0;
    for (const auto& [m, c] : base.numerator().terms()) {
        if (m.q > 10) {
            FactoredRational bad = perturb_numerator_term(base, idx, 0, 1);
            auto div = bad.to_series(14).first_divergence(ref, 14);
            REQUIRE(div.has_value());
            CHECK(*div == m.q);
        }
        ++idx;
    }
}

TEST_CASE("default battery is green and sorted") {
    std::vector<CheckReport> reports = run_default_battery();
    CHECK(reports.size() > 15);
    for (std::size_t i = 0; i + 1 < reports.size(); ++i)
        CHECK(reports[i].name <= reports[i + 1].name);
    for (const CheckReport& r : reports) {
        CAPTURE(r.name);
        CHECK(r.pass);
    }
}

}  // TEST_SUITE
