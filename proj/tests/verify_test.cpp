#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "swlink/alexander.hpp"
#include "swlink/verify.hpp"

using swlink::run_verify;
using swlink::Suite;
using swlink::SweepSpec;

TEST_CASE("every suite passes on a small grid") {
    SweepSpec spec;
    spec.p = {1, 4};
    spec.q = {2, 4};
    spec.n = {1, 2};
    spec.r = {1, 2};
    for (Suite suite : {Suite::alexander, Suite::count, Suite::symmetry, Suite::recurrence,
                        Suite::consistency}) {
        spec.suite = suite;
        const auto report = run_verify(spec);
        CHECK(report.all_pass());
        CHECK(report.passed > 0);
        CHECK(report.passed == report.checks.size());
    }
}

TEST_CASE("the all suite aggregates every identity") {
    SweepSpec spec;
    spec.p = {1, 3};
    spec.q = {2, 4};
    spec.n = {1, 2};
    spec.r = {1, 2};
    spec.suite = Suite::all;
    const auto report = run_verify(spec);
    CHECK(report.all_pass());
    std::set<std::string> identities;
    for (const auto& check : report.checks) identities.insert(check.identity);
    CHECK(identities.count("alexander det=closed") == 1);
    CHECK(identities.count("count formula vs enumeration") == 1);
    CHECK(identities.count("sw conjugation symmetry") == 1);
    CHECK(identities.count("alexander recurrence") == 1);
    CHECK(identities.count("sw branch general") == 1);
    CHECK(identities.count("fiber sum consistency") == 1);
    CHECK(identities.count("collapse growth") == 1);
}

TEST_CASE("passing checks carry no detail, cells are labeled") {
    SweepSpec spec;
    spec.p = {2, 3};
    spec.q = {3, 3};
    spec.suite = Suite::alexander;
    const auto report = run_verify(spec);
    for (const auto& check : report.checks) {
        CHECK(check.pass);
        CHECK(check.detail.empty());
        CHECK_FALSE(check.cell.empty());
    }
}

TEST_CASE("invalid sweep specs are rejected") {
    SweepSpec spec;
    spec.p = {5, 3};
    CHECK_THROWS_AS(run_verify(spec), std::invalid_argument);
    spec = SweepSpec{};
    spec.p = {0, 4};
    CHECK_THROWS_AS(run_verify(spec), std::invalid_argument);
    spec = SweepSpec{};
    spec.q = {2, 25};
    CHECK_THROWS_AS(run_verify(spec), std::invalid_argument);
    spec = SweepSpec{};
    spec.n = {0, 2};
    CHECK_THROWS_AS(run_verify(spec), std::invalid_argument);
}

TEST_CASE("reference branches at pinned parameters") {
    using swlink::LaurentPolynomial;
    const auto& vars = swlink::symmetric_vars();
    CHECK(swlink::reference::sw_branch_q2(1, 1, 2) ==
          LaurentPolynomial::from_terms(vars, {{{-1, -3}, 1}, {{1, 3}, 1}}));
    CHECK(swlink::reference::sw_branch_p1(1, 1, 2) ==
          LaurentPolynomial::from_terms(vars, {{{-1, -1}, 1}, {{1, 1}, 1}}));
    CHECK(swlink::reference::sw_branch_general(1, 1, 2, 3) ==
          LaurentPolynomial::from_terms(vars, {{{-2, -4}, 1}, {{0, 0}, 1}, {{2, 4}, 1}}));
}
