#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "swlink/sw.hpp"
#include "swlink/verify.hpp"

using swlink::collapse_count;
using swlink::elliptic_surface_sw;
using swlink::FamilyParams;
using swlink::LaurentPolynomial;
using swlink::Provenance;
using swlink::sw_fiber_sum_general;
using swlink::sw_link_surgery;
using swlink::SWInvariant;
using swlink::symmetric_vars;

namespace {
const std::vector<std::string> F_TAU{"f", "tau"};
}

TEST_CASE("link surgery invariant: pinned cases") {
    const auto trivial = sw_link_surgery({2, 3, 1, 1});
    CHECK(trivial.provenance == Provenance::link_surgery);
    CHECK(trivial.poly == LaurentPolynomial::from_terms(
                              symmetric_vars(), {{{-2, -4}, 1}, {{0, 0}, 1}, {{2, 4}, 1}}));

    CHECK(sw_link_surgery({3, 2, 1, 1}).poly ==
          LaurentPolynomial::from_terms(symmetric_vars(), {{{-1, -5}, 1}, {{1, 5}, 1}}));

    CHECK(sw_link_surgery({1, 3, 2, 1}).poly ==
          LaurentPolynomial::from_terms(symmetric_vars(), {{{-3, -2}, 1},
                                                           {{-1, 0}, 1},
                                                           {{1, 2}, 1},
                                                           {{-1, -2}, -1},
                                                           {{1, 0}, -1},
                                                           {{3, 2}, -1}}));
}

TEST_CASE("single code path matches all three closed-form branches") {
    for (int n = 1; n <= 3; ++n) {
        for (int r = 1; r <= 3; ++r) {
            for (int p = 1; p <= 5; ++p) {
                const auto q2 = sw_link_surgery({p, 2, n, r}).poly;
                CHECK(q2 == swlink::reference::sw_branch_q2(n, r, p));
            }
            for (int q = 2; q <= 5; ++q) {
                const auto p1 = sw_link_surgery({1, q, n, r}).poly;
                CHECK(p1 == swlink::reference::sw_branch_p1(n, r, q));
            }
            for (int p = 2; p <= 5; ++p)
                for (int q = 3; q <= 5; ++q)
                    CHECK(sw_link_surgery({p, q, n, r}).poly ==
                          swlink::reference::sw_branch_general(n, r, p, q));
        }
    }
}

TEST_CASE("conjugation symmetry with sign (-1)^{n+r}") {
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r)
            for (int p = 1; p <= 4; ++p)
                for (int q = 2; q <= 5; ++q) {
                    const auto sw = sw_link_surgery({p, q, n, r}).poly;
                    const auto expected = ((n + r) % 2 == 0) ? sw : -sw;
                    CHECK(mirror(sw) == expected);
                }
}

TEST_CASE("general fiber sum: pinned expansion for sw_x = 1") {
    const auto one = LaurentPolynomial::constant({"f"}, 1);
    const auto sum = sw_fiber_sum_general(one, "f", 1, 2, 3);
    CHECK(sum.provenance == Provenance::general_fiber_sum);
    CHECK(sum.poly == LaurentPolynomial::from_terms(F_TAU, {{{-3, -4}, 1},
                                                            {{-1, 0}, 1},
                                                            {{1, 4}, 1},
                                                            {{-1, -4}, -1},
                                                            {{1, 0}, -1},
                                                            {{3, 4}, -1}}));
}

TEST_CASE("general fiber sum agrees with the link-surgery formula") {
    for (int n = 2; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r)
            for (int p = 1; p <= 4; ++p)
                for (int q = 2; q <= 4; ++q) {
                    const auto via_sum =
                        sw_fiber_sum_general(elliptic_surface_sw(n, "f"), "f", r, p, q).poly;
                    const auto direct =
                        rename_variables(sw_link_surgery({p, q, n, r}).poly, {"f", "tau"});
                    CHECK(via_sum == direct);
                }
}

TEST_CASE("fiber sum annihilates zero input") {
    const auto zero = LaurentPolynomial({"f"});
    CHECK(sw_fiber_sum_general(zero, "f", 2, 3, 4).poly.is_zero());
}

TEST_CASE("elliptic surface background values") {
    CHECK(elliptic_surface_sw(2) == LaurentPolynomial::constant({"f"}, 1));
    CHECK(elliptic_surface_sw(3) ==
          LaurentPolynomial::from_terms({"f"}, {{{-1}, 1}, {{1}, -1}}));
    for (int n = 2; n <= 8; ++n)
        CHECK(elliptic_surface_sw(n).term_count() == static_cast<std::size_t>(n - 1));
    CHECK_THROWS_AS(elliptic_surface_sw(1), std::domain_error);
}

TEST_CASE("collapse: pinned cases") {
    const SWInvariant sym{LaurentPolynomial::from_terms(
                              symmetric_vars(), {{{-2, -4}, 1}, {{0, 0}, 1}, {{2, 4}, 1}}),
                          FamilyParams{2, 3, 1, 1}, Provenance::link_surgery};
    const auto [collapsed, count] = collapse_count(sym);
    CHECK(collapsed ==
          LaurentPolynomial::from_terms({"xi"}, {{{-6}, 1}, {{0}, 1}, {{6}, 1}}));
    CHECK(count == 3);

    const auto one = LaurentPolynomial::constant({"f"}, 1);
    const auto sum = sw_fiber_sum_general(one, "f", 1, 2, 3);
    const auto [collapsed2, count2] = collapse_count(sum);
    CHECK(collapsed2 == LaurentPolynomial::from_terms({"f"}, {{{-7}, 1},
                                                              {{-1}, 1},
                                                              {{5}, 1},
                                                              {{-5}, -1},
                                                              {{1}, -1},
                                                              {{7}, -1}}));
    CHECK(count2 == 6);

    const SWInvariant zero{LaurentPolynomial(F_TAU), FamilyParams{}, Provenance::general_fiber_sum};
    const auto [collapsed3, count3] = collapse_count(zero);
    CHECK(collapsed3.is_zero());
    CHECK(count3 == 0);
}

TEST_CASE("collapsed support grows strictly with p") {
    const auto one = LaurentPolynomial::constant({"f"}, 1);
    for (int q = 3; q <= 5; ++q) {
        std::size_t previous = 0;
        for (int p = 2; p <= 10; ++p) {
            const auto [collapsed, count] = collapse_count(sw_fiber_sum_general(one, "f", 1, p, q));
            if (p > 2) CHECK(count > previous);
            previous = count;
        }
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(sw_link_surgery({0, 3, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(sw_link_surgery({2, 1, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(sw_link_surgery({2, 3, 0, 1}), std::domain_error);
    CHECK_THROWS_AS(sw_link_surgery({2, 3, 1, 0}), std::domain_error);

    const auto one = LaurentPolynomial::constant({"f"}, 1);
    CHECK_THROWS_WITH_AS(sw_fiber_sum_general(one, "g", 1, 2, 3),
                         doctest::Contains("'g'"), std::invalid_argument);
    const auto with_tau = LaurentPolynomial::constant(F_TAU, 1);
    CHECK_THROWS_WITH_AS(sw_fiber_sum_general(with_tau, "f", 1, 2, 3),
                         doctest::Contains("tau"), std::invalid_argument);

    const SWInvariant three_vars{LaurentPolynomial::constant({"a", "b", "tau"}, 1),
                                 FamilyParams{}, Provenance::general_fiber_sum};
    CHECK_THROWS_AS(collapse_count(three_vars), std::invalid_argument);
    const SWInvariant no_tau{LaurentPolynomial::constant({"a", "b"}, 1), FamilyParams{},
                             Provenance::general_fiber_sum};
    CHECK_THROWS_AS(collapse_count(no_tau), std::invalid_argument);
}
