#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "swlink/serialize.hpp"
#include "test_support.hpp"

using swlink::BraidWord;
using swlink::Int;
using swlink::LaurentPolynomial;
using swlink::polynomial_from_json;
using swlink::to_canonical_json;
using testsupport::random_poly;

namespace {
const std::vector<std::string> XT{"x", "t"};
}

TEST_CASE("canonical bytes of 1 + x t^3") {
    const auto p = LaurentPolynomial::from_terms(XT, {{{1, 3}, 1}, {{0, 0}, 1}});
    CHECK(to_canonical_json(p) ==
          R"({"vars":["x","t"],"terms":[{"exp":[0,0],"coeff":"1"},{"exp":[1,3],"coeff":"1"}]})");
}

TEST_CASE("zero polynomial serializes with an empty term list") {
    CHECK(to_canonical_json(LaurentPolynomial(XT)) == R"({"vars":["x","t"],"terms":[]})");
    CHECK(polynomial_from_json(R"({"vars":["x","t"],"terms":[]})") == LaurentPolynomial(XT));
}

TEST_CASE("round-trip is the identity and re-emission is byte-stable") {
    std::mt19937 rng(2718);
    for (int i = 0; i < 60; ++i) {
        const auto p = random_poly(rng, XT);
        const auto text = to_canonical_json(p);
        const auto parsed = polynomial_from_json(text);
        CHECK(parsed == p);
        CHECK(to_canonical_json(parsed) == text);
    }
}

TEST_CASE("huge coefficients survive the decimal-string route") {
    Int big = 1;
    big <<= 130;
    big += 12345;
    const auto p = LaurentPolynomial::monomial(XT, {-3, 2}, big);
    const auto q = polynomial_from_json(to_canonical_json(p));
    CHECK(q.coefficient({-3, 2}) == big);
}

TEST_CASE("non-canonical input is canonicalized on read") {
    // duplicate exponents merge, zeros drop
    const auto p = polynomial_from_json(
        R"({"vars":["x","t"],"terms":[{"exp":[1,1],"coeff":"2"},{"exp":[1,1],"coeff":"3"},)"
        R"({"exp":[0,0],"coeff":"0"}]})");
    CHECK(p == LaurentPolynomial::monomial(XT, {1, 1}, 5));
}

TEST_CASE("malformed polynomial input is rejected with a reason") {
    CHECK_THROWS_AS(polynomial_from_json("not json"), std::runtime_error);
    CHECK_THROWS_AS(polynomial_from_json(R"({"terms":[]})"), std::runtime_error);
    CHECK_THROWS_AS(polynomial_from_json(R"({"vars":["x"],"terms":[{"exp":[1,2],"coeff":"1"}]})"),
                    std::runtime_error);
    CHECK_THROWS_AS(polynomial_from_json(R"({"vars":["x"],"terms":[{"exp":[1],"coeff":"12a"}]})"),
                    std::runtime_error);
    CHECK_THROWS_AS(polynomial_from_json(R"({"vars":["x"],"terms":[{"exp":[1],"coeff":1}]})"),
                    std::runtime_error);
    CHECK_THROWS_AS(polynomial_from_json(R"({"vars":["x","x"],"terms":[]})"),
                    std::invalid_argument);
}

TEST_CASE("braid word wire format") {
    const BraidWord word(4, {{3, 1}, {2, 1}, {1, -1}});
    const auto text = swlink::to_json(word);
    CHECK(text == R"({"strands":4,"letters":[[3,1],[2,1],[1,-1]]})");
    CHECK(swlink::braid_word_from_json(text) == word);
    CHECK_THROWS_AS(swlink::braid_word_from_json(R"({"strands":4})"), std::runtime_error);
    CHECK_THROWS_AS(swlink::braid_word_from_json(R"({"strands":2,"letters":[[5,1]]})"),
                    std::out_of_range);
}
