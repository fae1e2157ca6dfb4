#include "swlink/alexander.hpp"

#include <stdexcept>

namespace swlink {

namespace {

LaurentPolynomial det_of_braid(const PolyMatrix& gamma) {
    const auto& vars = alexander_vars();
    const std::size_t m = gamma.size();
    PolyMatrix char_like(m, vars);
    const auto x = LaurentPolynomial::monomial(vars, {1, 0}, 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            LaurentPolynomial entry = LaurentPolynomial(vars) - x * extend_to(gamma.at(i, j), vars);
            if (i == j) entry = entry + LaurentPolynomial::constant(vars, 1);
            char_like.at(i, j) = entry;
        }
    }
    return determinant(char_like);
}

void check_family_normalization(const LaurentPolynomial& delta, int p, int q) {
    if (delta.coefficient({0, 0}) != 1)
        throw std::logic_error("family Alexander polynomial at p=" + std::to_string(p) +
                               " q=" + std::to_string(q) + " lacks constant term 1");
}

}  // namespace

const std::vector<std::string>& alexander_vars() {
    static const std::vector<std::string> vars{"x", "t"};
    return vars;
}

const std::vector<std::string>& symmetric_vars() {
    static const std::vector<std::string> vars{"xi", "tau"};
    return vars;
}

LaurentPolynomial alexander_via_determinant(int p, int q) {
    if (p < 1) throw std::domain_error("alexander_via_determinant requires p >= 1, got " +
                                       std::to_string(p));
    if (q < 2 || q > 20)
        throw std::domain_error("alexander_via_determinant requires 2 <= q <= 20, got " +
                                std::to_string(q));
    LaurentPolynomial delta = det_of_braid(braid_matrix(torus_family_braid(p, q)));
    check_family_normalization(delta, p, q);
    return delta;
}

LaurentPolynomial alexander_closed_form(int p, int q) {
    if (p < 1) throw std::domain_error("alexander_closed_form requires p >= 1, got " +
                                       std::to_string(p));
    if (q < 2) throw std::domain_error("alexander_closed_form requires q >= 2, got " +
                                       std::to_string(q));
    const auto& vars = alexander_vars();
    if (q == 2)
        return LaurentPolynomial::from_terms(vars, {{{0, 0}, 1}, {{1, 2 * p - 1}, 1}});
    if (p == 1) {
        // geometric sum 1 + xt + ... + (xt)^{q-1}
        LaurentPolynomial sum(vars);
        for (int j = 0; j <= q - 1; ++j) sum.add_term({j, j}, 1);
        return sum;
    }
    LaurentPolynomial alternating(vars);  // (1 + t^{2p-3}) / (1 + t) as a sum
    for (int i = 0; i <= 2 * p - 4; ++i) alternating.add_term({0, i}, (i % 2 == 0) ? 1 : -1);
    LaurentPolynomial geometric(vars);    // (1 - (xt)^{q-2}) / (1 - xt) as a sum
    for (int j = 0; j <= q - 3; ++j) geometric.add_term({j, j}, 1);

    LaurentPolynomial delta = LaurentPolynomial::from_terms(
        vars, {{{0, 0}, 1}, {{q - 1, 2 * p + q - 3}, 1}});
    delta = delta + LaurentPolynomial::monomial(vars, {1, 2}, 1) * alternating * geometric;
    check_family_normalization(delta, p, q);
    return delta;
}

LaurentPolynomial symmetrize(int p, int q, const LaurentPolynomial& delta) {
    if (delta.variables() != alexander_vars())
        throw std::invalid_argument("symmetrize expects a polynomial in (x, t)");
    for (const auto& [e, c] : delta.terms()) {
        if (e[0] < 0 || e[1] < 0)
            throw std::invalid_argument("symmetrize expects nonnegative exponents");
    }
    const auto& vars = symmetric_vars();
    LaurentPolynomial squared = substitute(delta, vars,
                                           {{"x", {+1, {2, 0}}}, {"t", {+1, {0, 2}}}});
    return squared * LaurentPolynomial::monomial(vars, {-(q - 1), -(2 * p + q - 3)}, 1);
}

LaurentPolynomial alexander_general(const BraidWord& word) {
    if (word.strands() > 20)
        throw std::domain_error("alexander_general supports strands <= 20, got " +
                                std::to_string(word.strands()));
    return det_of_braid(braid_matrix(word));
}

}  // namespace swlink
