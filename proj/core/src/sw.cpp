#include "swlink/sw.hpp"

#include <algorithm>
#include <stdexcept>

namespace swlink {

namespace {

void check_params(const FamilyParams& params) {
    if (params.p < 1) throw std::domain_error("requires p >= 1, got " + std::to_string(params.p));
    if (params.q < 2) throw std::domain_error("requires q >= 2, got " + std::to_string(params.q));
    if (params.n < 1) throw std::domain_error("requires n >= 1, got " + std::to_string(params.n));
    if (params.r < 1) throw std::domain_error("requires r >= 1, got " + std::to_string(params.r));
}

}  // namespace

std::string to_string(Provenance provenance) {
    switch (provenance) {
        case Provenance::link_surgery: return "link-surgery";
        case Provenance::general_fiber_sum: return "general-fiber-sum";
    }
    throw std::logic_error("unknown provenance");
}

SWInvariant sw_link_surgery(const FamilyParams& params) {
    check_params(params);
    const auto& vars = symmetric_vars();
    const auto xi_pair = LaurentPolynomial::from_terms(vars, {{{-1, 0}, 1}, {{1, 0}, -1}});
    const auto xi_q_pair = LaurentPolynomial::from_terms(
        vars, {{{-params.q, 0}, 1}, {{params.q, 0}, -1}});
    const auto bracket =
        symmetrize(params.p, params.q, alexander_closed_form(params.p, params.q));
    LaurentPolynomial poly = power(xi_pair, static_cast<unsigned>(params.n - 1)) *
                             power(xi_q_pair, static_cast<unsigned>(params.r - 1)) * bracket;
    return {std::move(poly), params, Provenance::link_surgery};
}

SWInvariant sw_fiber_sum_general(const LaurentPolynomial& sw_x,
                                 const std::string& fiber_var, int r, int p, int q) {
    if (r < 1) throw std::domain_error("requires r >= 1, got " + std::to_string(r));
    if (p < 1) throw std::domain_error("requires p >= 1, got " + std::to_string(p));
    if (q < 2) throw std::domain_error("requires q >= 2, got " + std::to_string(q));
    const auto& source_vars = sw_x.variables();
    if (std::find(source_vars.begin(), source_vars.end(), fiber_var) == source_vars.end())
        throw std::invalid_argument("fiber variable '" + fiber_var +
                                    "' is not among the input polynomial's variables");
    if (std::find(source_vars.begin(), source_vars.end(), "tau") != source_vars.end())
        throw std::invalid_argument("input polynomial already contains tau");

    std::vector<std::string> vars = source_vars;
    vars.push_back("tau");
    const std::size_t fiber_slot = static_cast<std::size_t>(
        std::find(vars.begin(), vars.end(), fiber_var) - vars.begin());
    auto fiber_mono = [&](int e) {
        ExponentVector exp(vars.size(), 0);
        exp[fiber_slot] = e;
        return exp;
    };
    const auto f_pair = LaurentPolynomial::from_terms(
        vars, {{fiber_mono(-1), 1}, {fiber_mono(1), -1}});
    const auto f_q_pair = LaurentPolynomial::from_terms(
        vars, {{fiber_mono(-q), 1}, {fiber_mono(q), -1}});
    LaurentPolynomial sym = symmetrize(p, q, alexander_closed_form(p, q));
    sym = extend_to(rename_variables(sym, {fiber_var, "tau"}), vars);

    LaurentPolynomial poly = extend_to(sw_x, vars) * f_pair *
                             power(f_q_pair, static_cast<unsigned>(r - 1)) * sym;
    return {std::move(poly), FamilyParams{p, q, 1, r}, Provenance::general_fiber_sum};
}

LaurentPolynomial elliptic_surface_sw(int n, const std::string& fiber_var) {
    if (n < 2) throw std::domain_error("elliptic_surface_sw requires n >= 2, got " +
                                       std::to_string(n));
    const std::vector<std::string> vars{fiber_var};
    const auto pair = LaurentPolynomial::from_terms(vars, {{{-1}, 1}, {{1}, -1}});
    return power(pair, static_cast<unsigned>(n - 2));
}

std::pair<LaurentPolynomial, std::size_t> collapse_count(const SWInvariant& sw) {
    const auto& vars = sw.poly.variables();
    if (vars.size() != 2)
        throw std::invalid_argument("collapse_count expects a two-variable polynomial, got " +
                                    std::to_string(vars.size()) + " variables");
    std::size_t tau_slot;
    if (vars[1] == "tau") tau_slot = 1;
    else if (vars[0] == "tau") tau_slot = 0;
    else throw std::invalid_argument("collapse_count expects tau among the variables");
    const std::string& fiber = vars[1 - tau_slot];

    LaurentPolynomial collapsed = substitute(
        sw.poly, {fiber}, {{fiber, {+1, {1}}}, {"tau", {+1, {1}}}});
    const std::size_t count = collapsed.term_count();
    return {std::move(collapsed), count};
}

}  // namespace swlink
