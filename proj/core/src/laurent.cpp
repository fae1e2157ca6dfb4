#include "swlink/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace swlink {

namespace {

std::string join_names(const std::vector<std::string>& names) {
    std::string out = "[";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) out += ", ";
        out += names[i];
    }
    return out + "]";
}

void check_variable_names(const std::vector<std::string>& names) {
    std::set<std::string> seen;
    for (const auto& name : names) {
        if (name.empty())
            throw std::invalid_argument("variable names must be nonempty");
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate variable name '" + name + "'");
    }
}

void require_same_ring(const char* op, const LaurentPolynomial& a,
                       const LaurentPolynomial& b) {
    if (a.variables() != b.variables())
        throw std::invalid_argument(std::string(op) + ": variable lists differ: " +
                                    join_names(a.variables()) + " vs " +
                                    join_names(b.variables()));
}

void require_arity(const LaurentPolynomial& p, const ExponentVector& e) {
    if (e.size() != p.variables().size())
        throw std::invalid_argument(
            "exponent vector length " + std::to_string(e.size()) +
            " does not match variable count " + std::to_string(p.variables().size()));
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::vector<std::string> variables)
    : vars_(std::move(variables)) {
    check_variable_names(vars_);
}

LaurentPolynomial LaurentPolynomial::constant(std::vector<std::string> variables,
                                              Int value) {
    LaurentPolynomial p(std::move(variables));
    p.add_term(ExponentVector(p.vars_.size(), 0), value);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(std::vector<std::string> variables,
                                              ExponentVector exponents,
                                              Int coefficient) {
    LaurentPolynomial p(std::move(variables));
    require_arity(p, exponents);
    p.add_term(exponents, coefficient);
    return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(
    std::vector<std::string> variables,
    std::initializer_list<std::pair<ExponentVector, Int>> terms) {
    LaurentPolynomial p(std::move(variables));
    for (const auto& [e, c] : terms) {
        require_arity(p, e);
        p.add_term(e, c);
    }
    return p;
}

Int LaurentPolynomial::coefficient(const ExponentVector& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& exponents,
                                 const Int& coefficient) {
    require_arity(*this, exponents);
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same_ring("add", a, b);
    LaurentPolynomial out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, c);
    return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
    LaurentPolynomial out(a.variables());
    for (const auto& [e, c] : a.terms()) out.add_term(e, -c);
    return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same_ring("subtract", a, b);
    LaurentPolynomial out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
    return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same_ring("multiply", a, b);
    LaurentPolynomial out(a.variables());
    ExponentVector e(a.variables().size());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPolynomial power(const LaurentPolynomial& a, unsigned k) {
    LaurentPolynomial result = LaurentPolynomial::constant(a.variables(), 1);
    LaurentPolynomial base = a;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

LaurentPolynomial mirror(const LaurentPolynomial& a) {
    LaurentPolynomial out(a.variables());
    ExponentVector e(a.variables().size());
    for (const auto& [ea, c] : a.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = -ea[i];
        out.add_term(e, c);
    }
    return out;
}

LaurentPolynomial substitute(const LaurentPolynomial& a,
                             std::vector<std::string> target_variables,
                             const std::map<std::string, VariableImage>& images) {
    LaurentPolynomial out(std::move(target_variables));
    const std::size_t target_arity = out.variables().size();
    for (const auto& name : a.variables()) {
        auto it = images.find(name);
        if (it == images.end())
            throw std::invalid_argument("substitute: no image for variable '" + name + "'");
        const VariableImage& img = it->second;
        if (img.sign != 1 && img.sign != -1)
            throw std::invalid_argument("substitute: sign for '" + name + "' must be +1 or -1");
        if (img.exponents.size() != target_arity)
            throw std::invalid_argument("substitute: image of '" + name +
                                        "' has wrong arity for the target ring");
    }

    ExponentVector e(target_arity);
    for (const auto& [ea, ca] : a.terms()) {
        std::fill(e.begin(), e.end(), 0);
        Int c = ca;
        for (std::size_t i = 0; i < a.variables().size(); ++i) {
            const int k = ea[i];
            if (k == 0) continue;
            const VariableImage& img = images.at(a.variables()[i]);
            for (std::size_t j = 0; j < target_arity; ++j) e[j] += img.exponents[j] * k;
            if (img.sign < 0 && k % 2 != 0) c = -c;
        }
        out.add_term(e, c);
    }
    return out;
}

LaurentPolynomial extend_to(const LaurentPolynomial& a,
                            std::vector<std::string> variables) {
    LaurentPolynomial out(std::move(variables));
    std::vector<std::size_t> slot(a.variables().size());
    for (std::size_t i = 0; i < a.variables().size(); ++i) {
        auto it = std::find(out.variables().begin(), out.variables().end(),
                            a.variables()[i]);
        if (it == out.variables().end())
            throw std::invalid_argument("extend_to: variable '" + a.variables()[i] +
                                        "' missing from the target list");
        slot[i] = static_cast<std::size_t>(it - out.variables().begin());
    }
    ExponentVector e(out.variables().size());
    for (const auto& [ea, c] : a.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < slot.size(); ++i) e[slot[i]] = ea[i];
        out.add_term(e, c);
    }
    return out;
}

LaurentPolynomial rename_variables(const LaurentPolynomial& a,
                                   std::vector<std::string> variables) {
    if (variables.size() != a.variables().size())
        throw std::invalid_argument("rename_variables: expected " +
                                    std::to_string(a.variables().size()) +
                                    " names, got " + std::to_string(variables.size()));
    LaurentPolynomial out(std::move(variables));
    for (const auto& [e, c] : a.terms()) out.add_term(e, c);
    return out;
}

std::string to_string(const LaurentPolynomial& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        const bool negative = c < 0;
        const Int magnitude = negative ? Int(-c) : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += a.variables()[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += magnitude.str();
        } else {
            if (magnitude != 1) out += magnitude.str() + "*";
            out += mono;
        }
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& a) {
    return os << to_string(a);
}

}  // namespace swlink
