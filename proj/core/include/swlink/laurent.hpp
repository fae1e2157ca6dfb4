#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace swlink {

/// Arbitrary-precision signed integer. Coefficient arithmetic is exact:
/// polynomial equality is the library's core judgment and must never be
/// spoiled by overflow.
using Int = boost::multiprecision::cpp_int;

/// One (possibly negative) exponent per ring variable. The total order used
/// everywhere (term maps, serialization, reports) is std::vector's
/// lexicographic operator<.
using ExponentVector = std::vector<int>;

/// Sparse exact element of Z[v1^±1, ..., vk^±1].
///
/// Invariants: no stored coefficient is zero and exponent vectors are unique,
/// so two polynomials are equal iff their variable lists and term maps are
/// identical. Every operation returns a fresh value; instances are safe to
/// share across threads.
///
/// Variables are ordered named strings. Binary operations require both
/// operands to live in literally the same ring (same names, same order);
/// crossing rings is always an explicit step (extend_to, rename_variables,
/// substitute).
class LaurentPolynomial {
public:
    /// Zero in the empty ring Z (no variables).
    LaurentPolynomial() = default;

    /// Zero in the ring with the given variables. Names must be distinct and
    /// nonempty.
    explicit LaurentPolynomial(std::vector<std::string> variables);

    static LaurentPolynomial constant(std::vector<std::string> variables, Int value);
    static LaurentPolynomial monomial(std::vector<std::string> variables,
                                      ExponentVector exponents, Int coefficient);
    static LaurentPolynomial from_terms(
        std::vector<std::string> variables,
        std::initializer_list<std::pair<ExponentVector, Int>> terms);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<ExponentVector, Int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of the given monomial; zero if absent.
    Int coefficient(const ExponentVector& exponents) const;

    /// Adds coefficient * v^exponents, merging with an existing term and
    /// erasing the entry if the sum vanishes. Keeps canonical form.
    void add_term(const ExponentVector& exponents, const Int& coefficient);

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    std::vector<std::string> vars_;
    std::map<ExponentVector, Int> terms_;
};

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial operator-(const LaurentPolynomial& a);
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// a^k by binary exponentiation; power(a, 0) = 1.
LaurentPolynomial power(const LaurentPolynomial& a, unsigned k);

/// Negates every exponent vector; coefficients unchanged. A ring
/// homomorphism and an involution.
LaurentPolynomial mirror(const LaurentPolynomial& a);

/// Image of one variable under a substitution: sign * (target monomial).
/// sign must be +1 or -1; exponents are indexed by the target variable list.
struct VariableImage {
    int sign = +1;
    ExponentVector exponents;
};

/// Maps each monomial v^e to sign^e * (target monomial)^e and canonicalizes;
/// merging or cancellation of image terms is expected (collapse
/// substitutions rely on it). Every variable of `a` must have an image.
LaurentPolynomial substitute(const LaurentPolynomial& a,
                             std::vector<std::string> target_variables,
                             const std::map<std::string, VariableImage>& images);

/// Reinterprets `a` in a larger ring: every variable of `a` must appear (by
/// name) in `variables`; new variables get exponent zero.
LaurentPolynomial extend_to(const LaurentPolynomial& a,
                            std::vector<std::string> variables);

/// Positional relabeling of the variable list; exponents are untouched.
LaurentPolynomial rename_variables(const LaurentPolynomial& a,
                                   std::vector<std::string> variables);

/// Human-readable rendering in ascending term order, e.g.
/// "1 + x*t^2 + x^2*t^4" or "xi^-2*tau^-4 - 2".
std::string to_string(const LaurentPolynomial& a);
std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& a);

}  // namespace swlink
