#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "swlink/laurent.hpp"
#include "swlink/sw.hpp"

namespace swlink {

/// One basic class: a support point of an SW polynomial with its coefficient
/// and the divisibility gcd(|a|, |b|) of its exponent coordinates
/// (gcd(0, b) = |b|, gcd(0, 0) = 0).
struct BasicClass {
    ExponentVector exponents;
    Int coefficient;
    int divisibility = 0;

    friend bool operator==(const BasicClass&, const BasicClass&) = default;
};

/// Support of an SW polynomial, sorted ascending-lexicographically, with the
/// derived statistics used to tell manifolds apart: the class count, the
/// multiset of |coefficient| values, and the multiset of divisibilities over
/// classes with coefficient ±1 only. Multisets are stored sorted ascending.
struct BasicClassReport {
    std::vector<BasicClass> classes;
    std::size_t count = 0;
    std::vector<Int> coefficient_multiset;
    std::vector<int> divisibility_multiset;

    friend bool operator==(const BasicClassReport&, const BasicClassReport&) = default;
};

BasicClassReport basic_classes(const SWInvariant& sw);
BasicClassReport basic_classes(const LaurentPolynomial& poly);

/// Closed-form basic-class count (2n+2q-6)p + (qn-4n-4q+12) of the r = 1
/// link-surgery manifold. Valid for n >= 1, p >= 2, q >= 3.
long long count_formula(int n, int p, int q);

/// The planar lattice set {(j-k, i+j)} over 0 <= i <= 2p-4, 0 <= j <= q-3,
/// 0 <= k <= n-1, enumerated brute-force.
struct LatticeCount {
    std::set<std::pair<int, int>> points;
    std::size_t cardinality = 0;
};

LatticeCount lambda_set(int n, int p, int q);

/// (2p-3)(q-2)n - (2p-4)(q-3)(n-1); must agree with lambda_set's cardinality.
long long lambda_count_closed_form(int n, int p, int q);

enum class Verdict { distinguished, not_separated };

/// "distinguished" or "not separated by these invariants". The second value
/// never claims the manifolds are diffeomorphic, only that the implemented
/// invariants agree.
std::string to_string(Verdict verdict);

struct DistinguishResult {
    int n = 1;
    int p1 = 2;
    int p2 = 2;
    int r = 1;  // chosen multiplicity: (2*p1+1-n)/2 for odd n, 2*p1 - n/2 for even n
    BasicClassReport first;
    BasicClassReport second;
    bool counts_equal = false;
    bool coefficient_multisets_equal = false;
    bool divisibility_multisets_equal = false;
    Verdict verdict = Verdict::not_separated;
};

/// Compares the q = 2 manifolds at p1 and p2 (p1 > p2 >= 2) through the
/// basic-class reports of a suitably chosen r. The verdict comes from the
/// ±1-class divisibility multisets; count and coefficient-multiset
/// comparisons are included for context. Odd n additionally requires
/// p2 > (n-1)/2. Precondition failures name the violated inequality.
DistinguishResult distinguish_q2(int n, int p1, int p2);

}  // namespace swlink
