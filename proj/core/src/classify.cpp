#include "swlink/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace swlink {

BasicClassReport basic_classes(const LaurentPolynomial& poly) {
    BasicClassReport report;
    for (const auto& [exp, coeff] : poly.terms()) {
        int divisibility = 0;
        for (int e : exp) divisibility = std::gcd(divisibility, std::abs(e));
        report.classes.push_back({exp, coeff, divisibility});
        Int magnitude = coeff < 0 ? Int(-coeff) : coeff;
        if (magnitude == 1) report.divisibility_multiset.push_back(divisibility);
        report.coefficient_multiset.push_back(std::move(magnitude));
    }
    report.count = report.classes.size();
    std::sort(report.coefficient_multiset.begin(), report.coefficient_multiset.end());
    std::sort(report.divisibility_multiset.begin(), report.divisibility_multiset.end());
    return report;
}

BasicClassReport basic_classes(const SWInvariant& sw) { return basic_classes(sw.poly); }

long long count_formula(int n, int p, int q) {
    if (n < 1) throw std::domain_error("count_formula requires n >= 1, got " + std::to_string(n));
    if (p < 2) throw std::domain_error("count_formula requires p >= 2, got " + std::to_string(p));
    if (q < 3) throw std::domain_error("count_formula requires q >= 3, got " + std::to_string(q));
    const long long N = static_cast<long long>(n);
    const long long P = static_cast<long long>(p);
    const long long Q = static_cast<long long>(q);
    return (2 * N + 2 * Q - 6) * P + (Q * N - 4 * N - 4 * Q + 12);
}

LatticeCount lambda_set(int n, int p, int q) {
    if (n < 1) throw std::domain_error("lambda_set requires n >= 1, got " + std::to_string(n));
    if (p < 2) throw std::domain_error("lambda_set requires p >= 2, got " + std::to_string(p));
    if (q < 3) throw std::domain_error("lambda_set requires q >= 3, got " + std::to_string(q));
    LatticeCount out;
    for (int i = 0; i <= 2 * p - 4; ++i)
        for (int j = 0; j <= q - 3; ++j)
            for (int k = 0; k <= n - 1; ++k) out.points.insert({j - k, i + j});
    out.cardinality = out.points.size();
    return out;
}

long long lambda_count_closed_form(int n, int p, int q) {
    if (n < 1) throw std::domain_error("lambda_count_closed_form requires n >= 1");
    if (p < 2) throw std::domain_error("lambda_count_closed_form requires p >= 2");
    if (q < 3) throw std::domain_error("lambda_count_closed_form requires q >= 3");
    const long long N = static_cast<long long>(n);
    const long long P = static_cast<long long>(p);
    const long long Q = static_cast<long long>(q);
    return (2 * P - 3) * (Q - 2) * N - (2 * P - 4) * (Q - 3) * (N - 1);
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::distinguished: return "distinguished";
        case Verdict::not_separated: return "not separated by these invariants";
    }
    throw std::logic_error("unknown verdict");
}

DistinguishResult distinguish_q2(int n, int p1, int p2) {
    if (n < 1)
        throw std::domain_error("distinguish_q2: n >= 1 violated (n = " + std::to_string(n) + ")");
    if (p2 < 2)
        throw std::domain_error("distinguish_q2: p2 >= 2 violated (p2 = " + std::to_string(p2) + ")");
    if (p1 <= p2)
        throw std::domain_error("distinguish_q2: p1 > p2 violated (p1 = " + std::to_string(p1) +
                                ", p2 = " + std::to_string(p2) + ")");
    int r;
    if (n % 2 == 1) {
        if (2 * p2 <= n - 1)
            throw std::domain_error("distinguish_q2: p2 > (n-1)/2 violated (p2 = " +
                                    std::to_string(p2) + ", n = " + std::to_string(n) + ")");
        r = (2 * p1 + 1 - n) / 2;
    } else {
        if (n / 2 > 2 * p1)
            throw std::domain_error("distinguish_q2: n/2 <= 2*p1 violated (n = " +
                                    std::to_string(n) + ", p1 = " + std::to_string(p1) + ")");
        r = 2 * p1 - n / 2;
    }
    if (r < 1)
        throw std::domain_error("distinguish_q2: chosen r >= 1 violated (r = " +
                                std::to_string(r) + ")");

    DistinguishResult result;
    result.n = n;
    result.p1 = p1;
    result.p2 = p2;
    result.r = r;
    result.first = basic_classes(sw_link_surgery({p1, 2, n, r}));
    result.second = basic_classes(sw_link_surgery({p2, 2, n, r}));
    result.counts_equal = result.first.count == result.second.count;
    result.coefficient_multisets_equal =
        result.first.coefficient_multiset == result.second.coefficient_multiset;
    result.divisibility_multisets_equal =
        result.first.divisibility_multiset == result.second.divisibility_multiset;
    result.verdict = result.divisibility_multisets_equal ? Verdict::not_separated
                                                         : Verdict::distinguished;
    return result;
}

}  // namespace swlink
