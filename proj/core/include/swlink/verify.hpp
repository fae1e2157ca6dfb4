#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "swlink/laurent.hpp"

namespace swlink {

/// Inclusive integer interval.
struct IntRange {
    int lo = 0;
    int hi = 0;

    bool contains(int v) const { return lo <= v && v <= hi; }
    bool empty() const { return lo > hi; }
};

enum class Suite { alexander, count, symmetry, recurrence, consistency, all };

std::string to_string(Suite suite);

/// Parameter grid and suite selection for run_verify. Defaults keep
/// `verify --suite all` well under a minute.
struct SweepSpec {
    IntRange p{1, 8};
    IntRange q{2, 8};
    IntRange n{1, 4};
    IntRange r{1, 4};
    Suite suite = Suite::all;
};

/// One checked identity at one parameter cell.
struct CheckResult {
    std::string identity;
    std::string cell;
    bool pass = false;
    std::string detail;  // counterexample (canonical JSON) when failed, else empty
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::size_t passed = 0;
    std::size_t failed = 0;

    bool all_pass() const { return failed == 0; }
};

/// Runs the selected identity suites over the grid. Each identity clamps the
/// requested ranges to its own validity window; a spec whose ranges are
/// invalid (empty, or below the library-wide minimums p >= 1, q >= 2,
/// n >= 1, r >= 1, or q beyond the determinant bound) throws
/// std::invalid_argument, as does a selection that produces no cells at all.
VerifyReport run_verify(const SweepSpec& spec);

/// Direct constructions of the three closed-form SW branches, built
/// term-by-term and independent of the production pipeline
/// (symmetrize + prefactors). The consistency suite and the acceptance
/// tests compare sw_link_surgery against these.
namespace reference {

LaurentPolynomial sw_branch_general(int n, int r, int p, int q);  // p >= 2, q >= 3
LaurentPolynomial sw_branch_p1(int n, int r, int q);              // p = 1,  q >= 2
LaurentPolynomial sw_branch_q2(int n, int r, int p);              // q = 2,  p >= 1

}  // namespace reference

}  // namespace swlink
