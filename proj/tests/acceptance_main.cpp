// Acceptance suite: every criterion below is exact (polynomial or integer
// equality, no tolerances) and prints one PASS/FAIL line. Exit code is 0
// only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "swlink/alexander.hpp"
#include "swlink/classify.hpp"
#include "swlink/serialize.hpp"
#include "swlink/sw.hpp"
#include "swlink/verify.hpp"

namespace {

using namespace swlink;

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> body;
};

bool run_cli_twice_identical(const std::string& args, std::string& detail) {
    auto capture = [](const std::string& cmd, int& code) {
        std::string output;
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) {
            code = -1;
            return output;
        }
        char buffer[4096];
        std::size_t n;
        while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
        const int status = pclose(pipe);
        code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        return output;
    };
    const std::string command = std::string(SWLINK_CLI_PATH) + " " + args + " 2>/dev/null";
    int code1 = 0, code2 = 0;
    const std::string first = capture(command, code1);
    const std::string second = capture(command, code2);
    if (code1 != 0 || code2 != 0) {
        detail = "command '" + args + "' exited " + std::to_string(code1) + "/" +
                 std::to_string(code2);
        return false;
    }
    if (first != second) {
        detail = "command '" + args + "' produced differing bytes across runs";
        return false;
    }
    return true;
}

bool check_roundtrip(const LaurentPolynomial& p, std::string& detail) {
    const std::string text = to_canonical_json(p);
    const auto parsed = polynomial_from_json(text);
    if (parsed != p) {
        detail = "parse(emit(p)) != p for " + text;
        return false;
    }
    if (to_canonical_json(parsed) != text) {
        detail = "re-emission changed bytes for " + text;
        return false;
    }
    return true;
}

std::vector<Criterion> make_criteria() {
    std::vector<Criterion> criteria;

    criteria.push_back({"1. determinant and closed-form Alexander polynomials agree exactly "
                        "(p 1..8, q 2..8, under 10 s)",
                        [](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        for (int p = 1; p <= 8; ++p) {
            for (int q = 2; q <= 8; ++q) {
                if (alexander_via_determinant(p, q) != alexander_closed_form(p, q)) {
                    detail = "mismatch at p=" + std::to_string(p) + " q=" + std::to_string(q) +
                             ": det=" + to_canonical_json(alexander_via_determinant(p, q)) +
                             " closed=" + to_canonical_json(alexander_closed_form(p, q));
                    return false;
                }
            }
        }
        const auto elapsed = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start).count();
        if (elapsed >= 10.0) {
            detail = "took " + std::to_string(elapsed) + " s (budget 10 s)";
            return false;
        }
        return true;
    }});

    criteria.push_back({"2. enumerated basic-class count equals (2n+2q-6)p + (qn-4n-4q+12) "
                        "(n 1..4, p 2..8, q 3..8, under 30 s)",
                        [](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        for (int n = 1; n <= 4; ++n) {
            for (int p = 2; p <= 8; ++p) {
                for (int q = 3; q <= 8; ++q) {
                    const auto enumerated = static_cast<long long>(
                        basic_classes(sw_link_surgery({p, q, n, 1})).count);
                    if (enumerated != count_formula(n, p, q)) {
                        detail = "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                                 " q=" + std::to_string(q) +
                                 ": enumerated=" + std::to_string(enumerated) +
                                 " formula=" + std::to_string(count_formula(n, p, q));
                        return false;
                    }
                }
            }
        }
        const auto elapsed = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start).count();
        if (elapsed >= 30.0) {
            detail = "took " + std::to_string(elapsed) + " s (budget 30 s)";
            return false;
        }
        return true;
    }});

    criteria.push_back({"3. count decomposes as lattice cardinality + 2n, with the lattice "
                        "enumeration matching its closed form (same grid)",
                        [](std::string& detail) {
        for (int n = 1; n <= 4; ++n) {
            for (int p = 2; p <= 8; ++p) {
                for (int q = 3; q <= 8; ++q) {
                    const auto lattice = lambda_set(n, p, q);
                    const auto closed = lambda_count_closed_form(n, p, q);
                    const auto count = static_cast<long long>(
                        basic_classes(sw_link_surgery({p, q, n, 1})).count);
                    if (static_cast<long long>(lattice.cardinality) != closed ||
                        count != closed + 2 * n) {
                        detail = "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                                 " q=" + std::to_string(q) + ": lattice=" +
                                 std::to_string(lattice.cardinality) + " closed=" +
                                 std::to_string(closed) + " count=" + std::to_string(count);
                        return false;
                    }
                }
            }
        }
        return true;
    }});

    criteria.push_back({"4. p=1 manifolds have q*n classes (q 2..8) and q=2 manifolds have 2n "
                        "classes independent of p (p 1..10), n 1..4",
                        [](std::string& detail) {
        for (int n = 1; n <= 4; ++n) {
            for (int q = 2; q <= 8; ++q) {
                const auto count = basic_classes(sw_link_surgery({1, q, n, 1})).count;
                if (count != static_cast<std::size_t>(q * n)) {
                    detail = "p=1 n=" + std::to_string(n) + " q=" + std::to_string(q) +
                             ": count=" + std::to_string(count);
                    return false;
                }
            }
            for (int p = 1; p <= 10; ++p) {
                const auto count = basic_classes(sw_link_surgery({p, 2, n, 1})).count;
                if (count != static_cast<std::size_t>(2 * n)) {
                    detail = "q=2 n=" + std::to_string(n) + " p=" + std::to_string(p) +
                             ": count=" + std::to_string(count);
                    return false;
                }
            }
        }
        return true;
    }});

    criteria.push_back({"5. the single SW code path reproduces all three hard-coded closed-form "
                        "branches (p 1..6, q 2..6, n,r 1..3)",
                        [](std::string& detail) {
        for (int n = 1; n <= 3; ++n) {
            for (int r = 1; r <= 3; ++r) {
                for (int p = 1; p <= 6; ++p) {
                    for (int q = 2; q <= 6; ++q) {
                        const auto sw = sw_link_surgery({p, q, n, r}).poly;
                        const std::string cell = "n=" + std::to_string(n) + " r=" +
                                                 std::to_string(r) + " p=" + std::to_string(p) +
                                                 " q=" + std::to_string(q);
                        if (q == 2 && sw != reference::sw_branch_q2(n, r, p)) {
                            detail = "q=2 branch differs at " + cell;
                            return false;
                        }
                        if (p == 1 && sw != reference::sw_branch_p1(n, r, q)) {
                            detail = "p=1 branch differs at " + cell;
                            return false;
                        }
                        if (p >= 2 && q >= 3 && sw != reference::sw_branch_general(n, r, p, q)) {
                            detail = "general branch differs at " + cell;
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    }});

    criteria.push_back({"6. the general fiber-sum formula applied to the elliptic background "
                        "matches the link-surgery formula (n 2..4, r 1..3, p 1..5, q 2..5)",
                        [](std::string& detail) {
        for (int n = 2; n <= 4; ++n) {
            for (int r = 1; r <= 3; ++r) {
                for (int p = 1; p <= 5; ++p) {
                    for (int q = 2; q <= 5; ++q) {
                        const auto via_sum =
                            sw_fiber_sum_general(elliptic_surface_sw(n, "f"), "f", r, p, q).poly;
                        const auto direct =
                            rename_variables(sw_link_surgery({p, q, n, r}).poly, {"f", "tau"});
                        if (via_sum != direct) {
                            detail = "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                     " p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                     ": lhs=" + to_canonical_json(via_sum) +
                                     " rhs=" + to_canonical_json(direct);
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    }});

    criteria.push_back({"7. mirror(SW) = (-1)^{n+r} SW on the whole branch grid",
                        [](std::string& detail) {
        for (int n = 1; n <= 3; ++n) {
            for (int r = 1; r <= 3; ++r) {
                for (int p = 1; p <= 6; ++p) {
                    for (int q = 2; q <= 6; ++q) {
                        const auto sw = sw_link_surgery({p, q, n, r}).poly;
                        const auto expected = ((n + r) % 2 == 0) ? sw : -sw;
                        if (mirror(sw) != expected) {
                            detail = "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                     " p=" + std::to_string(p) + " q=" + std::to_string(q);
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    }});

    criteria.push_back({"8. the determinant recurrence holds for p 2..6, q 4..7, and for q=3 by "
                        "direct determinant comparison",
                        [](std::string& detail) {
        const auto xt = LaurentPolynomial::monomial(alexander_vars(), {1, 1}, 1);
        for (int p = 2; p <= 6; ++p) {
            for (int q = 3; q <= 7; ++q) {
                const auto next = alexander_via_determinant(p, q + 1);
                const auto mid = alexander_via_determinant(p, q);
                const auto prev = alexander_via_determinant(p, q - 1);
                if (next != mid + xt * (mid - prev)) {
                    detail = "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                             (q == 3 ? " (direct check)" : "");
                    return false;
                }
            }
        }
        return true;
    }});

    criteria.push_back({"9. distinguish(n=1, p1=3, p2=2) picks r=3 and separates the "
                        "divisibility multisets {1,1,5,5} vs {1,1,3,3}",
                        [](std::string& detail) {
        const auto result = distinguish_q2(1, 3, 2);
        if (result.r != 3) {
            detail = "chose r=" + std::to_string(result.r);
            return false;
        }
        if (result.first.divisibility_multiset != std::vector<int>{1, 1, 5, 5} ||
            result.second.divisibility_multiset != std::vector<int>{1, 1, 3, 3}) {
            detail = "unexpected multisets";
            return false;
        }
        if (result.verdict != Verdict::distinguished) {
            detail = "verdict was '" + to_string(result.verdict) + "'";
            return false;
        }
        return true;
    }});

    criteria.push_back({"10. collapsed term counts strictly increase in p (q in {3,4,5}, "
                        "p 2..10, sw_x = 1)",
                        [](std::string& detail) {
        const auto one = LaurentPolynomial::constant({"f"}, 1);
        for (int q = 3; q <= 5; ++q) {
            std::size_t previous = 0;
            for (int p = 2; p <= 10; ++p) {
                const auto [collapsed, count] =
                    collapse_count(sw_fiber_sum_general(one, "f", 1, p, q));
                if (p > 2 && count <= previous) {
                    detail = "q=" + std::to_string(q) + " p=" + std::to_string(p) + ": " +
                             std::to_string(previous) + " -> " + std::to_string(count);
                    return false;
                }
                previous = count;
            }
        }
        return true;
    }});

    criteria.push_back({"11. serialization round-trips on every suite output and repeated CLI "
                        "runs are byte-identical",
                        [](std::string& detail) {
        for (int p = 1; p <= 6; ++p) {
            for (int q = 2; q <= 6; ++q) {
                if (!check_roundtrip(alexander_closed_form(p, q), detail)) return false;
                if (!check_roundtrip(symmetrize(p, q, alexander_closed_form(p, q)), detail))
                    return false;
                for (int n = 1; n <= 2; ++n)
                    for (int r = 1; r <= 2; ++r)
                        if (!check_roundtrip(sw_link_surgery({p, q, n, r}).poly, detail))
                            return false;
            }
        }
        if (!run_cli_twice_identical("sw --n 2 --r 2 --p 3 --q 3 --format json", detail))
            return false;
        if (!run_cli_twice_identical("alexander --p 3 --q 4 --method both --format json", detail))
            return false;
        if (!run_cli_twice_identical("verify --suite alexander --p 1..3 --q 2..4", detail))
            return false;
        if (!run_cli_twice_identical("basic-classes --n 2 --r 2 --p 3 --q 3 --format json",
                                     detail))
            return false;
        return true;
    }});

    return criteria;
}

}  // namespace

int main() {
    const auto criteria = make_criteria();
    bool all_pass = true;
    for (const auto& criterion : criteria) {
        std::string detail;
        bool pass = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            pass = criterion.body(detail);
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        const auto elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", elapsed);
        std::cout << (pass ? "PASS" : "FAIL") << "  " << criterion.name << "  [" << timing
                  << "]\n";
        if (!pass) {
            std::cout << "      " << detail << "\n";
            all_pass = false;
        }
    }
    std::cout << (all_pass ? "acceptance: all criteria passed" : "acceptance: FAILURES above")
              << "\n";
    return all_pass ? 0 : 1;
}
