#pragma once

// Verification suites: each runs a family of identities over a range and
// reports pass/fail with the first counterexample found.

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "arith.hpp"
#include "expected.hpp"
#include "foulkes.hpp"
#include "maj.hpp"
#include "ramat.hpp"
#include "schur.hpp"

namespace ramsum {

struct CheckResult {
    std::string name;
    bool passed = true;
    /// Counterexample on failure, a short summary otherwise.
    std::string detail;
    /// Informational checks (open conjectures) never fail a report.
    bool blocking = true;
};

struct VerifyReport {
    std::string suite;
    int max_n = 0;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const {
        for (const auto& c : checks)
            if (c.blocking && !c.passed) return false;
        return true;
    }
};

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"arith", "matrix", "foulkes", "paper-values"};
    return names;
}

namespace detail {

/// Runs body(); a returned string is a counterexample.
inline CheckResult run_check(std::string name, const std::function<std::optional<std::string>()>& body,
                             std::string ok_detail = "ok", bool blocking = true) {
    CheckResult r;
    r.name = std::move(name);
    r.blocking = blocking;
    try {
        if (auto bad = body()) {
            r.passed = false;
            r.detail = *bad;
        } else {
            r.detail = std::move(ok_detail);
        }
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

inline std::string fmt_pair(const char* a, Int x, const char* b, Int y) {
    return std::string(a) + "=" + std::to_string(x) + " " + b + "=" + std::to_string(y);
}

/// round(sum_{(m,d)=1} cos(2 pi m r / d)) and the rounding residual.
inline std::pair<Int, long double> ramanujan_sum_by_roots(Int d, Int r) {
    long double s = 0;
    const long double two_pi = 2.0L * std::acos(-1.0L);
    for (Int m = 1; m <= d; ++m)
        if (std::gcd(m, d) == 1) s += std::cos(two_pi * static_cast<long double>((m * r) % d) / static_cast<long double>(d));
    const long double rounded = std::round(s);
    return {static_cast<Int>(rounded), std::fabs(s - rounded)};
}

inline bool is_square_free_or_4_odd_square_free(Int n) {
    if (factorize(n).is_square_free()) return true;
    return n % 4 == 0 && (n / 4) % 2 == 1 && factorize(n / 4).is_square_free();
}

}  // namespace detail

inline VerifyReport verify_arith(int max_n = 0) {
    const Int bound = max_n > 0 ? max_n : 500;
    const Int oracle_bound = std::min<Int>(bound, 60);
    VerifyReport rep{"arith", static_cast<int>(bound), {}};

    rep.checks.push_back(detail::run_check("factorization product and ordering", [&]() -> std::optional<std::string> {
        for (Int n = 1; n <= bound; ++n) {
            const auto f = factorize(n);
            Int prod = 1;
            Int last = 1;
            for (const auto& [p, e] : f.factors) {
                if (p <= last || e < 1 || factorize(p).factors.size() != 1 || factorize(p).factors[0].exponent != 1)
                    return "n=" + std::to_string(n);
                last = p;
                for (int i = 0; i < e; ++i) prod *= p;
            }
            if (prod != n) return "n=" + std::to_string(n);
        }
        return std::nullopt;
    }));

    rep.checks.push_back(detail::run_check("c_d(r) = mu(d) if (d,r)=1, phi(d) if d|r", [&]() -> std::optional<std::string> {
        for (Int d = 1; d <= bound; ++d)
            for (Int r = 1; r <= bound; ++r) {
                const Int c = ramanujan_sum(d, r);
                if (std::gcd(d, r) == 1 && c != moebius(d)) return detail::fmt_pair("d", d, "r", r);
                if (r % d == 0 && c != euler_phi(d)) return detail::fmt_pair("d", d, "r", r);
            }
        return std::nullopt;
    }));

    rep.checks.push_back(detail::run_check("von Sterneck value equals root-of-unity sum", [&]() -> std::optional<std::string> {
        for (Int d = 1; d <= oracle_bound; ++d)
            for (Int r = 1; r <= oracle_bound; ++r) {
                const auto [v, residual] = detail::ramanujan_sum_by_roots(d, r);
                if (residual >= 1e-6L || v != ramanujan_sum(d, r)) return detail::fmt_pair("d", d, "r", r);
            }
        return std::nullopt;
    }));

    rep.checks.push_back(detail::run_check("c_{mn}(xy) = c_m(x) c_n(y) for (mx, ny) = 1", [&]() -> std::optional<std::string> {
        std::mt19937_64 rng(0x5eed);
        const Int top = std::min<Int>(bound, 200);
        std::uniform_int_distribution<Int> pick(1, top);
        int tested = 0;
        for (int attempt = 0; attempt < 200000 && tested < 5000; ++attempt) {
            const Int m = pick(rng), n = pick(rng), x = pick(rng), y = pick(rng);
            if (std::gcd(m * x, n * y) != 1) continue;
            ++tested;
            if (ramanujan_sum(m * n, x * y) != ramanujan_sum(m, x) * ramanujan_sum(n, y))
                return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " x=" + std::to_string(x) +
                       " y=" + std::to_string(y);
        }
        return std::nullopt;
    }));

    rep.checks.push_back(detail::run_check("prime-power formula agrees with von Sterneck", [&]() -> std::optional<std::string> {
        for (Int q = 2; q <= bound; ++q) {
            if (factorize(q).factors.size() != 1 || factorize(q).factors[0].exponent != 1) continue;
            Int qa = 1;
            for (int a = 0; qa <= bound; ++a, qa *= q)
                for (Int r = 1; r <= bound; ++r)
                    if (ramanujan_sum_prime_power(q, a, r) != ramanujan_sum(qa, r))
                        return "q=" + std::to_string(q) + " a=" + std::to_string(a) + " r=" + std::to_string(r);
        }
        return std::nullopt;
    }));

    rep.checks.push_back(detail::run_check("|c_d(r)| <= phi(d), equality classified", [&]() -> std::optional<std::string> {
        for (Int d = 1; d <= bound; ++d)
            for (Int r = 1; r <= bound; ++r) {
                const Int c = std::abs(ramanujan_sum(d, r));
                const Int phi = euler_phi(d);
                if (c > phi || (c == phi) != diagonal_bound_attained(d, r)) return detail::fmt_pair("d", d, "r", r);
            }
        return std::nullopt;
    }));

    rep.checks.push_back(detail::run_check("diagonal sums in {0,+-1} iff n square-free or 4*odd square-free",
                                           [&]() -> std::optional<std::string> {
                                               for (Int n = 1; n <= bound; ++n) {
                                                   const auto c = classify_diagonal(n);
                                                   if (c.all_in_0_pm1 != detail::is_square_free_or_4_odd_square_free(n))
                                                       return "n=" + std::to_string(n);
                                                   if (c.witness && std::abs(ramanujan_sum(c.witness->first, n / c.witness->first)) <= 1)
                                                       return "bad witness at n=" + std::to_string(n);
                                               }
                                               return std::nullopt;
                                           }));
    return rep;
}

inline VerifyReport verify_matrix(int max_n = 0) {
    const Int matrix_bound = max_n > 0 ? max_n : 200;
    const Int row_bound = max_n > 0 ? max_n : 5000;
    const Int trace_bound = max_n > 0 ? max_n : 10000;
    VerifyReport rep{"matrix", static_cast<int>(matrix_bound), {}};

    rep.checks.push_back(detail::run_check("M_n^2 = n I", [&]() -> std::optional<std::string> {
        for (Int n = 1; n <= matrix_bound; ++n)
            if (!build_matrix(n).squares_to_n_identity()) return "n=" + std::to_string(n);
        return std::nullopt;
    }, "n <= " + std::to_string(matrix_bound)));

    rep.checks.push_back(detail::run_check("sum of entries of M_n = n", [&]() -> std::optional<std::string> {
        for (Int n = 1; n <= matrix_bound; ++n)
            if (build_matrix(n).entry_sum() != n) return "n=" + std::to_string(n);
        return std::nullopt;
    }, "n <= " + std::to_string(matrix_bound)));

    rep.checks.push_back(detail::run_check("key Moebius identity", [&]() -> std::optional<std::string> {
        for (Int n = 1; n <= matrix_bound; ++n)
            for (Int d : divisors(n))
                if (!key_moebius_identity_check(n, d).holds) return detail::fmt_pair("n", n, "d", d);
        return std::nullopt;
    }, "n <= " + std::to_string(matrix_bound)));

    rep.checks.push_back(detail::run_check("trace formula", [&]() -> std::optional<std::string> {
        for (Int n = 1; n <= trace_bound; ++n)
            if (trace(n) != trace_direct(n)) return "n=" + std::to_string(n);
        for (Int n = 1; n <= matrix_bound; ++n)
            if (build_matrix(n).diagonal_sum() != trace(n)) return "matrix diagonal, n=" + std::to_string(n);
        return std::nullopt;
    }, "n <= " + std::to_string(trace_bound)));

    rep.checks.push_back(detail::run_check("signed trace formula (even n)", [&]() -> std::optional<std::string> {
        for (Int n = 2; n <= trace_bound; n += 2)
            if (signed_trace(n) != signed_trace_direct(n)) return "n=" + std::to_string(n);
        return std::nullopt;
    }, "even n <= " + std::to_string(trace_bound)));

    rep.checks.push_back(detail::run_check("row sums: product formula = direct sum", [&]() -> std::optional<std::string> {
        for (Int n = 1; n <= row_bound; ++n)
            for (Int d : divisors(n))
                if (row_sum_fgk(n, d) != row_sum_direct(n, d)) return detail::fmt_pair("n", n, "d", d);
        return std::nullopt;
    }, "n <= " + std::to_string(row_bound)));

    rep.checks.push_back(detail::run_check("row sums nonnegative, zero iff n even and n/d odd, total n",
                                           [&]() -> std::optional<std::string> {
                                               for (Int n = 1; n <= row_bound; ++n) {
                                                   Int total = 0;
                                                   for (Int d : divisors(n)) {
                                                       const Int a = row_sum_fgk(n, d);
                                                       const bool zero = n % 2 == 0 && (n / d) % 2 == 1;
                                                       if (a < 0 || (a == 0) != zero) return detail::fmt_pair("n", n, "d", d);
                                                       total += a;
                                                   }
                                                   if (total != n) return "total at n=" + std::to_string(n);
                                               }
                                               return std::nullopt;
                                           },
                                           "n <= " + std::to_string(row_bound)));
    return rep;
}

inline VerifyReport verify_foulkes(int max_n, ExpansionCache& cache) {
    const Int arith_bound = max_n > 0 ? max_n : 500;
    const Int structural_bound = max_n > 0 ? max_n : 1000;
    auto capped = [&](int natural) { return std::min({natural, max_n > 0 ? max_n : natural, cache.cap()}); };
    VerifyReport rep{"foulkes", static_cast<int>(arith_bound), {}};

    rep.checks.push_back(detail::run_check("Y_0[n,k] = a_k(n), sum of l-coefficients of R_{n,0} = n",
                                           [&]() -> std::optional<std::string> {
                                               for (Int n = 1; n <= arith_bound; ++n) {
                                                   for (Int k : divisors(n))
                                                       if (y_coefficient(n, k, 0) != row_sum_fgk(n, k)) return detail::fmt_pair("n", n, "k", k);
                                                   if (rnu_ell_expansion(n, 0).total() != n) return "total at n=" + std::to_string(n);
                                               }
                                               return std::nullopt;
                                           }));

    rep.checks.push_back(detail::run_check("Y_u[n,k] >= 0 for u in {0,1}", [&]() -> std::optional<std::string> {
        for (Int n = 1; n <= arith_bound; ++n)
            for (Int k : divisors(n))
                for (unsigned u : {0u, 1u})
                    if (y_coefficient(n, k, u) < 0) return detail::fmt_pair("n", n, "k", k) + " u=" + std::to_string(u);
        return std::nullopt;
    }));

    rep.checks.push_back(detail::run_check("structural Y equals direct Y", [&]() -> std::optional<std::string> {
        for (Int n = 1; n <= structural_bound; ++n)
            for (Int k : divisors(n))
                for (unsigned u = 0; u <= 4; ++u) {
                    if (u > 1 && n > arith_bound) continue;
                    if (y_coefficient_structural(n, k, u).value != y_coefficient(n, k, u))
                        return detail::fmt_pair("n", n, "k", k) + " u=" + std::to_string(u);
                }
        return std::nullopt;
    }));

    rep.checks.push_back(detail::run_check("l-basis expansion pushed to Schur basis reproduces R_{n,u}",
                                           [&]() -> std::optional<std::string> {
                                               for (int n = 1; n <= capped(20); ++n)
                                                   for (unsigned u = 0; u <= 4; ++u)
                                                       if (!(ell_to_schur(rnu_ell_expansion(n, u), cache) == rnu_schur_expansion(n, u, cache)))
                                                           return "n=" + std::to_string(n) + " u=" + std::to_string(u);
                                               return std::nullopt;
                                           }));

    rep.checks.push_back(detail::run_check("R_n self-conjugate for odd n", [&]() -> std::optional<std::string> {
        for (int n = 1; n <= capped(15); n += 2) {
            const auto e = rnu_schur_expansion(n, 1, cache);
            for (const auto& [p, c] : e.terms())
                if (e.coefficient(p.conjugate()) != c) return "n=" + std::to_string(n) + " at " + p.str();
        }
        return std::nullopt;
    }));

    rep.checks.push_back(detail::run_check("R_{n,0} contains every irreducible except the sign when n = 2 mod 4",
                                           [&]() -> std::optional<std::string> {
                                               for (int n = 1; n <= capped(14); ++n) {
                                                   const auto e = rnu_schur_expansion(n, 0, cache);
                                                   for (std::size_t i = 0; i < e.index().size(); ++i) {
                                                       const bool sign = e.index()[i] == Partition::rectangle(1, n);
                                                       const bool expect_zero = sign && n % 4 == 2;
                                                       if ((e.dense()[i] > 0) == expect_zero)
                                                           return "n=" + std::to_string(n) + " at " + e.index()[i].str();
                                                   }
                                               }
                                               return std::nullopt;
                                           }));

    rep.checks.push_back(detail::run_check("trivial, sign and hook multiplicities match the expansion",
                                           [&]() -> std::optional<std::string> {
                                               for (int n = 2; n <= capped(20); ++n)
                                                   for (unsigned u = 0; u <= 6; ++u) {
                                                       const auto e = rnu_schur_expansion(n, u, cache);
                                                       const auto m = multiplicity_report(n, u);
                                                       std::vector<int> hook2(static_cast<std::size_t>(n - 1), 1);
                                                       hook2[0] = 2;
                                                       const bool ok = e.coefficient(Partition{n}) == m.trivial &&
                                                                       e.coefficient(Partition::rectangle(1, n)) == m.sign &&
                                                                       (n < 3 || e.coefficient(Partition{n - 1, 1}) == m.hook_n_minus_1_1) &&
                                                                       (n < 3 || e.coefficient(Partition(hook2)) == m.hook_2_1s);
                                                       if (!ok) return "n=" + std::to_string(n) + " u=" + std::to_string(u);
                                                   }
                                               return std::nullopt;
                                           }));

    rep.checks.push_back(detail::run_check("character columns orthogonal on rectangular classes",
                                           [&]() -> std::optional<std::string> {
                                               for (int n = 1; n <= capped(12); ++n) {
                                                   const auto divs = divisors(n);
                                                   for (Int d : divs)
                                                       for (Int e : divs) {
                                                           const auto& a = power_sum_rectangle_expansion(n, static_cast<int>(d), cache)->dense();
                                                           const auto& b = power_sum_rectangle_expansion(n, static_cast<int>(e), cache)->dense();
                                                           BigInt s = 0;
                                                           for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
                                                           const BigInt expect = d == e ? pow(d, static_cast<unsigned>(n / d)) * factorial(static_cast<unsigned>(n / d)) : BigInt(0);
                                                           if (s != expect) return detail::fmt_pair("n", n, "d", d) + " e=" + std::to_string(e);
                                                       }
                                               }
                                               return std::nullopt;
                                           }));

    rep.checks.push_back(detail::run_check("Foulkes multiplicities = maj-residue counts", [&]() -> std::optional<std::string> {
        for (int n = 1; n <= capped(12); ++n)
            for (int r = 1; r <= n; ++r) {
                const auto ell = foulkes_schur_multiplicities(n, r, cache);
                for (std::size_t i = 0; i < ell.index().size(); ++i)
                    if (maj_distribution(ell.index()[i]).count(r) != ell.dense()[i])
                        return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " at " + ell.index()[i].str();
            }
        return std::nullopt;
    }));

    rep.checks.push_back(detail::run_check("Foulkes multiplicities vanish exactly on the predicted set",
                                           [&]() -> std::optional<std::string> {
                                               for (int n = 2; n <= capped(12); ++n) {
                                                   const auto v = swanson_vanishing_check(n, cache);
                                                   if (!v.empty())
                                                       return "n=" + std::to_string(n) + " r=" + std::to_string(v[0].r) + " at " + v[0].lambda.str();
                                               }
                                               return std::nullopt;
                                           }));

    rep.checks.push_back(detail::run_check("n_o sqrt(n_e) divides R_n with Schur-positive quotient",
                                           [&]() -> std::optional<std::string> {
                                               for (int n = 1; n <= capped(30); ++n)
                                                   if (!scalar_divisibility_check(n, cache).divides) return "n=" + std::to_string(n);
                                               return std::nullopt;
                                           }));
    return rep;
}

struct TableCell {
    int n = 0;
    unsigned u = 0;
    PositivityVerdict verdict;
    std::optional<bool> expected;
    [[nodiscard]] bool matches() const { return !expected || *expected == verdict.schur_positive; }
};

/// Positivity grid over the given columns and u = 0..u_max.
inline std::vector<TableCell> positivity_table(const std::vector<int>& ns, unsigned u_max, ExpansionCache& cache,
                                               const ExpectedValues* expected = nullptr, unsigned threads = 1);

inline VerifyReport verify_paper_values(ExpansionCache& cache) {
    VerifyReport rep{"paper-values", 0, {}};
    const auto& ev = expected_values();

    for (const auto& [key, terms] : ev.schur) {
        const auto [n, u] = key;
        rep.checks.push_back(detail::run_check(
            "Schur expansion of R_{" + std::to_string(n) + "," + std::to_string(u) + "}", [&]() -> std::optional<std::string> {
                const auto got = rnu_schur_expansion(n, u, cache).to_map();
                if (got.size() != terms.size()) return "term count " + std::to_string(got.size());
                for (const auto& [p, c] : terms)
                    if (auto it = got.find(p); it == got.end() || it->second != c) return "coefficient of " + p.str();
                return std::nullopt;
            }));
    }

    for (const auto& [key, coeffs] : ev.ell) {
        const auto [n, u] = key;
        rep.checks.push_back(detail::run_check(
            "l-basis expansion of R_{" + std::to_string(n) + "," + std::to_string(u) + "}", [&]() -> std::optional<std::string> {
                const auto got = rnu_ell_expansion(n, u);
                for (const auto& [k, c] : got.coeffs) {
                    auto it = coeffs.find(k);
                    const BigInt want = it == coeffs.end() ? BigInt(0) : it->second;
                    if (c != want) return "coefficient of l^(" + std::to_string(k) + ") is " + to_string(c);
                }
                return std::nullopt;
            }));
    }

    rep.checks.push_back(detail::run_check("R_{9,3} = p_1^9 + 8 p_3^3 and R_{16,3} = p_1^16 + p_2^8 + 8 p_4^4",
                                           [&]() -> std::optional<std::string> {
                                               SchurExpansion r93(9, cache.cap());
                                               r93 += *cache.power(1, 9);
                                               r93.add_scaled(*cache.power(3, 3), 8);
                                               if (!(r93 == rnu_schur_expansion(9, 3, cache))) return "n=9";
                                               SchurExpansion r163(16, cache.cap());
                                               r163 += *cache.power(1, 16);
                                               r163 += *cache.power(2, 8);
                                               r163.add_scaled(*cache.power(4, 4), 8);
                                               if (!(r163 == rnu_schur_expansion(16, 3, cache))) return "n=16";
                                               return std::nullopt;
                                           }));

    {
        std::vector<int> ns = ev.table_columns();
        std::erase_if(ns, [&](int n) { return n > cache.cap(); });
        std::string mismatches;
        std::size_t cells = 0;
        for (const auto& cell : positivity_table(ns, 20, cache, &ev)) {
            ++cells;
            if (!cell.matches())
                mismatches += (mismatches.empty() ? "" : ", ") + std::string("n=") + std::to_string(cell.n) +
                              " u=" + std::to_string(cell.u);
        }
        CheckResult r{"positivity table, cell by cell", mismatches.empty(),
                      mismatches.empty() ? std::to_string(cells) + " cells match" : "mismatch at " + mismatches, true};
        rep.checks.push_back(std::move(r));
    }
    return rep;
}

/// R_{n,2} Schur positive for n <= bound. Open conjecture: informational only.
inline CheckResult conjecture_u2_sweep(int bound, ExpansionCache& cache) {
    return detail::run_check(
        "R_{n,2} Schur positive for n <= " + std::to_string(bound) + " (conjecture)",
        [&]() -> std::optional<std::string> {
            for (int n = 1; n <= std::min(bound, cache.cap()); ++n) {
                const auto v = check_positivity(n, 2, cache);
                if (!v.schur_positive) return "COUNTEREXAMPLE n=" + std::to_string(n) + " at " + v.witness->first.str();
            }
            return std::nullopt;
        },
        "no counterexample", false);
}

inline std::vector<TableCell> positivity_table(const std::vector<int>& ns, unsigned u_max, ExpansionCache& cache,
                                               const ExpectedValues* expected, unsigned threads) {
    std::vector<TableCell> cells(ns.size() * (u_max + 1));
    auto fill_column = [&](std::size_t col) {
        for (unsigned u = 0; u <= u_max; ++u) {
            TableCell& c = cells[col * (u_max + 1) + u];
            c.n = ns[col];
            c.u = u;
            c.verdict = check_positivity(ns[col], u, cache);
            if (expected)
                if (auto it = expected->table.find({ns[col], u}); it != expected->table.end()) c.expected = it->second;
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ns.size())));
    if (threads == 1) {
        for (std::size_t col = 0; col < ns.size(); ++col) fill_column(col);
        return cells;
    }
    // Columns are handed out in order; each writes only its own slots.
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t col; (col = next++) < ns.size();) fill_column(col);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return cells;
}

inline std::vector<VerifyReport> run_verify(std::string_view suite, int max_n, ExpansionCache& cache) {
    std::vector<VerifyReport> out;
    const bool all = suite == "all";
    if (all || suite == "arith") out.push_back(verify_arith(max_n));
    if (all || suite == "matrix") out.push_back(verify_matrix(max_n));
    if (all || suite == "foulkes") out.push_back(verify_foulkes(max_n, cache));
    if (all || suite == "paper-values") {
        out.push_back(verify_paper_values(cache));
        out.back().checks.push_back(conjecture_u2_sweep(max_n > 0 ? max_n : 45, cache));
    }
    if (out.empty()) throw domain_error("unknown verification suite '" + std::string(suite) + "'");
    return out;
}

}  // namespace ramsum
