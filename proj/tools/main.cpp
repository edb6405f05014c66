// exu: counts exceptional-unit solutions of diagonal congruences
// x_1^e + ... + x_k^e == c (mod n), by closed form (e = 1, 2) or by
// brute-force oracles, with verification campaigns and a benchmark mode.

#include <chrono>
#include <complex>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exu/arith.hpp"
#include "exu/bigint.hpp"
#include "exu/charsums.hpp"
#include "exu/closed_form.hpp"
#include "exu/errors.hpp"
#include "exu/exunits.hpp"
#include "exu/hensel.hpp"
#include "exu/oracle.hpp"
#include "exu/parallel.hpp"
#include "exu/query.hpp"
#include "exu/verify.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace exu;

namespace {

// Exit codes: 0 success, 1 verification mismatch or broken internal
// invariant, 2 usage error, 3 capacity error.
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

int64_t elapsed_us(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
}

ordered_json query_json(const CongruenceQuery& q) {
    return ordered_json{{"n", q.n}, {"k", q.k}, {"c", q.c}, {"e", q.e}};
}

ordered_json record_json(const CongruenceQuery& q, const std::string& method, const Count& count,
                         int64_t micros) {
    return ordered_json{
        {"query", query_json(q)}, {"method", method}, {"count", count.to_string()},
        {"elapsed", micros}};
}

Count run_method(const std::string& method, const CongruenceQuery& q) {
    if (method == "closed") return closed_form::count(q);
    if (method == "convolution") return oracle::count_convolution(q);
    if (method == "naive") return oracle::count_naive(q);
    throw precondition_error("unknown method '" + method + "' (closed, convolution, naive)");
}

std::string default_method(uint32_t e) { return e <= 2 ? "closed" : "convolution"; }

struct CountArgs {
    uint64_t n = 0;
    uint32_t k = 0;
    int64_t c = 0;
    uint32_t e = 0;
    std::string method;
};

int cmd_count(const CountArgs& args) {
    CongruenceQuery q(args.n, args.k, args.c, args.e);
    std::string method = args.method.empty() ? default_method(args.e) : args.method;
    auto start = std::chrono::steady_clock::now();
    Count count = run_method(method, q);
    std::cout << record_json(q, method, count, elapsed_us(start)).dump() << "\n";
    return 0;
}

struct SweepArgs {
    uint64_t n = 0;
    uint32_t k = 0;
    uint32_t e = 0;
    std::string format = "json";
};

constexpr uint64_t kSweepRowBound = 1'000'000;

int cmd_sweep(const SweepArgs& args) {
    if (args.n > kSweepRowBound) {
        throw capacity_error("sweep: n exceeds the row bound " + std::to_string(kSweepRowBound));
    }
    const std::string method = default_method(args.e);
    std::vector<Count> counts(args.n);
    std::vector<int64_t> micros(args.n, 0);

    if (method == "closed") {
        parallel_for(args.n, [&](size_t c) {
            auto start = std::chrono::steady_clock::now();
            counts[c] = closed_form::count(CongruenceQuery(args.n, args.k, (int64_t)c, args.e));
            micros[c] = elapsed_us(start);
        });
    } else {
        auto table = oracle::convolution_table(args.n, args.k, args.e);
        for (uint64_t c = 0; c < args.n; ++c) {
            auto start = std::chrono::steady_clock::now();
            counts[c] = std::move(table[c]);
            micros[c] = elapsed_us(start);
        }
    }

    Count total;
    for (const auto& v : counts) total += v;
    Count expected = pow_big(exunits::count_exunits(arith::factorize(args.n)), args.k);

    if (args.format == "csv") {
        std::cout << "c,count\n";
        for (uint64_t c = 0; c < args.n; ++c) {
            std::cout << c << "," << counts[c].to_string() << "\n";
        }
        std::cout << "# total=" << total.to_string() << " expected=" << expected.to_string()
                  << "\n";
    } else {
        ordered_json out = ordered_json::array();
        for (uint64_t c = 0; c < args.n; ++c) {
            out.push_back(record_json(CongruenceQuery(args.n, args.k, (int64_t)c, args.e), method,
                                      counts[c], micros[c]));
        }
        out.push_back(ordered_json{{"total", total.to_string()},
                                   {"expected", expected.to_string()}});
        std::cout << out.dump() << "\n";
    }
    return 0;
}

struct VerifyArgs {
    uint64_t max_n = 0;
    std::vector<uint32_t> ks;
    uint32_t e = 0;
};

int cmd_verify(const VerifyArgs& args) {
    auto result =
        verify::run_campaign(args.max_n, args.ks, args.e, verify::closed_form_table_fn(),
                             verify::convolution_table_fn(), std::thread::hardware_concurrency());
    for (const auto& m : result.mismatches) {
        std::cout << "MISMATCH n=" << m.n << " k=" << m.k << " c=" << m.c << " e=" << m.e
                  << " closed=" << m.closed << " oracle=" << m.oracle << "\n";
    }
    std::cout << "checked " << result.comparisons << " comparisons, " << result.mismatches.size()
              << " mismatches\n";
    return result.mismatches.empty() ? 0 : kExitMismatch;
}

// ---- lemma suites ---------------------------------------------------------

struct SuiteReport {
    std::string name;
    std::string coverage;
    bool pass = true;
    std::string detail;
};

SuiteReport suite_multiplicativity() {
    SuiteReport report;
    report.name = "multiplicativity";
    report.coverage = "200 random coprime pairs n1,n2 <= 50; k in {2,3}; e in {1,2,3}; all c";
    std::mt19937_64 rng(20240601);
    int tested = 0;
    while (tested < 200 && report.pass) {
        uint64_t n1 = rng() % 49 + 2;
        uint64_t n2 = rng() % 49 + 2;
        if (std::gcd(n1, n2) != 1) continue;
        ++tested;
        for (uint32_t k : {2u, 3u}) {
            for (uint32_t e : {1u, 2u, 3u}) {
                auto whole = oracle::convolution_table(n1 * n2, k, e);
                auto part1 = oracle::convolution_table(n1, k, e);
                auto part2 = oracle::convolution_table(n2, k, e);
                for (uint64_t c = 0; c < n1 * n2; ++c) {
                    if (whole[c] != part1[c % n1] * part2[c % n2]) {
                        report.pass = false;
                        report.detail = "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) +
                                        " k=" + std::to_string(k) + " e=" + std::to_string(e) +
                                        " c=" + std::to_string(c);
                        break;
                    }
                }
                if (!report.pass) break;
            }
            if (!report.pass) break;
        }
    }
    return report;
}

SuiteReport suite_prime_power_lifting() {
    SuiteReport report;
    report.name = "prime-power-lifting";
    report.coverage =
        "p in {3,5,7}; s in {1,2}; k in {2,3}; e in {1,2} and e=3 for p!=3; all c; "
        "plus solution-set reconstruction for p in {3,5}, s=2, k=2";
    for (uint64_t p : {3ULL, 5ULL, 7ULL}) {
        for (uint32_t e : {1u, 2u, 3u}) {
            if (e % p == 0) continue;
            for (uint32_t k : {2u, 3u}) {
                auto base = oracle::convolution_table(p, k, e);
                for (uint32_t s : {1u, 2u}) {
                    uint64_t ps = 1;
                    for (uint32_t i = 0; i < s; ++i) ps *= p;
                    auto lifted = oracle::convolution_table(ps, k, e);
                    BigInt scale = pow_u64(p, (uint64_t)(k - 1) * (s - 1));
                    for (uint64_t c = 0; c < ps; ++c) {
                        if (lifted[c] != scale * base[c % p]) {
                            report.pass = false;
                            report.detail = "scaling p=" + std::to_string(p) +
                                            " s=" + std::to_string(s) + " k=" + std::to_string(k) +
                                            " e=" + std::to_string(e) + " c=" + std::to_string(c);
                            return report;
                        }
                    }
                }
            }
        }
    }

    // reconstruct S(p^2) as a disjoint union of lifts
    for (uint64_t p : {3ULL, 5ULL}) {
        const uint32_t k = 2;
        for (uint32_t e : {1u, 2u}) {
            uint64_t ps = p * p;
            auto members_p = exunits::enumerate_exunits(p).members;
            auto members_ps = exunits::enumerate_exunits(ps).members;
            for (uint64_t c = 0; c < ps; ++c) {
                std::set<std::vector<uint64_t>> expected;
                for (uint64_t x : members_ps) {
                    for (uint64_t y : members_ps) {
                        if ((arith::power_mod((int64_t)x, e, ps) +
                             arith::power_mod((int64_t)y, e, ps)) %
                                ps ==
                            c) {
                            expected.insert({x, y});
                        }
                    }
                }
                std::set<std::vector<uint64_t>> produced;
                bool all_fresh = true;
                for (uint64_t x : members_p) {
                    for (uint64_t y : members_p) {
                        if ((arith::power_mod((int64_t)x, e, p) +
                             arith::power_mod((int64_t)y, e, p)) %
                                p !=
                            c % p) {
                            continue;
                        }
                        std::vector<uint64_t> sol{x, y};
                        for (uint64_t b = 0; b < ps; b += p) {
                            std::vector<uint64_t> offsets{b};
                            auto lifted = hensel::lift_solution(
                                sol, CongruenceQuery(p, k, (int64_t)(c % p), e), 2, offsets,
                                (int64_t)c);
                            all_fresh = produced.insert(lifted).second && all_fresh;
                        }
                    }
                }
                if (!all_fresh || produced != expected) {
                    report.pass = false;
                    report.detail = "reconstruction p=" + std::to_string(p) +
                                    " e=" + std::to_string(e) + " c=" + std::to_string(c);
                    return report;
                }
            }
        }
    }
    return report;
}

SuiteReport suite_exunit_count() {
    SuiteReport report;
    report.name = "exceptional-unit-count";
    report.coverage = "enumeration vs formula for all n in [2, 10^4]";
    for (uint64_t n = 2; n <= 10'000; ++n) {
        auto set = exunits::enumerate_exunits(n);
        if (Count((uint64_t)set.members.size()) != exunits::count_exunits(arith::factorize(n))) {
            report.pass = false;
            report.detail = "n=" + std::to_string(n);
            break;
        }
    }
    return report;
}

SuiteReport suite_gauss(bool char_variant) {
    SuiteReport report;
    report.name = char_variant ? "gauss-char-sum" : "gauss-sum";
    report.coverage = std::string("all odd primes p < 500, all alpha in [1, p)") +
                      (char_variant ? "" : "; includes the truncated-range identity");
    for (uint64_t p = 3; p < 500; p += 2) {
        if (!arith::is_prime(p)) continue;
        double tol = charsums::tolerance_for(p);
        for (uint64_t a = 1; a < p; ++a) {
            auto check = char_variant ? charsums::char_sum(p, (int64_t)a)
                                      : charsums::gauss_sum(p, (int64_t)a);
            bool ok = check.residual < tol &&
                      std::abs(std::norm(check.computed) - (double)p) < tol;
            if (ok && !char_variant) {
                ok = charsums::truncated_square_sum(p, (int64_t)a).residual < tol;
            }
            if (!ok) {
                report.pass = false;
                report.detail = "p=" + std::to_string(p) + " alpha=" + std::to_string(a);
                return report;
            }
        }
    }
    return report;
}

int cmd_lemmas(const std::string& only) {
    std::vector<SuiteReport> reports;
    auto wanted = [&](const std::string& name) {
        return only.empty() || name.find(only) != std::string::npos;
    };
    if (wanted("multiplicativity")) reports.push_back(suite_multiplicativity());
    if (wanted("prime-power-lifting")) reports.push_back(suite_prime_power_lifting());
    if (wanted("exceptional-unit-count")) reports.push_back(suite_exunit_count());
    if (wanted("gauss-sum")) reports.push_back(suite_gauss(false));
    if (wanted("gauss-char-sum")) reports.push_back(suite_gauss(true));
    if (reports.empty()) {
        std::cerr << "no suite matches filter '" << only << "'\n";
        return kExitUsage;
    }
    bool all_pass = true;
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.coverage << ")";
        if (!r.pass) std::cout << "  at " << r.detail;
        std::cout << "\n";
    }
    return all_pass ? 0 : kExitMismatch;
}

struct BenchArgs {
    std::vector<uint64_t> ns;
    uint32_t k = 0;
    uint32_t e = 0;
    std::vector<std::string> methods;
};

int cmd_bench(const BenchArgs& args) {
    struct Row {
        uint64_t n;
        std::string method;
        int64_t micros;
        Count count;
    };
    std::vector<Row> rows;
    arith::factorize(2);  // build the trial-division sieve outside the timings
    for (uint64_t n : args.ns) {
        for (const auto& method : args.methods) {
            CongruenceQuery q(n, args.k, 0, args.e);
            auto start = std::chrono::steady_clock::now();
            Count count = run_method(method, q);
            rows.push_back(Row{n, method, elapsed_us(start), std::move(count)});
        }
        // correctness dominates benchmarking: methods must agree per n
        const Row* first = nullptr;
        for (const auto& row : rows) {
            if (row.n != n) continue;
            if (!first) {
                first = &row;
            } else if (row.count != first->count) {
                std::cerr << "method disagreement at n=" << n << ": " << first->method << "="
                          << first->count.to_string() << " vs " << row.method << "="
                          << row.count.to_string() << "\n";
                return kExitMismatch;
            }
        }
    }
    std::cout << "n,method,elapsed_us,count\n";
    for (const auto& row : rows) {
        std::cout << row.n << "," << row.method << "," << row.micros << ","
                  << row.count.to_string() << "\n";
    }
    return 0;
}

int cmd_exunits(uint64_t n) {
    auto set = exunits::enumerate_exunits(n);
    ordered_json out{{"n", set.n},
                     {"count", std::to_string(set.members.size())},
                     {"members", set.members}};
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_factor(uint64_t m) {
    auto f = arith::factorize(m);
    ordered_json factors = ordered_json::array();
    for (auto [p, s] : f.factors) {
        factors.push_back(ordered_json{{"prime", p}, {"exponent", s}});
    }
    ordered_json out{{"value", f.value}, {"omega", f.omega()}, {"factors", factors}};
    std::cout << out.dump() << "\n";
    return 0;
}

ordered_json sum_check_json(const charsums::SumCheck& check) {
    return ordered_json{{"p", check.p},
                        {"alpha", check.alpha},
                        {"computed", {check.computed.real(), check.computed.imag()}},
                        {"predicted", {check.predicted.real(), check.predicted.imag()}},
                        {"residual", check.residual},
                        {"tolerance", charsums::tolerance_for(check.p)},
                        {"ok", check.residual < charsums::tolerance_for(check.p)}};
}

int cmd_gauss(uint64_t p, int64_t alpha, bool char_variant) {
    auto check = char_variant ? charsums::char_sum(p, alpha) : charsums::gauss_sum(p, alpha);
    std::cout << sum_check_json(check).dump() << "\n";
    return check.residual < charsums::tolerance_for(p) ? 0 : kExitMismatch;
}

struct LiftArgs {
    std::vector<int64_t> coeffs;
    uint64_t a0 = 0;
    uint64_t p = 0;
    uint32_t s = 1;
};

int cmd_lift(const LiftArgs& args) {
    auto result = hensel::lift_root(args.coeffs, args.a0, args.p, args.s);
    uint64_t modulus = 1;
    for (uint32_t i = 0; i < result.s; ++i) modulus *= result.p;
    ordered_json out{{"p", result.p},
                     {"s", result.s},
                     {"modulus", modulus},
                     {"base_root", result.base_root},
                     {"root", result.root}};
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counts of exceptional-unit solutions of x_1^e+...+x_k^e == c (mod n)"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "count solutions for one (n, k, c, e)");
    count_cmd->add_option("--n", count_args.n, "modulus")->required();
    count_cmd->add_option("--k", count_args.k, "number of variables")->required();
    count_cmd->add_option("--c", count_args.c, "congruence target")->required();
    count_cmd->add_option("--e", count_args.e, "exponent")->required();
    count_cmd->add_option("--method", count_args.method,
                          "closed | convolution | naive (default: closed for e<=2)");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "counts for every c in [0, n)");
    sweep_cmd->add_option("--n", sweep_args.n, "modulus")->required();
    sweep_cmd->add_option("--k", sweep_args.k, "number of variables")->required();
    sweep_cmd->add_option("--e", sweep_args.e, "exponent")->required();
    sweep_cmd->add_option("--format", sweep_args.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    VerifyArgs verify_args;
    auto* verify_cmd =
        app.add_subcommand("verify", "closed form vs convolution oracle, all n <= max-n, all c");
    verify_cmd->add_option("--max-n", verify_args.max_n, "largest modulus")->required();
    verify_cmd->add_option("--k", verify_args.ks, "comma-separated k values")
        ->required()
        ->delimiter(',');
    verify_cmd->add_option("--e", verify_args.e, "exponent")->required();

    std::string lemmas_only;
    auto* lemmas_cmd = app.add_subcommand("lemmas", "run the property suites");
    lemmas_cmd->add_option("--only", lemmas_only, "substring filter on suite names");

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "time methods against each other");
    bench_cmd->add_option("--n", bench_args.ns, "comma-separated moduli")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--k", bench_args.k, "number of variables")->required();
    bench_cmd->add_option("--e", bench_args.e, "exponent")->required();
    bench_cmd->add_option("--methods", bench_args.methods, "comma-separated method names")
        ->required()
        ->delimiter(',');

    uint64_t exunits_n = 0;
    auto* exunits_cmd = app.add_subcommand("exunits", "list the exceptional units mod n");
    exunits_cmd->add_option("--n", exunits_n, "modulus")->required();

    uint64_t factor_m = 0;
    auto* factor_cmd = app.add_subcommand("factor", "prime-power factorization");
    factor_cmd->add_option("--m", factor_m, "value to factor")->required();

    uint64_t gauss_p = 0;
    int64_t gauss_alpha = 1;
    auto* gauss_cmd = app.add_subcommand("gauss", "quadratic Gauss sum check");
    gauss_cmd->add_option("--p", gauss_p, "odd prime")->required();
    gauss_cmd->add_option("--alpha", gauss_alpha, "twist, coprime to p")->required();

    uint64_t charsum_p = 0;
    int64_t charsum_alpha = 1;
    auto* charsum_cmd = app.add_subcommand("charsum", "Legendre character sum check");
    charsum_cmd->add_option("--p", charsum_p, "odd prime")->required();
    charsum_cmd->add_option("--alpha", charsum_alpha, "twist, coprime to p")->required();

    LiftArgs lift_args;
    auto* lift_cmd = app.add_subcommand("lift", "Hensel-lift a simple root to mod p^s");
    lift_cmd->add_option("--coeffs", lift_args.coeffs, "polynomial coefficients, constant first")
        ->required()
        ->delimiter(',');
    lift_cmd->add_option("--a0", lift_args.a0, "base root mod p")->required();
    lift_cmd->add_option("--p", lift_args.p, "prime")->required();
    lift_cmd->add_option("--s", lift_args.s, "target power")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (count_cmd->parsed()) return cmd_count(count_args);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_args);
        if (verify_cmd->parsed()) return cmd_verify(verify_args);
        if (lemmas_cmd->parsed()) return cmd_lemmas(lemmas_only);
        if (bench_cmd->parsed()) return cmd_bench(bench_args);
        if (exunits_cmd->parsed()) return cmd_exunits(exunits_n);
        if (factor_cmd->parsed()) return cmd_factor(factor_m);
        if (gauss_cmd->parsed()) return cmd_gauss(gauss_p, gauss_alpha, false);
        if (charsum_cmd->parsed()) return cmd_gauss(charsum_p, charsum_alpha, true);
        if (lift_cmd->parsed()) return cmd_lift(lift_args);
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const internal_error& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
