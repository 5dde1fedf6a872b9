// Command-line front end: construct Schubert polynomials, run verification
// suites, and evaluate the Stanley determinant identity for a single level.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "schub/permutation.hpp"
#include "schub/render.hpp"
#include "schub/schubert.hpp"
#include "schub/stanley.hpp"
#include "schub/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Options {
    int n = 0;
    std::string perm;
    int ell = -1;
    std::string suite = "all";
    std::string format = "text";
    std::uint64_t seed = 12345;
    bool max_n_override = false;
};

void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int run_schubert(const Options& opt) {
    if (opt.n < 1 || (opt.n > 8 && !opt.max_n_override)) {
        std::cerr << "schubert: n=" << opt.n
                  << " outside supported range 1..8 (pass --max-n-override to lift the cap)\n";
        return 2;
    }
    const auto t0 = Clock::now();
    const schub::SchubertTable table(opt.n);

    if (!opt.perm.empty()) {
        const schub::Permutation w = schub::parse_permutation(opt.perm);
        if (w.degree() != opt.n)
            throw std::invalid_argument("schubert: permutation has degree " +
                                        std::to_string(w.degree()) + " but --n is " +
                                        std::to_string(opt.n));
        const schub::Poly& p = table.at(w);
        if (opt.format == "text") {
            std::cout << p.to_string() << "\n";
        } else {
            emit_json({{"command", "schubert"},
                       {"params", {{"n", opt.n}, {"perm", schub::to_string(w)}}},
                       {"length", w.length()},
                       {"text", p.to_string()},
                       {"terms", schub::to_json(p)},
                       {"ms", ms_since(t0)}});
        }
        return 0;
    }

    // Full table, ordered by (length, lex).
    std::vector<schub::Permutation> order;
    for (const auto& [w, p] : table.entries()) order.push_back(w);
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.length() < b.length();
    });

    if (opt.format == "text") {
        for (const auto& w : order)
            std::cout << "S[" << schub::to_string(w) << "] = " << table.at(w).to_string() << "\n";
    } else {
        nlohmann::json polys = nlohmann::json::array();
        for (const auto& w : order)
            polys.push_back({{"perm", schub::to_string(w)},
                             {"length", w.length()},
                             {"text", table.at(w).to_string()},
                             {"terms", schub::to_json(table.at(w))}});
        emit_json({{"command", "schubert"},
                   {"params", {{"n", opt.n}}},
                   {"polynomials", polys},
                   {"ms", ms_since(t0)}});
    }
    return 0;
}

int run_verify(const Options& opt) {
    const auto t0 = Clock::now();
    const std::vector<schub::SuiteResult> suites =
        schub::verify_suites(opt.suite, opt.n, opt.seed, opt.max_n_override);
    bool pass = true;
    for (const auto& s : suites) pass = pass && s.pass;

    if (opt.format == "text") {
        for (const auto& s : suites) std::cout << schub::to_text(s) << "\n";
        std::cout << "verify n=" << opt.n << " suite=" << opt.suite << ": "
                  << (pass ? "PASS" : "FAIL") << " (" << ms_since(t0) << " ms)\n";
    } else {
        nlohmann::json js = nlohmann::json::array();
        for (const auto& s : suites) js.push_back(schub::to_json(s));
        emit_json({{"command", "verify"},
                   {"params",
                    {{"n", opt.n}, {"suite", opt.suite}, {"seed", opt.seed}}},
                   {"suites", js},
                   {"pass", pass},
                   {"ms", ms_since(t0)}});
    }
    return pass ? 0 : 1;
}

int run_stanley_det(const Options& opt) {
    if (opt.n < 1 || (opt.n > 7 && !opt.max_n_override)) {
        std::cerr << "stanley-det: n=" << opt.n
                  << " outside supported range 1..7 (pass --max-n-override to lift the cap)\n";
        return 2;
    }
    const auto t0 = Clock::now();
    const schub::StanleyReport rep = schub::verify_stanley(opt.n, opt.ell);
    if (opt.format == "text") {
        std::cout << schub::to_text(rep) << " (" << ms_since(t0) << " ms)\n";
    } else {
        nlohmann::json j = schub::to_json(rep);
        j["command"] = "stanley-det";
        j["ms"] = ms_since(t0);
        emit_json(j);
    }
    return rep.equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert polynomials, their derivative recursion, and Stanley's determinant"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::string> formats{"text", "json-like"};

    CLI::App* schubert = app.add_subcommand("schubert", "Print S_w, or the whole table for S_n");
    schubert->add_option("--n", opt.n, "Degree of the symmetric group")->required();
    schubert->add_option("--perm", opt.perm, "One-line notation, e.g. 2,3,1 (or 231 for n <= 9)");
    schubert->add_option("--format", opt.format)->check(CLI::IsMember(formats));
    schubert->add_flag("--max-n-override", opt.max_n_override, "Lift the default n cap");

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--n", opt.n, "Degree of the symmetric group")->required();
    verify->add_option("--suite", opt.suite,
                       "prop1, macdonald, basis, lemma2, sl2, stanley, or all");
    verify->add_option("--seed", opt.seed, "Seed for randomized checks");
    verify->add_option("--format", opt.format)->check(CLI::IsMember(formats));
    verify->add_flag("--max-n-override", opt.max_n_override, "Lift the default n caps");

    CLI::App* stanley = app.add_subcommand("stanley-det", "Determinant vs formula for one (n, ell)");
    stanley->add_option("--n", opt.n, "Degree of the symmetric group")->required();
    stanley->add_option("--ell", opt.ell, "Level, 0 <= ell <= C(n,2)-ell")->required();
    stanley->add_option("--format", opt.format)->check(CLI::IsMember(formats));
    stanley->add_flag("--max-n-override", opt.max_n_override, "Lift the default n cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (schubert->parsed()) return run_schubert(opt);
        if (verify->parsed()) return run_verify(opt);
        if (stanley->parsed()) return run_stanley_det(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // internal inconsistency: a mathematical identity failed to hold
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
