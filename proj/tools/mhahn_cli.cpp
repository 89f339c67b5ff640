// Command line front end: exact tables, verification suites, coupling
// coefficients, dual-basis representations and the full acceptance sweep.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input (parse
// error, parameters outside the positivity regime, degenerate request).

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mhahn/algebra_h.hpp"
#include "mhahn/dual_rep.hpp"
#include "mhahn/errors.hpp"
#include "mhahn/hahn.hpp"
#include "mhahn/serialize.hpp"
#include "mhahn/sl_minus.hpp"
#include "mhahn/sweep.hpp"
#include "mhahn/verdict.hpp"

namespace {

using namespace mhahn;

constexpr int kPass = 0;
constexpr int kVerifyFail = 1;
constexpr int kBadInput = 2;

Rational parse_rational(const std::string& text) { return Rational::from_string(text); }

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

int emit_report(const std::string& suite, const Report& rep, const std::string& format) {
    if (format == "csv")
        std::cout << report_csv(rep);
    else
        std::cout << report_json(suite, rep);
    return rep.pass() ? kPass : kVerifyFail;
}

int cmd_tables(const std::string& alpha, const std::string& beta, unsigned N,
               const std::string& format, bool approx) {
    const HahnParams p(parse_rational(alpha), parse_rational(beta), N);
    if (format == "csv")
        std::cout << tables_csv(p, approx);
    else
        std::cout << tables_json(p, approx);
    return kPass;
}

int cmd_verify_h(const std::string& alpha, const std::string& beta, unsigned N,
                 const std::string& format) {
    const HahnParams p(parse_rational(alpha), parse_rational(beta), N);
    Report rep;
    rep.merge(verify_orthogonality(p));
    const GeneratorSet g = build_realization(p);
    rep.merge(verify_relations(g));
    const auto scalar = casimir_H(g).as_scalar();
    rep.add("Casimir acts as the expected scalar",
            scalar.has_value() && *scalar == casimir_value(g.constants));
    rep.merge(verify_pentadiagonality(p));
    rep.merge(verify_tilde(g));
    return emit_report("verify-h", rep, format);
}

int cmd_verify_sl(const std::string& mu_a, const std::string& mu_b, int eps_a, int eps_b,
                  unsigned N, unsigned cutoff, const std::string& format) {
    if (eps_a * eps_a != 1 || eps_b * eps_b != 1)
        throw ParseError("eps must be 1 or -1");
    const CouplingProblem cp{{eps_a, parse_rational(mu_a)}, {eps_b, parse_rational(mu_b)}, N};
    Report rep;
    rep.merge(verify_parabose(cp.a, cutoff));
    rep.merge(verify_parabose(cp.b, cutoff));
    rep.merge(verify_kappa_relations(coupled_operators(cp)));
    rep.merge(verify_casimir_spectrum(cp));
    rep.merge(verify_cg_orthonormality(cp));
    if (eps_a == 1 && eps_b == 1) {
        rep.merge(verify_cg_polynomial_match(cp));
        rep.merge(verify_kappa_is_H(cp));
    }
    return emit_report("verify-sl", rep, format);
}

int cmd_cg(const std::string& mu_a, const std::string& mu_b, int eps_a, int eps_b, unsigned N,
           const std::string& format, bool approx) {
    if (eps_a * eps_a != 1 || eps_b * eps_b != 1)
        throw ParseError("eps must be 1 or -1");
    const CouplingProblem cp{{eps_a, parse_rational(mu_a)}, {eps_b, parse_rational(mu_b)}, N};
    if (format == "csv")
        std::cout << cg_csv(cp, approx);
    else
        std::cout << cg_json(cp, approx);
    return verify_cg_orthonormality(cp).pass() ? kPass : kVerifyFail;
}

int cmd_dual_rep(const std::string& alpha, const std::string& beta, unsigned N,
                 const std::string& params, bool derive, const std::string& format) {
    const HahnParams p(parse_rational(alpha), parse_rational(beta), N);
    const FreeParams fp(parse_rational_list(params));
    const DualRep d = derive ? derive_dual_rep(p, fp) : build_dual_rep_printed(p, fp);
    const Report rep = verify_dual_rep(d);

    std::vector<BlockFinding> findings;
    try {
        findings = compare_printed_blocks(p, fp);
    } catch (const InconsistentSystem&) {
        // comparison unavailable at a degenerate cell; the table still stands
    }
    if (format == "csv") {
        std::cout << report_csv(rep);
    } else {
        std::cout << dual_rep_json(d, findings);
        if (!rep.pass()) std::cerr << "verification failed: " << rep.summary() << "\n";
    }
    return rep.pass() ? kPass : kVerifyFail;
}

int cmd_sweep(std::uint64_t seed, unsigned max_n, bool keep_going, unsigned threads,
              const std::string& format) {
    SweepConfig cfg;
    cfg.seed = seed;
    cfg.max_n = max_n;
    cfg.keep_going = keep_going;
    cfg.threads = threads;
    const SweepSummary sum = run_sweep(cfg);

    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["seed"] = seed;
        j["pass"] = sum.pass;
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for (const auto& c : sum.cells)
            cells.push_back({{"criterion", c.criterion},
                             {"cell", c.cell},
                             {"pass", c.pass},
                             {"detail", c.detail}});
        j["cells"] = std::move(cells);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "criterion,cell,pass,detail\n";
        for (const auto& c : sum.cells)
            std::cout << c.criterion << ',' << csv_escape(c.cell) << ','
                      << (c.pass ? "true" : "false") << ',' << csv_escape(c.detail) << "\n";
    }
    for (const auto& v : sum.verdicts)
        std::cerr << "criterion " << v.criterion << " (" << v.title << "): "
                  << (v.pass() ? "pass" : "FAIL") << " [" << v.cells - v.failed << "/" << v.cells
                  << " cells]\n";
    return sum.pass ? kPass : kVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tables and verification for a dual polynomial family"};
    app.require_subcommand(1);

    std::string alpha, beta, mu_a, mu_b, params = "";
    std::string format = "json";
    unsigned N = 0, cutoff = 12, max_n = 9, threads = 0;
    int eps_a = 1, eps_b = 1;
    bool approx = false, derive = false, keep_going = false;
    std::uint64_t seed = 1;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* tables = app.add_subcommand("tables", "recurrence, grid, weights, norms, values");
    tables->add_option("--alpha", alpha)->required();
    tables->add_option("--beta", beta)->required();
    tables->add_option("--N", N)->required();
    tables->add_flag("--approx", approx, "add decimal columns next to the exact ones");
    add_format(tables);

    CLI::App* vh = app.add_subcommand("verify-h", "polynomial and operator identities");
    vh->add_option("--alpha", alpha)->required();
    vh->add_option("--beta", beta)->required();
    vh->add_option("--N", N)->required();
    add_format(vh);

    CLI::App* vsl = app.add_subcommand("verify-sl", "module and coupling identities");
    vsl->add_option("--mu-a", mu_a)->required();
    vsl->add_option("--mu-b", mu_b)->required();
    vsl->add_option("--eps-a", eps_a);
    vsl->add_option("--eps-b", eps_b);
    vsl->add_option("--N", N)->required();
    vsl->add_option("--cutoff", cutoff, "module truncation for the ladder checks");
    add_format(vsl);

    CLI::App* cg = app.add_subcommand("cg", "coupling coefficient table");
    cg->add_option("--mu-a", mu_a)->required();
    cg->add_option("--mu-b", mu_b)->required();
    cg->add_option("--eps-a", eps_a);
    cg->add_option("--eps-b", eps_b);
    cg->add_option("--N", N)->required();
    cg->add_flag("--approx", approx);
    add_format(cg);

    CLI::App* dr = app.add_subcommand("dual-rep", "dual-basis representation blocks");
    dr->add_option("--alpha", alpha)->required();
    dr->add_option("--beta", beta)->required();
    dr->add_option("--N", N)->required();
    dr->add_option("--params", params, "comma list of N+1 nonzero gauge values")->required();
    dr->add_flag("--derive", derive, "derive from the relations instead of the closed form");
    add_format(dr);

    CLI::App* sw = app.add_subcommand("sweep", "full acceptance matrix");
    sw->add_option("--seed", seed);
    sw->add_option("--max-n", max_n, "lattice cap on N");
    sw->add_flag("--keep-going", keep_going, "do not stop at the first failing cell");
    sw->add_option("--threads", threads, "worker count (MHAHN_THREADS caps it)");
    add_format(sw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (tables->parsed()) return cmd_tables(alpha, beta, N, format, approx);
        if (vh->parsed()) return cmd_verify_h(alpha, beta, N, format);
        if (vsl->parsed()) return cmd_verify_sl(mu_a, mu_b, eps_a, eps_b, N, cutoff, format);
        if (cg->parsed()) return cmd_cg(mu_a, mu_b, eps_a, eps_b, N, format, approx);
        if (dr->parsed()) return cmd_dual_rep(alpha, beta, N, params, derive, format);
        if (sw->parsed()) return cmd_sweep(seed, max_n, keep_going, threads, format);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const RegimeError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const ZeroParameter& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const DegenerateEigenvalue& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const InconsistentSystem& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const Error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return kVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
