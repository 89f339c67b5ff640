#include "mhahn/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "mhahn/algebra_h.hpp"
#include "mhahn/dual_rep.hpp"
#include "mhahn/errors.hpp"
#include "mhahn/hahn.hpp"
#include "mhahn/matrix.hpp"
#include "mhahn/sl_minus.hpp"
#include "mhahn/verdict.hpp"

namespace mhahn {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// splitmix64: tiny, stateful, and identical on every platform, unlike the
// standard distributions.
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

struct Job {
    unsigned criterion;
    std::string cell;
    std::function<Report(Rng&)> body;
};

// Three (alpha, beta) pairs per parity regime: an integer pair, an
// alpha = beta pair, and a non-integer pair, all inside the positivity
// regime for the given N.
std::vector<HahnParams> parameter_lattice(unsigned max_n) {
    std::vector<HahnParams> cells;
    for (unsigned N = 0; N <= max_n; ++N) {
        const long n = static_cast<long>(N);
        if (N % 2 == 0) {
            cells.emplace_back(Rational(n + 1), Rational(n + 2), N);
            cells.emplace_back(Rational(2 * n + 3, 2), Rational(2 * n + 3, 2), N);
            cells.emplace_back(Rational(3 * n + 5, 3), Rational(4 * n + 1, 4), N);
        } else {
            cells.emplace_back(Rational(3), Rational(2), N);
            cells.emplace_back(Rational(7, 2), Rational(7, 2), N);
            cells.emplace_back(Rational(1, 3), Rational(5, 4), N);
        }
    }
    return cells;
}

std::string hahn_label(const HahnParams& p) {
    std::ostringstream os;
    os << "N=" << p.N << " alpha=" << p.alpha.to_string() << " beta=" << p.beta.to_string();
    return os.str();
}

std::string coupling_label(const CouplingProblem& cp) {
    std::ostringstream os;
    os << "N=" << cp.N << " mu_a=" << cp.a.mu.to_string() << " eps_a=" << cp.a.epsilon
       << " mu_b=" << cp.b.mu.to_string() << " eps_b=" << cp.b.epsilon;
    return os.str();
}

Report criterion1(const HahnParams& p) { return verify_orthogonality(p); }

Report criterion2(const HahnParams& p, Rng& rng) {
    Report rep;
    const std::vector<Rational> x = grid(p);

    bool ok = true;
    std::string detail;
    for (unsigned n = 0; n <= p.N && ok; ++n)
        for (unsigned s = 0; s <= p.N && ok; ++s)
            if (eval_hypergeometric(p, n, x[s]) != eval_recurrence(p, n, x[s])) {
                ok = false;
                detail = "n=" + std::to_string(n) + " s=" + std::to_string(s);
            }
    rep.add("hypergeometric matches recurrence on the grid", ok, detail);

    ok = true;
    detail.clear();
    for (int t = 0; t < 5; ++t) {
        Rational pt;
        do {
            pt = Rational(rng.range(-40, 40), rng.range(1, 12));
        } while (std::find(x.begin(), x.end(), pt) != x.end());
        for (unsigned n = 0; n <= p.N && ok; ++n)
            if (eval_hypergeometric(p, n, pt) != eval_recurrence(p, n, pt)) {
                ok = false;
                detail = "n=" + std::to_string(n) + " x=" + pt.to_string();
            }
    }
    rep.add("hypergeometric matches recurrence off the grid", ok, detail);
    return rep;
}

Report criterion3(const HahnParams& p) {
    Report rep;
    const GeneratorSet g = build_realization(p);
    rep.merge(verify_relations(g));

    const auto scalar = casimir_H(g).as_scalar();
    rep.add("Casimir acts as the expected scalar",
            scalar.has_value() && *scalar == casimir_value(g.constants));
    rep.add("doubled K2 spectrum is the grid",
            spectrum_equals(Rational(2) * g.K2, grid(p)));
    return rep;
}

Report criterion4(const HahnParams& p) { return verify_pentadiagonality(p); }

Report criterion5(const CouplingProblem& cp) {
    Report rep;
    const KappaSet k = coupled_operators(cp);
    rep.merge(verify_kappa_relations(k));
    rep.merge(verify_casimir_spectrum(cp));
    return rep;
}

Report criterion6(const CouplingProblem& cp) {
    Report rep;
    rep.merge(verify_cg_orthonormality(cp));
    rep.merge(verify_cg_polynomial_match(cp));
    rep.merge(verify_kappa_is_H(cp));
    return rep;
}

Report criterion7(const HahnParams& p, Rng& rng) {
    Report rep;

    std::vector<FreeParams> gauges;
    gauges.push_back(FreeParams::ones(p.N));
    for (int t = 0; t < 3; ++t) {
        std::vector<Rational> v;
        for (unsigned i = 0; i <= p.N; ++i) {
            const long num = rng.range(1, 9) * (rng.range(0, 1) == 0 ? 1 : -1);
            v.emplace_back(Rational(num, rng.range(1, 4)));
        }
        gauges.emplace_back(std::move(v));
    }

    for (std::size_t gi = 0; gi < gauges.size(); ++gi) {
        const std::string tag = " (gauge " + std::to_string(gi) + ")";
        const DualRep d = derive_dual_rep(p, gauges[gi]);
        rep.add("derived representation verifies" + tag, verify_dual_rep(d).pass());

        bool unexplained = false;
        std::string where;
        for (const auto& f : compare_printed_blocks(p, gauges[gi]))
            if (!f.explained) {
                unexplained = true;
                where = f.where;
            }
        rep.add("printed blocks compare with no unexplained discrepancy" + tag, !unexplained,
                where);

        similarity_to_primal(p, d);
        rep.add("similarity to the primal realization exists" + tag, true);

        if (gi == 0)
            rep.add("intertwiner space is one-dimensional",
                    intertwiner_dimension(p, d) == 1);
    }
    return rep;
}

Report criterion8(const HahnParams& p) {
    Report rep;
    const GeneratorSet g = build_realization(p);
    rep.merge(verify_tilde(g));

    const TildeSet t = tilde_presentation(g);
    const StructureConstants& sc = g.constants;
    rep.add("rotation constant has its closed form",
            t.chi == (sc.sigma - sc.nu * sc.rho) / 4);

    const RMatrix quad =
        t.K1 * t.K1 + t.K2 * t.K2 - t.K3 * t.K3 + (t.nu / 2) * t.P;
    const Rational expected =
        (casimir_value(sc) + sc.rho * sc.rho / 4 - sc.nu * sc.nu + Rational(1, 4)) / 4;
    const auto scalar = quad.as_scalar();
    rep.add("rotated quadratic element is the expected scalar",
            scalar.has_value() && *scalar == expected);
    return rep;
}

Report criterion9(const ModuleLabel& label) {
    Report rep;
    rep.merge(verify_parabose(label, 12));
    const auto q = module_action(label, SlGenerator::Q, 12).as_scalar();
    rep.add("quadratic element is the labelled scalar",
            q.has_value() && *q == Rational(-label.epsilon) * label.mu);
    return rep;
}

std::vector<Job> build_jobs(const SweepConfig& cfg) {
    std::vector<Job> jobs;

    const std::vector<HahnParams> lattice = parameter_lattice(cfg.max_n);
    for (const auto& p : lattice)
        jobs.push_back({1, hahn_label(p), [p](Rng&) { return criterion1(p); }});
    for (const auto& p : lattice)
        jobs.push_back({2, hahn_label(p), [p](Rng& r) { return criterion2(p, r); }});
    for (const auto& p : lattice)
        jobs.push_back({3, hahn_label(p), [p](Rng&) { return criterion3(p); }});
    for (const auto& p : lattice)
        jobs.push_back({4, hahn_label(p), [p](Rng&) { return criterion4(p); }});

    const std::vector<Rational> mus = {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2)};
    const unsigned coupling_cap = std::min(cfg.max_n, 10u);
    for (unsigned N = 0; N <= coupling_cap; ++N)
        for (const auto& ma : mus)
            for (const auto& mb : mus)
                for (int ea : {1, -1})
                    for (int eb : {1, -1}) {
                        const CouplingProblem cp{{ea, ma}, {eb, mb}, N};
                        jobs.push_back(
                            {5, coupling_label(cp), [cp](Rng&) { return criterion5(cp); }});
                    }
    for (unsigned N = 0; N <= coupling_cap; ++N)
        for (const auto& ma : mus)
            for (const auto& mb : mus) {
                const CouplingProblem cp{{1, ma}, {1, mb}, N};
                jobs.push_back({6, coupling_label(cp), [cp](Rng&) { return criterion6(cp); }});
            }

    const std::vector<HahnParams> dual_lattice = parameter_lattice(std::min(cfg.max_n, 9u));
    for (const auto& p : dual_lattice)
        jobs.push_back({7, hahn_label(p), [p](Rng& r) { return criterion7(p, r); }});

    for (const auto& p : lattice)
        jobs.push_back({8, hahn_label(p), [p](Rng&) { return criterion8(p); }});

    for (int eps : {1, -1})
        for (const auto& mu : {Rational(0), Rational(1, 2), Rational(3, 2)}) {
            const ModuleLabel label{eps, mu};
            std::ostringstream os;
            os << "eps=" << eps << " mu=" << mu.to_string();
            jobs.push_back({9, os.str(), [label](Rng&) { return criterion9(label); }});
        }
    return jobs;
}

CellResult run_job(const Job& job, std::uint64_t seed) {
    CellResult res;
    res.criterion = job.criterion;
    res.cell = job.cell;
    Rng rng{seed ^ fnv1a(std::to_string(job.criterion) + ":" + job.cell)};
    try {
        const Report rep = job.body(rng);
        res.pass = rep.pass();
        if (!res.pass) res.detail = rep.summary();
    } catch (const Error& e) {
        res.pass = false;
        res.detail = e.what();
    }
    return res;
}

unsigned effective_threads(const SweepConfig& cfg) {
    unsigned t = cfg.threads == 0 ? 1 : cfg.threads;
    if (const char* env = std::getenv("MHAHN_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned long>(cap) < t) t = static_cast<unsigned>(cap);
    }
    return std::max(1u, t);
}

} // namespace

const char* criterion_title(unsigned criterion) {
    switch (criterion) {
        case 1: return "orthogonality on the parameter lattice";
        case 2: return "hypergeometric and recurrence evaluations agree";
        case 3: return "defining relations and scalar Casimir";
        case 4: return "pentadiagonal conjugated form with integer spectrum";
        case 5: return "coupled kappa relations and quadratic element";
        case 6: return "coupling coefficients match the polynomial family";
        case 7: return "dual-basis representation derived from the relations";
        case 8: return "rotated presentation and its quadratic element";
        case 9: return "module ladder relations at the truncation";
        default: return "unknown criterion";
    }
}

SweepSummary run_sweep(const SweepConfig& cfg) {
    const std::vector<Job> jobs = build_jobs(cfg);
    std::vector<CellResult> slots(jobs.size());

    const unsigned threads = effective_threads(cfg);
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> stop{false};
    auto worker = [&] {
        for (;;) {
            if (stop.load(std::memory_order_relaxed)) return;
            const std::size_t i = cursor.fetch_add(1, std::memory_order_relaxed);
            if (i >= jobs.size()) return;
            slots[i] = run_job(jobs[i], cfg.seed);
            if (!slots[i].pass && !cfg.keep_going) stop.store(true, std::memory_order_relaxed);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SweepSummary sum;
    for (unsigned c = 1; c <= 9; ++c)
        sum.verdicts.push_back({c, criterion_title(c), 0, 0});
    for (auto& slot : slots) {
        if (slot.criterion == 0) continue;  // skipped after an early stop
        CriterionVerdict& v = sum.verdicts[slot.criterion - 1];
        ++v.cells;
        if (!slot.pass) ++v.failed;
        sum.cells.push_back(std::move(slot));
    }
    sum.pass = true;
    for (const auto& v : sum.verdicts)
        if (!v.pass()) sum.pass = false;
    return sum;
}

} // namespace mhahn
