#include "mhahn/serialize.hpp"

#include <cstddef>
#include <sstream>

#include "json.hpp"

#include "mhahn/errors.hpp"

namespace mhahn {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json rat(const Rational& r) { return r.to_string(); }

ordered_json rat_row(const std::vector<Rational>& row) {
    ordered_json a = ordered_json::array();
    for (const auto& r : row) a.push_back(rat(r));
    return a;
}

ordered_json matrix_json(const RMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(rat(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string finish(ordered_json& j) { return j.dump() + "\n"; }

// Row indices of pairing block b: {2b, 2b+1}, or the lone {N} tail block
// when N is even.
std::vector<std::size_t> block_rows(std::size_t b, std::size_t dim) {
    std::vector<std::size_t> rows{2 * b};
    if (2 * b + 1 < dim) rows.push_back(2 * b + 1);
    return rows;
}

ordered_json submatrix_json(const RMatrix& m,
                            const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) {
    ordered_json out = ordered_json::array();
    for (std::size_t i : rows) {
        ordered_json row = ordered_json::array();
        for (std::size_t j : cols) row.push_back(rat(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

std::string csv_escape(const std::string& field) {
    bool needs = false;
    for (char c : field)
        if (c == ',' || c == '"' || c == '\n' || c == '\r') { needs = true; break; }
    if (!needs) return field;
    std::string out = "\"";
    for (char c : field) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

std::string tables_json(const HahnParams& p, bool approx) {
    ordered_json j;
    j["schema"] = 1;
    j["alpha"] = rat(p.alpha);
    j["beta"] = rat(p.beta);
    j["N"] = p.N;

    ordered_json rec = ordered_json::array();
    for (unsigned n = 0; n <= p.N; ++n) {
        const RecurrencePair rp = recurrence_coefficients(p, n);
        ordered_json e;
        e["n"] = n;
        e["b"] = rat(rp.b);
        e["u"] = rat(rp.u);
        if (approx) {
            e["b_approx"] = rp.b.approx();
            e["u_approx"] = rp.u.approx();
        }
        rec.push_back(std::move(e));
    }
    j["recurrence"] = std::move(rec);

    const std::vector<Rational> x = grid(p);
    const WeightTable w = weights(p);

    ordered_json gr = ordered_json::array();
    for (unsigned s = 0; s <= p.N; ++s) {
        ordered_json e;
        e["s"] = s;
        e["x"] = rat(x[s]);
        e["omega"] = rat(w.omega[s]);
        if (approx) {
            e["x_approx"] = x[s].approx();
            e["omega_approx"] = w.omega[s].approx();
        }
        gr.push_back(std::move(e));
    }
    j["grid"] = std::move(gr);

    ordered_json nm = ordered_json::array();
    for (unsigned n = 0; n <= p.N; ++n) {
        ordered_json e;
        e["n"] = n;
        e["v"] = rat(w.v[n]);
        if (approx) e["v_approx"] = w.v[n].approx();
        nm.push_back(std::move(e));
    }
    j["norms"] = std::move(nm);

    ordered_json vals = ordered_json::array();
    for (unsigned n = 0; n <= p.N; ++n) {
        ordered_json row = ordered_json::array();
        for (unsigned s = 0; s <= p.N; ++s) row.push_back(rat(eval_recurrence(p, n, x[s])));
        vals.push_back(std::move(row));
    }
    j["values"] = {{"rows", "n"}, {"cols", "s"}, {"entries", std::move(vals)}};
    if (approx) {
        ordered_json valsd = ordered_json::array();
        for (unsigned n = 0; n <= p.N; ++n) {
            ordered_json row = ordered_json::array();
            for (unsigned s = 0; s <= p.N; ++s) row.push_back(eval_recurrence(p, n, x[s]).approx());
            valsd.push_back(std::move(row));
        }
        j["values"]["entries_approx"] = std::move(valsd);
    }
    return finish(j);
}

std::string tables_csv(const HahnParams& p, bool approx) {
    std::ostringstream out;
    const std::vector<Rational> x = grid(p);
    const WeightTable w = weights(p);

    out << "n,b_n,u_n";
    if (approx) out << ",b_n_approx,u_n_approx";
    out << "\n";
    for (unsigned n = 0; n <= p.N; ++n) {
        const RecurrencePair rp = recurrence_coefficients(p, n);
        out << n << ',' << csv_escape(rp.b.to_string()) << ',' << csv_escape(rp.u.to_string());
        if (approx) out << ',' << rp.b.approx() << ',' << rp.u.approx();
        out << "\n";
    }
    out << "\n";

    out << "s,x_s,omega_s";
    if (approx) out << ",x_s_approx,omega_s_approx";
    out << "\n";
    for (unsigned s = 0; s <= p.N; ++s) {
        out << s << ',' << csv_escape(x[s].to_string()) << ',' << csv_escape(w.omega[s].to_string());
        if (approx) out << ',' << x[s].approx() << ',' << w.omega[s].approx();
        out << "\n";
    }
    out << "\n";

    out << "n,v_n";
    if (approx) out << ",v_n_approx";
    out << "\n";
    for (unsigned n = 0; n <= p.N; ++n) {
        out << n << ',' << csv_escape(w.v[n].to_string());
        if (approx) out << ',' << w.v[n].approx();
        out << "\n";
    }
    out << "\n";

    out << "n";
    for (unsigned s = 0; s <= p.N; ++s) out << ",Q(x_" << s << ')';
    out << "\n";
    for (unsigned n = 0; n <= p.N; ++n) {
        out << n;
        for (unsigned s = 0; s <= p.N; ++s)
            out << ',' << csv_escape(eval_recurrence(p, n, x[s]).to_string());
        out << "\n";
    }
    if (approx) {
        out << "\nn";
        for (unsigned s = 0; s <= p.N; ++s) out << ",Q_approx(x_" << s << ')';
        out << "\n";
        for (unsigned n = 0; n <= p.N; ++n) {
            out << n;
            for (unsigned s = 0; s <= p.N; ++s)
                out << ',' << eval_recurrence(p, n, x[s]).approx();
            out << "\n";
        }
    }
    return out.str();
}

std::string report_json(const std::string& suite, const Report& rep) {
    ordered_json j;
    j["schema"] = 1;
    j["suite"] = suite;
    j["pass"] = rep.pass();
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return finish(j);
}

std::string report_csv(const Report& rep) {
    std::ostringstream out;
    out << "name,pass,detail\n";
    for (const auto& c : rep.checks)
        out << csv_escape(c.name) << ',' << (c.pass ? "true" : "false") << ','
            << csv_escape(c.detail) << "\n";
    return out.str();
}

std::string generators_json(const GeneratorSet& g) {
    ordered_json j;
    j["schema"] = 1;
    j["dim"] = g.dim();
    j["constants"] = {{"nu", rat(g.constants.nu)},
                      {"sigma", rat(g.constants.sigma)},
                      {"rho", rat(g.constants.rho)}};
    j["K1"] = matrix_json(g.K1);
    j["K2"] = matrix_json(g.K2);
    j["K3"] = matrix_json(g.K3);
    j["P"] = matrix_json(g.P);
    return finish(j);
}

namespace {

// Column label lookup: the coupled Casimir acts on column k as
// lambda3 * two_eig[k] / 2, which identifies the (eps, mu) line.
const CasimirLine* line_for(const std::vector<CasimirLine>& lines, const Rational& q) {
    for (const auto& ln : lines)
        if (ln.q_ab == q) return &ln;
    return nullptr;
}

} // namespace

std::string cg_json(const CouplingProblem& cp, bool approx) {
    const CGTable t = clebsch_gordan(cp);
    const KappaSet k = coupled_operators(cp);
    const std::vector<CasimirLine> lines = casimir_spectrum(cp);

    ordered_json j;
    j["schema"] = 1;
    j["mu_a"] = rat(cp.a.mu);
    j["eps_a"] = cp.a.epsilon;
    j["mu_b"] = rat(cp.b.mu);
    j["eps_b"] = cp.b.epsilon;
    j["N"] = cp.N;

    ordered_json cols = ordered_json::array();
    for (std::size_t kc = 0; kc < t.dim; ++kc) {
        ordered_json e;
        e["k"] = kc;
        e["two_eig"] = rat(t.two_eig[kc]);
        if (approx) e["two_eig_approx"] = t.two_eig[kc].approx();
        const Rational q = k.lambda3 * t.two_eig[kc] / 2;
        if (const CasimirLine* ln = line_for(lines, q)) {
            e["eps_ab"] = ln->eps_ab;
            e["mu_ab"] = rat(ln->mu_ab);
            e["q_ab"] = rat(ln->q_ab);
        }
        e["phase_row"] = t.phase_row[kc];
        cols.push_back(std::move(e));
    }
    j["columns"] = std::move(cols);

    ordered_json sq = ordered_json::array();
    ordered_json sg = ordered_json::array();
    for (std::size_t n = 0; n < t.dim; ++n) {
        sq.push_back(rat_row(t.squared[n]));
        ordered_json srow = ordered_json::array();
        for (std::size_t kc = 0; kc < t.dim; ++kc) srow.push_back(t.sign[n][kc]);
        sg.push_back(std::move(srow));
    }
    j["squared"] = std::move(sq);
    j["sign"] = std::move(sg);
    if (approx) {
        ordered_json sqd = ordered_json::array();
        for (std::size_t n = 0; n < t.dim; ++n) {
            ordered_json row = ordered_json::array();
            for (std::size_t kc = 0; kc < t.dim; ++kc) row.push_back(t.squared[n][kc].approx());
            sqd.push_back(std::move(row));
        }
        j["squared_approx"] = std::move(sqd);
    }

    try {
        const HahnParams hp = cg_parameter_map(cp);
        j["parameter_map"] = {{"alpha", rat(hp.alpha)}, {"beta", rat(hp.beta)}, {"N", hp.N}};
    } catch (const RegimeError&) {
        j["parameter_map"] = nullptr;
    }
    return finish(j);
}

std::string cg_csv(const CouplingProblem& cp, bool approx) {
    const CGTable t = clebsch_gordan(cp);
    const KappaSet k = coupled_operators(cp);
    const std::vector<CasimirLine> lines = casimir_spectrum(cp);
    std::ostringstream out;

    out << "k,two_eig,eps_ab,mu_ab,q_ab,phase_row";
    if (approx) out << ",two_eig_approx";
    out << "\n";
    for (std::size_t kc = 0; kc < t.dim; ++kc) {
        const Rational q = k.lambda3 * t.two_eig[kc] / 2;
        const CasimirLine* ln = line_for(lines, q);
        out << kc << ',' << csv_escape(t.two_eig[kc].to_string()) << ',';
        if (ln)
            out << ln->eps_ab << ',' << csv_escape(ln->mu_ab.to_string()) << ','
                << csv_escape(ln->q_ab.to_string());
        else
            out << ",,";
        out << ',' << t.phase_row[kc];
        if (approx) out << ',' << t.two_eig[kc].approx();
        out << "\n";
    }
    out << "\n";

    out << "n";
    for (std::size_t kc = 0; kc < t.dim; ++kc) out << ",squared_k" << kc;
    out << "\n";
    for (std::size_t n = 0; n < t.dim; ++n) {
        out << n;
        for (std::size_t kc = 0; kc < t.dim; ++kc)
            out << ',' << csv_escape(t.squared[n][kc].to_string());
        out << "\n";
    }
    out << "\n";

    out << "n";
    for (std::size_t kc = 0; kc < t.dim; ++kc) out << ",sign_k" << kc;
    out << "\n";
    for (std::size_t n = 0; n < t.dim; ++n) {
        out << n;
        for (std::size_t kc = 0; kc < t.dim; ++kc) out << ',' << t.sign[n][kc];
        out << "\n";
    }

    try {
        const HahnParams hp = cg_parameter_map(cp);
        out << "\nalpha,beta,N\n"
            << csv_escape(hp.alpha.to_string()) << ',' << csv_escape(hp.beta.to_string()) << ','
            << hp.N << "\n";
    } catch (const RegimeError&) {
    }
    return out.str();
}

std::string dual_rep_json(const DualRep& d, const std::vector<BlockFinding>& findings) {
    const std::size_t dim = d.K2.dim();
    const std::size_t nblocks = (dim + 1) / 2;

    ordered_json j;
    j["schema"] = 1;
    j["alpha"] = rat(d.hahn.alpha);
    j["beta"] = rat(d.hahn.beta);
    j["N"] = d.hahn.N;
    j["params"] = rat_row(d.params.values);
    j["lambda"] = rat_row(d.spectrum_lambda);

    ordered_json blocks;
    ordered_json lam = ordered_json::array();
    ordered_json gam = ordered_json::array();
    ordered_json cb = ordered_json::array();
    ordered_json ub = ordered_json::array();
    ordered_json db = ordered_json::array();
    for (std::size_t b = 0; b < nblocks; ++b) {
        const std::vector<std::size_t> rb = block_rows(b, dim);
        ordered_json le;
        le["p"] = b;
        ordered_json diag = ordered_json::array();
        for (std::size_t i : rb) diag.push_back(rat(d.K2(i, i)));
        le["entries"] = std::move(diag);
        lam.push_back(std::move(le));

        ordered_json ge;
        ge["p"] = b;
        ge["entries"] = submatrix_json(d.P, rb, rb);
        gam.push_back(std::move(ge));

        ordered_json ce;
        ce["p"] = b;
        ce["entries"] = submatrix_json(d.K1, rb, rb);
        cb.push_back(std::move(ce));

        if (b > 0) {
            ordered_json ue;
            ue["p"] = b;
            ue["entries"] = submatrix_json(d.K1, block_rows(b - 1, dim), rb);
            ub.push_back(std::move(ue));
        }
        if (b + 1 < nblocks) {
            ordered_json de;
            de["p"] = b;
            de["entries"] = submatrix_json(d.K1, block_rows(b + 1, dim), rb);
            db.push_back(std::move(de));
        }
    }
    blocks["Lambda"] = std::move(lam);
    blocks["Gamma"] = std::move(gam);
    blocks["C"] = std::move(cb);
    blocks["U"] = std::move(ub);
    blocks["D"] = std::move(db);
    j["blocks"] = std::move(blocks);

    ordered_json fnd = ordered_json::array();
    for (const auto& f : findings) {
        ordered_json e;
        e["id"] = f.id;
        e["where"] = f.where;
        e["printed"] = rat(f.printed);
        e["shipped"] = rat(f.shipped);
        e["explained"] = f.explained;
        fnd.push_back(std::move(e));
    }
    j["findings"] = std::move(fnd);
    return finish(j);
}

} // namespace mhahn
