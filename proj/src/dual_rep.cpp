#include "mhahn/dual_rep.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mhahn/errors.hpp"

namespace mhahn {

namespace {

void check_gauge(const HahnParams& p, const FreeParams& fp) {
    if (fp.values.size() != static_cast<std::size_t>(p.N) + 1)
        throw ZeroParameter("need one free parameter per basis index");
}

// Unique solution of the P relations on the half grid: the anticommutator
// with K2 forces support on the pairs lambda_i + lambda_j = -1 and pins the
// diagonal to -2 nu / (2 lambda + 1); P^2 = I then pins the product of the
// two off-diagonal entries of each pair, and the gauge splits it.
RMatrix build_pairing(const HahnParams& p, const std::vector<Rational>& lam,
                      const std::vector<Rational>& th) {
    const StructureConstants sc = structure_constants(p);
    const std::size_t n = lam.size();
    const long N = p.N;
    RMatrix P(n);
    for (std::size_t s = 0; s + 1 < n; s += 2) {
        const long ss = static_cast<long>(s);
        const Rational dd = -2 * sc.nu / (2 * lam[s] + 1);
        const Rational f =
            p.even() ? 2 * (Rational(N + ss + 2) - p.alpha - p.beta) * th[s + 1] /
                           ((Rational(2 * ss + 2) - p.alpha - p.beta) * th[s])
                     : 2 * (Rational(ss + 1) + p.beta) * th[s + 1] /
                           ((Rational(2 * ss + 2) + p.alpha + p.beta) * th[s]);
        if (f.is_zero()) throw InconsistentSystem("degenerate pairing entry");
        P(s, s) = dd;
        P(s + 1, s + 1) = -dd;
        P(s, s + 1) = f;
        P(s + 1, s) = (1 - dd * dd) / f;
    }
    if (n % 2 == 1) P(n - 1, n - 1) = 1;
    return P;
}

RMatrix printed_K1_odd(const HahnParams& p, const std::vector<Rational>& th) {
    const long N = p.N;
    const Rational al = p.alpha, be = p.beta, ab = al + be;
    RMatrix K(static_cast<std::size_t>(N) + 1);
    for (long b = 0; 2 * b + 1 <= N; ++b) {
        const std::size_t r = static_cast<std::size_t>(2 * b);
        const Rational D0 = Rational(4 * b) + ab;
        const Rational D2 = Rational(4 * b + 2) + ab;
        const Rational D4 = Rational(4 * b + 4) + ab;
        Rational c11 = Rational(2 * b) +
                       Rational((2 * b + 1) * (N - 2 * b)) * (Rational(2 * b + 1) + al) / D2;
        // the b = 0 term carries a factor 2b and drops out before D0 = ab
        // can vanish; same cancellation in the off-diagonal entries
        if (b > 0)
            c11 -= Rational(2 * b * (N + 1 - 2 * b)) * (Rational(2 * b) + al) / D0;
        const Rational lead = (b == 0) ? Rational(1) : ab / D0;
        const Rational scal = Rational(2 * N + 2) + ab;
        K(r, r) = c11;
        K(r, r + 1) = -(Rational(2 * b + 1) + be) * scal * lead * th[r + 1] / (D2 * D4 * th[r]);
        K(r + 1, r) = -(Rational(2 * b + 1) + al) * scal * lead * th[r] / (D2 * D4 * th[r + 1]);
        K(r + 1, r + 1) =
            Rational(2 * b + 1) -
            Rational((2 * b + 1) * (N - 2 * b)) * (Rational(2 * b + 1) + al) / D2 +
            Rational((2 * b + 2) * (N - 2 * b - 1)) * (Rational(2 * b + 2) + al) / D4;
    }
    for (long b = 1; 2 * b + 1 <= N; ++b) {
        const std::size_t r = static_cast<std::size_t>(2 * b);
        const Rational Dm2 = Rational(4 * b - 2) + ab;
        const Rational D0 = Rational(4 * b) + ab;
        const Rational D2 = Rational(4 * b + 2) + ab;
        const Rational scal = Rational(N + 1 + 2 * b) + ab;
        K(r - 2, r) = (Rational(2 * b - 1) + be) * scal * th[r] / (Dm2 * D0 * th[r - 2]);
        K(r - 1, r) = 2 * (al - be) * scal * th[r] / (Dm2 * D0 * D2 * th[r - 1]);
        K(r - 1, r + 1) = (Rational(2 * b + 1) + be) * scal * th[r + 1] / (D0 * D2 * th[r - 1]);
    }
    for (long b = 0; 2 * b + 3 <= N; ++b) {
        const std::size_t r = static_cast<std::size_t>(2 * b);
        const Rational D2 = Rational(4 * b + 2) + ab;
        const Rational D4 = Rational(4 * b + 4) + ab;
        const Rational D6 = Rational(4 * b + 6) + ab;
        const Rational lead =
            Rational((2 * b + 2) * (N - 2 * b - 1)) * (Rational(2 * b + 2) + ab);
        K(r + 2, r) = lead * (Rational(2 * b + 1) + al) * th[r] / (D2 * D4 * th[r + 2]);
        K(r + 2, r + 1) = 2 * lead * (al - be) * th[r + 1] / (D2 * D4 * D6 * th[r + 2]);
        K(r + 3, r + 1) = lead * (Rational(2 * b + 3) + al) * th[r + 1] / (D4 * D6 * th[r + 3]);
    }
    return K;
}

RMatrix printed_K1_even(const HahnParams& p, const std::vector<Rational>& th) {
    const long N = p.N;
    const Rational al = p.alpha, be = p.beta, ab = al + be;
    RMatrix K(static_cast<std::size_t>(N) + 1);
    for (long b = 0; 2 * b <= N; ++b) {
        const std::size_t r = static_cast<std::size_t>(2 * b);
        const Rational E0 = Rational(4 * b) - ab;
        const Rational E2 = Rational(4 * b + 2) - ab;
        const Rational E4 = Rational(4 * b + 4) - ab;
        K(r, r) = Rational(2 * b) +
                  Rational((N - 2 * b) * (2 * b + 1)) * (Rational(2 * b + 1) - al) / E2 -
                  Rational(2 * b * (N + 1 - 2 * b)) * (Rational(2 * b) - al) / E0;
        if (2 * b == N) break;  // trailing unpaired eigenvalue
        const Rational diff2 = al * al - be * be;
        K(r, r + 1) = (Rational(N + 2 * b + 2) - ab) * diff2 * th[r + 1] / (E0 * E2 * E4 * th[r]);
        K(r + 1, r) = Rational(2 * b - N) * diff2 * th[r] / (E0 * E2 * E4 * th[r + 1]);
        K(r + 1, r + 1) = Rational(2 * b + 1) -
                          Rational((N - 2 * b) * (2 * b + 1)) * (Rational(2 * b + 1) - al) / E2 +
                          Rational((2 * b + 2) * (N - 2 * b - 1)) * (Rational(2 * b + 2) - al) / E4;
    }
    for (long b = 1; 2 * b <= N; ++b) {
        const std::size_t r = static_cast<std::size_t>(2 * b);
        const Rational Em2 = Rational(4 * b - 2) - ab;
        const Rational E0 = Rational(4 * b) - ab;
        const Rational E2 = Rational(4 * b + 2) - ab;
        const Rational lead = Rational(2 * b * (N + 2 - 2 * b)) * (Rational(2 * b) - ab);
        K(r - 2, r) = lead * (Rational(2 * b + N) - ab) * th[r] / (Em2 * E0 * th[r - 2]);
        // at the edge block the factor (2N+2-ab) coincides with E2 and cancels
        const Rational ru = (2 * b == N) ? Rational(1) : (Rational(2 * N + 2) - ab) / E2;
        K(r - 1, r) = -2 * lead * ru * th[r] / (Em2 * E0 * th[r - 1]);
        if (2 * b < N)
            K(r - 1, r + 1) =
                lead * (Rational(N + 2 * b + 2) - ab) * th[r + 1] / (E0 * E2 * th[r - 1]);
    }
    for (long b = 0; 2 * b + 2 <= N; ++b) {
        const std::size_t r = static_cast<std::size_t>(2 * b);
        const Rational E2 = Rational(4 * b + 2) - ab;
        const Rational E4 = Rational(4 * b + 4) - ab;
        const Rational E6 = Rational(4 * b + 6) - ab;
        const Rational lead = (Rational(2 * b + 2) - al) * (Rational(2 * b + 2) - be);
        K(r + 2, r) = lead * th[r] / (E2 * E4 * th[r + 2]);
        // same coincidence (2N+2-ab) = E6 at the edge block
        const Rational rd = (2 * b + 2 == N) ? Rational(1) : (Rational(2 * N + 2) - ab) / E6;
        K(r + 2, r + 1) = 2 * lead * rd * th[r + 1] / (Rational(N - 2 * b) * E2 * E4 * th[r + 2]);
        if (2 * b + 3 <= N)
            K(r + 3, r + 1) = Rational(N - 2 * b - 2) * lead * th[r + 1] /
                              (Rational(N - 2 * b) * E4 * E6 * th[r + 3]);
    }
    return K;
}

DualRep derive_impl(const HahnParams& p, const FreeParams& fp) {
    const std::vector<Rational> lam = dual_spectrum(p);
    const std::size_t n = lam.size();
    const StructureConstants sc = structure_constants(p);
    const RMatrix P = build_pairing(p, lam, fp.values);
    RMatrix K2 = RMatrix::diagonal(lam);
    const std::size_t nb = (n + 1) / 2;
    const auto bsize = [n](std::size_t b) {
        return (2 * b + 2 <= n) ? std::size_t{2} : std::size_t{1};
    };

    // Stage one: the K3,K2 bracket relation, one row at a time. Restricted
    // to row i and the columns of block J it is a small linear system in
    // X[i][2J..]: unique on the diagonal block, a single direction on the
    // adjacent blocks, only zero farther out.
    RMatrix C(n);
    std::vector<std::array<std::vector<Rational>, 2>> dir(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t I = i / 2;
        for (std::size_t J = 0; J < nb; ++J) {
            const std::size_t s = 2 * J, z = bsize(J);
            std::vector<std::vector<Rational>> M(z, std::vector<Rational>(z));
            std::vector<Rational> rhs(z);
            for (std::size_t a = 0; a < z; ++a) {
                const std::size_t j = s + a;
                const Rational gap = lam[j] - lam[i];
                M[a][a] += gap * gap - 4;
                for (std::size_t c = 0; c < z; ++c) {
                    const std::size_t k = s + c;
                    M[a][c] -= (4 * sc.nu - 2 * sc.nu * (lam[k] - lam[i])) * P(k, j);
                }
                rhs[a] = sc.sigma * P(i, j);
                if (i == j) rhs[a] += sc.rho;
            }
            if (J == I) {
                const LinearSolveResult res = solve_linear(M, rhs);
                if (!res.consistent || !res.kernel.empty())
                    throw InconsistentSystem("bracket relation leaves a diagonal block unpinned");
                for (std::size_t a = 0; a < z; ++a) C(i, s + a) = res.particular[a];
            } else if (J + 1 == I || I + 1 == J) {
                std::vector<std::vector<Rational>> kern = kernel_basis(M);
                if (kern.size() != 1)
                    throw InconsistentSystem("bracket relation does not leave a single direction");
                dir[i][J + 1 == I ? 0 : 1] = std::move(kern[0]);
            } else if (!kernel_basis(M).empty()) {
                throw InconsistentSystem("bracket relation admits entries beyond the band");
            }
        }
    }

    // Stage two: commuting with P ties the rows of each adjacent block
    // together, leaving exactly one overall scale per block.
    const auto direction_block = [&](std::size_t I, std::size_t J) {
        const std::size_t r = bsize(I), z = bsize(J);
        const std::size_t slot = (J + 1 == I) ? 0 : 1;
        std::vector<std::vector<Rational>> E;
        E.reserve(r * z);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t bcol = 0; bcol < z; ++bcol) {
                std::vector<Rational> row(r);
                for (std::size_t t = 0; t < r; ++t)
                    row[t] += P(2 * I + a, 2 * I + t) * dir[2 * I + t][slot][bcol];
                for (std::size_t c = 0; c < z; ++c)
                    row[a] -= dir[2 * I + a][slot][c] * P(2 * J + c, 2 * J + bcol);
                E.push_back(std::move(row));
            }
        std::vector<std::vector<Rational>> kern = kernel_basis(E);
        if (kern.size() != 1)
            throw InconsistentSystem("P does not pin the rows of an adjacent block");
        RMatrix B(n);
        Rational piv;
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t c = 0; c < z; ++c) {
                B(2 * I + a, 2 * J + c) = kern[0][a] * dir[2 * I + a][slot][c];
                if (piv.is_zero()) piv = B(2 * I + a, 2 * J + c);
            }
        if (piv.is_zero()) throw InconsistentSystem("adjacent block collapsed to zero");
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t c = 0; c < z; ++c) B(2 * I + a, 2 * J + c) /= piv;
        return B;
    };
    std::vector<RMatrix> U(nb, RMatrix(n)), D(nb, RMatrix(n));
    for (std::size_t b = 1; b < nb; ++b) U[b] = direction_block(b - 1, b);
    for (std::size_t b = 0; b + 2 <= nb; ++b) D[b] = direction_block(b + 1, b);

    // Stage three: the K1,K3 bracket must return K2 + nu P + 1/2. With
    // K1 = C + sum_b (u_b U_b + d_{b-1} D_{b-1}) its diagonal blocks are
    // affine in the interface products q_b = u_b d_{b-1}: the up-then-down
    // and down-then-up paths through interface b are the only off-diagonal
    // products that land back on the diagonal.
    const RMatrix target = K2 + sc.nu * P + RMatrix::scalar(n, Rational(1, 2));
    const RMatrix base = commutator(C, commutator(C, K2)) - target;
    std::vector<RMatrix> H(nb, RMatrix(n));
    for (std::size_t b = 1; b < nb; ++b) {
        const RMatrix A = U[b] + D[b - 1];
        H[b] = commutator(A, commutator(A, K2));
    }
    std::vector<Rational> q(nb);
    if (nb > 1) {
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i / 2 != j / 2) continue;
                std::vector<Rational> row(nb - 1);
                for (std::size_t b = 1; b < nb; ++b) row[b - 1] = H[b](i, j);
                rows.push_back(std::move(row));
                rhs.push_back(-base(i, j));
            }
        const LinearSolveResult res = solve_linear(rows, rhs);
        if (!res.consistent || !res.kernel.empty())
            throw InconsistentSystem("interface products are not pinned");
        for (std::size_t b = 1; b < nb; ++b) {
            q[b] = res.particular[b - 1];
            if (q[b].is_zero()) throw InconsistentSystem("an interface product vanishes");
        }
    }
    RMatrix K1 = C;
    for (std::size_t b = 1; b < nb; ++b) K1 += U[b] + q[b] * D[b - 1];

    // The free parameters act as one scale per pairing block on top of the
    // gauge already inside P.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!K1(i, j).is_zero())
                K1(i, j) *= fp.values[2 * (j / 2)] / fp.values[2 * (i / 2)];

    return DualRep{p, fp, std::move(K1), std::move(K2), P, lam};
}

}  // namespace

FreeParams::FreeParams(std::vector<Rational> v) : values(std::move(v)) {
    for (const Rational& r : values)
        if (r.is_zero()) throw ZeroParameter("free parameters must be nonzero");
}

FreeParams FreeParams::ones(unsigned N) {
    return FreeParams(std::vector<Rational>(static_cast<std::size_t>(N) + 1, Rational(1)));
}

std::vector<Rational> dual_spectrum(const HahnParams& p) {
    std::vector<Rational> lam = grid(p);
    for (Rational& x : lam) x /= 2;
    return lam;
}

DualRep build_dual_rep_printed(const HahnParams& p, const FreeParams& fp) {
    check_gauge(p, fp);
    std::vector<Rational> lam = dual_spectrum(p);
    RMatrix P = build_pairing(p, lam, fp.values);
    RMatrix K2 = RMatrix::diagonal(lam);
    RMatrix K1 = p.even() ? printed_K1_even(p, fp.values) : printed_K1_odd(p, fp.values);
    return DualRep{p, fp, std::move(K1), std::move(K2), std::move(P), std::move(lam)};
}

DualRep derive_dual_rep(const HahnParams& p, const FreeParams& fp) {
    check_gauge(p, fp);
    DualRep d = derive_impl(p, fp);
    const Report rep = verify_dual_rep(d);
    if (!rep.pass())
        throw InconsistentSystem("derived representation fails: " + rep.first_failure()->name);
    return d;
}

Report verify_dual_rep(const DualRep& d) {
    Report rep;
    const std::size_t n = d.K1.dim();
    const std::vector<Rational> lam = dual_spectrum(d.hahn);
    rep.add("K2 carries half the spectral grid in grid order",
            d.K2 == RMatrix::diagonal(lam) && d.spectrum_lambda == lam);

    const StructureConstants sc = structure_constants(d.hahn);
    bool paired = true;
    for (std::size_t s = 0; s + 1 < n; s += 2)
        paired = paired && lam[s] + lam[s + 1] == Rational(-1);
    if (n % 2 == 1) paired = paired && 2 * lam[n - 1] + 1 == -2 * sc.nu;
    rep.add("grid pairs off against the involution blocks", paired);

    bool support = true;
    for (std::size_t i = 0; i < n && support; ++i)
        for (std::size_t j = 0; j < n && support; ++j)
            if (i / 2 != j / 2 && !d.P(i, j).is_zero()) support = false;
    rep.add("P supported on the pairing blocks", support);

    GeneratorSet g;
    g.K1 = d.K1;
    g.K2 = d.K2;
    g.K3 = commutator(d.K1, d.K2);
    g.P = d.P;
    g.constants = sc;
    rep.merge(verify_relations(g));

    const auto qs = casimir_H(g).as_scalar();
    rep.add("Casimir is the expected scalar",
            qs.has_value() && *qs == casimir_value(sc));

    rep.add("K1 bandwidth at most two", d.K1.bandwidth() <= 2);
    std::vector<Rational> roots(n);
    for (std::size_t i = 0; i < n; ++i) roots[i] = Rational(static_cast<long>(i));
    rep.add("K1 spectrum is 0..N", spectrum_equals(d.K1, roots));
    rep.add("K1 trace is N(N+1)/2",
            d.K1.trace() == Rational(static_cast<long>(n - 1)) * Rational(static_cast<long>(n)) / 2);
    return rep;
}

RMatrix similarity_to_primal(const HahnParams& p, const DualRep& d) {
    const GeneratorSet g = build_realization(p);
    const RMatrix S = transition_matrix(p).S;
    const std::size_t n = d.K1.dim();
    if (g.dim() != n) throw NoIntertwiner("dimension mismatch");
    const RMatrix Sinv = S.inverse();
    const RMatrix K1c = Sinv * (g.K1 * S);
    const RMatrix Pc = Sinv * (g.P * S);

    // A diagonal gauge is all that can remain between the conjugated primal
    // generators and the dual ones: columns tie together inside a pairing
    // block through P and across adjacent blocks through K1.
    std::vector<Rational> scale(n);
    scale[0] = 1;
    const std::size_t nb = (n + 1) / 2;
    for (std::size_t b = 0; b < nb; ++b) {
        const std::size_t j = 2 * b;
        if (b > 0) {
            bool found = false;
            for (std::size_t i = 2 * (b - 1); i < 2 * b && !found; ++i)
                if (!K1c(i, j).is_zero() && !d.K1(i, j).is_zero()) {
                    scale[j] = scale[i] * d.K1(i, j) / K1c(i, j);
                    found = true;
                }
            if (!found) throw NoIntertwiner("no anchor entry between adjacent blocks");
        }
        if (j + 1 < n) {
            if (Pc(j, j + 1).is_zero() || d.P(j, j + 1).is_zero())
                throw NoIntertwiner("vanishing pairing entry");
            scale[j + 1] = scale[j] * d.P(j, j + 1) / Pc(j, j + 1);
        }
    }
    const RMatrix M = S * RMatrix::diagonal(scale);
    if (!(g.K1 * M == M * d.K1) || !(g.K2 * M == M * d.K2) || !(g.P * M == M * d.P))
        throw NoIntertwiner("candidate fails to intertwine the generators");
    return M;
}

std::size_t intertwiner_dimension(const HahnParams& p, const DualRep& d) {
    const GeneratorSet g = build_realization(p);
    const std::size_t n = g.dim();
    if (d.K1.dim() != n) return 0;
    const std::array<const RMatrix*, 3> A{&g.K1, &g.K2, &g.P};
    const std::array<const RMatrix*, 3> B{&d.K1, &d.K2, &d.P};
    std::vector<std::vector<Rational>> rows;
    rows.reserve(3 * n * n);
    for (std::size_t t = 0; t < 3; ++t)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Rational> row(n * n);
                for (std::size_t k = 0; k < n; ++k) {
                    row[k * n + j] += (*A[t])(i, k);
                    row[i * n + k] -= (*B[t])(k, j);
                }
                rows.push_back(std::move(row));
            }
    return kernel_basis(rows).size();
}

std::vector<BlockFinding> compare_printed_blocks(const HahnParams& p, const FreeParams& fp) {
    check_gauge(p, fp);
    std::vector<BlockFinding> out;
    const DualRep printed = build_dual_rep_printed(p, fp);
    const std::vector<Rational>& th = fp.values;
    const Rational al = p.alpha, be = p.beta, ab = al + be;
    const long N = p.N;
    const std::size_t n = static_cast<std::size_t>(N) + 1, nb = (n + 1) / 2;
    const auto push = [&out](const char* id, std::string where, const Rational& pr,
                             const Rational& sh) {
        if (pr != sh) out.push_back({id, std::move(where), pr, sh, true});
    };

    if (!p.even()) {
        for (long b = 0; 2 * b + 1 <= N; ++b) {
            const std::size_t r = static_cast<std::size_t>(2 * b);
            const Rational D2 = Rational(4 * b + 2) + ab;
            push("odd-gamma-lower-gauge", "Gamma_" + std::to_string(b) + "(2,1)",
                 2 * (Rational(2 * b + 1) + al) * th[r + 1] / (D2 * th[r]),
                 printed.P(r + 1, r));
        }
        for (long b = 1; 2 * b + 1 <= N; ++b) {
            const std::size_t r = static_cast<std::size_t>(2 * b);
            const Rational Dm2 = Rational(4 * b - 2) + ab;
            const Rational D0 = Rational(4 * b) + ab;
            const Rational D2 = Rational(4 * b + 2) + ab;
            const Rational D4 = Rational(4 * b + 4) + ab;
            const Rational scal = Rational(N + 1 + 2 * b) + ab;
            push("odd-u-lower-left", "U_" + std::to_string(b) + "(2,1)",
                 2 * (al - be) * scal * th[r] / (Dm2 * D0 * D4 * th[r + 1]),
                 printed.K1(r - 1, r));
            push("odd-u-lower-right", "U_" + std::to_string(b) + "(2,2)",
                 (Rational(2 * b + 1) + ab) * scal * th[r + 1] / (D0 * D2 * th[r - 1]),
                 printed.K1(r - 1, r + 1));
        }
        for (long b = 0; 2 * b + 3 <= N; ++b) {
            const std::size_t r = static_cast<std::size_t>(2 * b);
            const Rational sh = printed.K1(r + 2, r);
            push("odd-d-upper-left-variant", "D_" + std::to_string(b) + "(1,1)",
                 sh * Rational(N + 1 - 2 * b) / Rational(N - 2 * b - 1), sh);
        }
    } else {
        for (long b = 0; 2 * b + 1 <= N; ++b) {
            const std::size_t r = static_cast<std::size_t>(2 * b);
            push("even-gamma-upper-print", "Gamma_" + std::to_string(b) + "(1,2)",
                 2 * (Rational(N + 2 * b + 2) - ab) * th[r + 1] /
                     ((Rational(4 * b + 2) + ab) * th[r]),
                 printed.P(r, r + 1));
            const Rational E0 = Rational(4 * b) - ab;
            const Rational E2 = Rational(4 * b + 2) - ab;
            const Rational E4 = Rational(4 * b + 4) - ab;
            push("even-c-lower-sign", "C_" + std::to_string(b) + "(2,1)",
                 Rational(N - 2 * b) * (al * al - be * be) * th[r] / (E0 * E2 * E4 * th[r + 1]),
                 printed.K1(r + 1, r));
        }
    }

    // Independent derivation. Only the one free scale per pairing block can
    // differ, so anchor each block on its first shared nonzero K1 entry and
    // compare everything else exactly.
    const DualRep derived = derive_dual_rep(p, fp);
    std::vector<Rational> c(nb, Rational(1));
    bool aligned = true;
    for (std::size_t b = 1; b < nb && aligned; ++b) {
        bool found = false;
        for (std::size_t i = 2 * (b - 1); i < 2 * b && !found; ++i)
            for (std::size_t j = 2 * b; j < std::min(n, 2 * b + 2) && !found; ++j)
                if (!printed.K1(i, j).is_zero() && !derived.K1(i, j).is_zero()) {
                    c[b] = c[b - 1] * printed.K1(i, j) / derived.K1(i, j);
                    found = true;
                }
        if (!found) {
            out.push_back({"derived-mismatch", "no shared anchor into block " + std::to_string(b),
                           Rational(0), Rational(0), false});
            aligned = false;
        }
    }
    if (aligned) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Rational want = derived.K1(i, j) * c[j / 2] / c[i / 2];
                if (want != printed.K1(i, j))
                    out.push_back({"derived-mismatch",
                                   "K1(" + std::to_string(i) + "," + std::to_string(j) + ")",
                                   printed.K1(i, j), want, false});
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (derived.P(i, j) != printed.P(i, j))
                    out.push_back({"derived-mismatch",
                                   "P(" + std::to_string(i) + "," + std::to_string(j) + ")",
                                   printed.P(i, j), derived.P(i, j), false});
    }
    return out;
}

}  // namespace mhahn
