#include "gkfol/chart.hpp"

#include <algorithm>
#include <numeric>

namespace gkfol {

namespace {

// x_k = u^{sub[k-1]} describing the inverse chart map (chart coords -> base).
// Chart 1:  x_1 = 1/u_1,  x_k = u_{n-k+2}/u_1  (k >= 2).
// Chart i:  x_k = u_k/u_n (k < i),  x_i = 1/u_n,  x_k = u_{k-1}/u_n (k > i).
std::vector<Exp> chart_substitution(int n, int chart) {
    std::vector<Exp> sub(static_cast<size_t>(n), Exp(static_cast<size_t>(n), 0));
    if (chart == 1) {
        sub[0][0] = -1;
        for (int k = 2; k <= n; ++k) {
            sub[static_cast<size_t>(k) - 1][static_cast<size_t>(n - k + 2) - 1] = 1;
            sub[static_cast<size_t>(k) - 1][0] -= 1;
        }
    } else {
        for (int k = 1; k <= n; ++k) {
            if (k < chart) {
                sub[static_cast<size_t>(k) - 1][static_cast<size_t>(k) - 1] = 1;
            } else if (k > chart) {
                sub[static_cast<size_t>(k) - 1][static_cast<size_t>(k) - 2] = 1;
            }
            sub[static_cast<size_t>(k) - 1][static_cast<size_t>(n) - 1] -= 1;
        }
    }
    return sub;
}

// Pull an (n-2)-form back through the monomial map x_k = u^{sub[k-1]}.
// d(u^A) = sum_j A_j u^{A - e_j} du_j, so each dx wedge expands into a signed
// sum over injective index choices.
AltForm pullback_form(const AltForm& omega, const std::vector<Exp>& sub) {
    const int n = omega.nvars();
    const int k = omega.grade();
    AltForm out(n, k);
    for (const auto& [tuple, c] : omega.coeffs()) {
        Poly csub = c.substitute_monomials(sub, n);
        if (csub.is_zero()) continue;
        // Expand the wedge product of the differentials of the k monomials.
        std::vector<int> choice(static_cast<size_t>(k), -1);
        std::vector<bool> used(static_cast<size_t>(n), false);
        // Depth-first over which du_j each slot contributes.
        struct Rec {
            const std::vector<Exp>& sub;
            const std::vector<int>& tuple;
            int n, k;
            AltForm& out;
            const Poly& csub;
            std::vector<int>& choice;
            std::vector<bool>& used;

            void go(int pos, Exp acc, int sign) {
                if (pos == k) {
                    // Sort chosen indices, tracking the permutation sign.
                    std::vector<int> idx = choice;
                    int s = sign;
                    for (size_t a = 0; a < idx.size(); ++a)
                        for (size_t b = a + 1; b < idx.size(); ++b)
                            if (idx[a] > idx[b]) {
                                std::swap(idx[a], idx[b]);
                                s = -s;
                            }
                    out.add(idx, csub.mul_monomial(acc, s));
                    return;
                }
                const Exp& a = sub[static_cast<size_t>(tuple[static_cast<size_t>(pos)])];
                for (int j = 0; j < n; ++j) {
                    if (a[static_cast<size_t>(j)] == 0 || used[static_cast<size_t>(j)]) continue;
                    Exp nacc = acc;
                    for (int t = 0; t < n; ++t) nacc[static_cast<size_t>(t)] += a[static_cast<size_t>(t)];
                    nacc[static_cast<size_t>(j)] -= 1;
                    used[static_cast<size_t>(j)] = true;
                    choice[static_cast<size_t>(pos)] = j;
                    go(pos + 1, std::move(nacc), sign * a[static_cast<size_t>(j)]);
                    used[static_cast<size_t>(j)] = false;
                }
            }
        } rec{sub, tuple, n, k, out, csub, choice, used};
        rec.go(0, Exp(static_cast<size_t>(n), 0), 1);
    }
    return out;
}

} // namespace

std::vector<Int> chart_weights(const ParamSet& ps, int chart) {
    const int n = ps.n();
    if (chart < 1 || chart > n) throw ChartOutOfRange();
    if (chart == 1) return ps.p_bar;
    std::vector<Int> rho(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        if (k < chart)
            rho[static_cast<size_t>(k) - 1] = ps.p(k) - ps.p(chart);
        else if (k < n)
            rho[static_cast<size_t>(k) - 1] = ps.p(k + 1) - ps.p(chart);
        else
            rho[static_cast<size_t>(n) - 1] = -ps.p(chart);
    }
    return rho;
}

ChartFrame chart_transform(const ParamSet& ps, const VectorField& y, int chart) {
    const int n = ps.n();
    if (chart < 1 || chart > n) throw ChartOutOfRange();
    if (y.nvars() != n) throw DimensionMismatch();

    ChartFrame frame;
    frame.chart = chart;
    frame.rho = chart_weights(ps, chart);
    frame.s_i = VectorField::diagonal(frame.rho);
    frame.lambda_i = ps.lam(chart);
    frame.tau_i = ps.tauAt(chart);
    frame.omega_i = AltForm(n, n - 2);
    frame.y_i = VectorField(n);
    if (y.is_zero()) return frame;

    auto lam = quasi_weight(ps.weights.p, y);
    if (!lam || *lam != ps.lambda) throw NonQuasiHomogeneousInput();

    const VectorField s0 = VectorField::diagonal(ps.weights.p);
    AltForm omega = contract(s0, y);
    if (omega.is_zero()) return frame; // e.g. y proportional to S itself

    AltForm pulled = pullback_form(omega, chart_substitution(n, chart));
    AltForm cleared = pulled.cleared_denominator();

    // Minimal clearing can land on a monomial multiple of the chart form;
    // renormalize so the total weight equals tau_i, which pins down the form
    // satisfying the [S_i, Y_i] = lambda_i Y_i contract.
    Int w = 0;
    if (!cleared.weighted_degree(frame.rho, w)) throw NonQuasiHomogeneousInput();
    if (w != frame.tau_i) {
        const int clear_var = (chart == 1) ? 0 : n - 1;
        const Int rv = frame.rho[static_cast<size_t>(clear_var)];
        const Int diff = frame.tau_i - w;
        if (rv == 0 || diff % rv != 0 || diff / rv < 0) throw NonQuasiHomogeneousInput();
        Exp shift(static_cast<size_t>(n), 0);
        shift[static_cast<size_t>(clear_var)] = static_cast<int>(diff / rv);
        cleared = cleared.mul_monomial(shift);
    }

    frame.omega_i = cleared;
    frame.y_i = rot(cleared);
    return frame;
}

} // namespace gkfol
