#include "gkfol/gkcheck.hpp"

#include <algorithm>
#include <random>

#include "gkfol/linalg.hpp"
#include "gkfol/polygcd.hpp"

namespace gkfol {

const char* to_string(KupkaClass c) {
    switch (c) {
        case KupkaClass::Kupka: return "kupka";
        case KupkaClass::IsolatedInvertible: return "isolated-invertible";
        case KupkaClass::IsolatedNilpotentJacobian: return "isolated-nilpotent";
        case KupkaClass::NonIsolatedOrUnknown: return "non-isolated-or-unknown";
    }
    return "?";
}

IsolationResult is_isolated_at_origin(const VectorField& y, const ParamSet& ps, long step_budget) {
    IsolationResult res;
    if (ps.lambda <= 0) throw InvalidInput("origin test needs weight lambda > 0");
    if (y.is_zero()) {
        res.verdict = ZeroDimVerdict::PositiveDimensional;
        return res;
    }
    std::vector<Poly> gens;
    for (const auto& c : y.comps)
        if (!c.is_zero()) gens.push_back(c);
    StaircaseResult s = zero_dim_test(gens, step_budget);
    res.verdict = s.verdict;
    if (s.verdict != ZeroDimVerdict::Unknown) {
        res.evidence.staircase = s.leading_exponents;
        res.evidence.quotient_dim = s.quotient_dim;
    }
    return res;
}

KupkaStatus kupka_data(const ParamSet& ps, const VectorField& y, int chart, long step_budget) {
    if (chart < 2 || chart > ps.n()) throw ChartOutOfRange();
    ChartFrame frame = chart_transform(ps, y, chart);
    KupkaStatus st;
    st.chart = chart;
    const std::vector<mpq_class> origin(static_cast<size_t>(ps.n()), 0);
    st.value_at_origin = evaluate(frame.y_i, origin);
    st.jacobian = jacobian_at_zero(frame.y_i);
    bool nonzero = false;
    for (const auto& v : st.value_at_origin)
        if (v != 0) nonzero = true;
    if (nonzero) {
        st.classification = KupkaClass::Kupka;
        return st;
    }
    if (determinant(st.jacobian) != 0) {
        st.classification = KupkaClass::IsolatedInvertible;
        return st;
    }
    st.classification = KupkaClass::NonIsolatedOrUnknown;
    if (is_nilpotent(st.jacobian) && !frame.y_i.is_zero()) {
        // A global zero-dimensionality check is a sufficient (not necessary)
        // isolation witness at the chart origin.
        std::vector<Poly> gens;
        for (const auto& c : frame.y_i.comps)
            if (!c.is_zero()) gens.push_back(c);
        StaircaseResult s = zero_dim_test(gens, std::min<long>(step_budget, 50000));
        if (s.verdict == ZeroDimVerdict::ZeroDimensional)
            st.classification = KupkaClass::IsolatedNilpotentJacobian;
    }
    return st;
}

bool gamma_check(const ParamSet& ps, const VectorField& y) {
    if (y.is_zero()) throw ZeroField();
    const VectorField s = VectorField::diagonal(ps.weights.p);
    AltForm omega = contract(s, y);
    if (omega.max_coeff_degree() != static_cast<int>(ps.d) + 2) return false;
    std::vector<Poly> coeffs;
    for (const auto& [t, c] : omega.coeffs()) coeffs.push_back(c);
    return is_constant(poly_gcd_many(coeffs, ps.n()));
}

bool m1_integral(const std::vector<Int>& weights, Int lambda) {
    return milnor_number(weights, lambda).get_den() == 1;
}

namespace {

// The explicit witness available whenever lambda = p_n d and every slot
// x_{k-1}^d d/dx_k is admissible: the diagonal top part with entries -tau_1,
// tau_2, ..., tau_n plus the staircase of d-th powers.
std::optional<VectorField> anchor_witness(const ParamSet& ps) {
    const int n = ps.n();
    if (ps.lambda != ps.p(n) * ps.d) return std::nullopt;
    for (int k = 2; k <= n; ++k)
        if (ps.p(k) + ps.lambda != ps.p(k - 1) * ps.d) return std::nullopt;
    VectorField y(n);
    const int d = static_cast<int>(ps.d);
    for (int k = 1; k <= n; ++k) {
        Exp diag(static_cast<size_t>(n), 0);
        diag[static_cast<size_t>(k) - 1] = 1;
        diag[static_cast<size_t>(n) - 1] += d;
        const Int coef = (k == 1) ? -ps.tauAt(1) : ps.tauAt(k);
        y.comp(k).add_term(diag, mpq_class(coef));
        if (k >= 2) {
            Exp power(static_cast<size_t>(n), 0);
            power[static_cast<size_t>(k) - 2] = d;
            y.comp(k).add_term(power, 1);
        }
    }
    return y;
}

// n = 4 sparse template for the chain c_11, c_23, c_34 with p_1 | p_4 + lambda.
std::vector<VectorField> sparse_templates_n4_b1(const ParamSet& ps) {
    std::vector<VectorField> out;
    if (ps.n() != 4) return out;
    const Int d = ps.d;
    if (!(ps.p(1) + ps.lambda == ps.p(2) * d && ps.p(4) + ps.lambda == ps.p(3) * d &&
          ps.lambda == ps.p(4) * d))
        return out;
    if ((ps.p(4) + ps.lambda) % ps.p(1) != 0) return out;
    const Int l = (ps.p(4) + ps.lambda) / ps.p(1);
    if (l < 1) return out;
    for (Int b = 0; b <= d + 1; ++b) {
        const Int rest = ps.p(2) + ps.lambda - b * ps.p(3);
        if (rest < 0 || rest % ps.p(1) != 0) continue;
        const Int a = rest / ps.p(1);
        if (a + b > d + 1) continue;
        VectorField y(4);
        const int dd = static_cast<int>(d);
        auto term = [&](int comp, std::initializer_list<int> exps, Int coef) {
            Exp e(4, 0);
            int k = 0;
            for (int v : exps) e[static_cast<size_t>(k++)] = v;
            y.comp(comp).add_term(e, mpq_class(coef));
        };
        term(1, {1, 0, 0, dd}, -ps.tauAt(1));
        term(1, {0, dd, 0, 0}, 1);
        term(2, {0, 1, 0, dd}, ps.tauAt(2));
        term(2, {static_cast<int>(a), 0, static_cast<int>(b), 0}, 1);
        term(3, {0, 0, 1, dd}, ps.tauAt(3));
        term(4, {0, 0, 0, dd + 1}, ps.tauAt(4));
        term(4, {static_cast<int>(l), 0, 0, 0}, 1);
        term(4, {0, 0, dd, 0}, 1);
        out.push_back(std::move(y));
    }
    return out;
}

// n = 4 template for the chain lambda = p_2(d-1), c_23, c_34 with p_1 | lambda.
std::vector<VectorField> sparse_templates_n4_b2(const ParamSet& ps, uint64_t seed) {
    std::vector<VectorField> out;
    if (ps.n() != 4) return out;
    const Int d = ps.d;
    if (!(ps.lambda == ps.p(2) * (d - 1) && ps.p(4) + ps.lambda == ps.p(3) * d &&
          ps.lambda == ps.p(4) * d))
        return out;
    if (ps.lambda % ps.p(1) != 0) return out;
    const Int l = ps.lambda / ps.p(1) + 1;
    if (l < 2 || l > d) return out;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (int trial = 0; trial < 3; ++trial) {
        Int a, a1, b, b1, c, c1;
        if (trial == 0) {
            a = 1; a1 = 1; b = 2; b1 = 3; c = 5; c1 = 7;
        } else {
            auto draw = [&]() { return static_cast<Int>(rng() % 17) - 8; };
            a = draw(); a1 = draw(); b = draw(); b1 = draw(); c = draw(); c1 = draw();
            if (a == 0 || b1 == 0) continue;
        }
        const Int e = -(l * a + b + c);
        const Int e1 = -(a1 + d * b1 + c1);
        VectorField y(4);
        const int dd = static_cast<int>(d), li = static_cast<int>(l);
        auto term = [&](int comp, int e1v, int e2v, int e3v, int e4v, Int coef) {
            if (coef == 0) return;
            Exp ex{e1v, e2v, e3v, e4v};
            y.comp(comp).add_term(ex, mpq_class(coef));
        };
        term(1, 1, 0, 0, dd, -ps.tauAt(1));
        term(1, li, 0, 0, 0, a);
        term(1, 1, dd - 1, 0, 0, a1);
        term(2, 0, 1, 0, dd, ps.tauAt(2));
        term(2, li - 1, 1, 0, 0, b);
        term(2, 0, dd, 0, 0, b1);
        term(3, 0, 0, 1, dd, ps.tauAt(3));
        term(3, li - 1, 0, 1, 0, c);
        term(3, 0, dd - 1, 1, 0, c1);
        term(4, 0, 0, 0, dd + 1, ps.tauAt(4));
        term(4, li - 1, 0, 0, 1, e);
        term(4, 0, dd - 1, 0, 1, e1);
        term(4, 0, 0, dd, 0, 1);
        out.push_back(std::move(y));
    }
    return out;
}

struct CandidateCheck {
    bool ok = false;
    OriginEvidence origin;
    std::vector<KupkaStatus> charts;
    bool gamma = false;
    std::optional<int> exceptional;
    bool budget_hit = false;
};

CandidateCheck check_candidate(const ParamSet& ps, const VectorField& y, long step_budget) {
    CandidateCheck out;
    out.gamma = gamma_check(ps, y);
    if (!out.gamma) return out;
    for (int chart = 2; chart <= ps.n(); ++chart) {
        KupkaStatus st = kupka_data(ps, y, chart, step_budget);
        if (st.classification != KupkaClass::Kupka) {
            const bool allowed = ps.lambda == ps.p(chart) * (ps.d - 1) &&
                                 st.classification == KupkaClass::IsolatedInvertible;
            if (!allowed) {
                out.charts.push_back(std::move(st));
                return out;
            }
            out.exceptional = chart;
        }
        out.charts.push_back(std::move(st));
    }
    IsolationResult iso = is_isolated_at_origin(y, ps, step_budget);
    if (iso.verdict == ZeroDimVerdict::Unknown) {
        out.budget_hit = true;
        return out;
    }
    if (iso.verdict != ZeroDimVerdict::ZeroDimensional) return out;
    out.origin = iso.evidence;
    out.ok = true;
    return out;
}

} // namespace

CertifyOutcome certify_gk(const ParamSet& ps, const CertifySettings& cfg) {
    CertifyOutcome out;
    if (ps.lambda <= 0) {
        out.diagnostic = "lambda must be positive";
        return out;
    }
    if (!m1_integral(ps.weights.p, ps.lambda)) {
        out.diagnostic = "non-integer Milnor bound";
        return out;
    }
    const W0Basis basis = w0_basis(ps);
    if (basis.dim() == 0) {
        out.diagnostic = "empty rotational space";
        return out;
    }

    std::vector<VectorField> candidates;
    if (auto a = anchor_witness(ps)) candidates.push_back(std::move(*a));
    for (auto& t : sparse_templates_n4_b1(ps)) candidates.push_back(std::move(t));
    for (auto& t : sparse_templates_n4_b2(ps, cfg.seed)) candidates.push_back(std::move(t));
    Int bound = cfg.bound;
    for (int t = 0; t < cfg.attempts; ++t) {
        candidates.push_back(random_element(basis, bound, cfg.seed + static_cast<uint64_t>(t)));
        if (t % 4 == 3) bound *= 2;
    }

    bool budget_hit = false;
    for (const auto& y : candidates) {
        if (!satisfies_w0_constraints(ps, y)) continue;
        auto coords = basis.coords_of(y);
        if (!coords) continue;
        CandidateCheck chk = check_candidate(ps, y, cfg.step_budget);
        budget_hit = budget_hit || chk.budget_hit;
        if (!chk.ok) continue;
        GKCertificate cert;
        cert.ps = ps;
        cert.witness_coords = *coords;
        cert.witness = y;
        cert.origin = chk.origin;
        cert.chart_status = chk.charts;
        cert.gamma_ok = chk.gamma;
        cert.exceptional_chart = chk.exceptional;
        out.certificate = std::move(cert);
        return out;
    }
    out.diagnostic = budget_hit ? "step budget exhausted (unknown)" :
                                  "no witness found (inconclusive)";
    return out;
}

bool replay_certificate(const GKCertificate& cert, long step_budget, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const ParamSet ps = derive_params(cert.ps.weights, cert.ps.lambda, cert.ps.d);
    const W0Basis basis = w0_basis(ps);
    if (static_cast<int>(cert.witness_coords.size()) != basis.dim())
        return fail("witness coordinate count does not match the basis");
    const VectorField y = basis.field_from_coords(cert.witness_coords);
    if (!cert.witness.comps.empty() && !(y == cert.witness))
        return fail("stored witness field differs from its coordinates");
    if (!satisfies_w0_constraints(ps, y)) return fail("witness violates the membership constraints");
    if (!gamma_check(ps, y)) return fail("divisorial check failed");

    if (static_cast<int>(cert.chart_status.size()) != ps.n() - 1)
        return fail("chart status list has the wrong length");
    for (int chart = 2; chart <= ps.n(); ++chart) {
        KupkaStatus st = kupka_data(ps, y, chart, step_budget);
        const KupkaStatus& stored = cert.chart_status.at(static_cast<size_t>(chart) - 2);
        if (stored.chart != chart) return fail("chart order mismatch");
        if (st.classification != stored.classification) return fail("chart classification changed");
        if (st.value_at_origin != stored.value_at_origin) return fail("chart value changed");
        if (st.jacobian != stored.jacobian) return fail("chart jacobian changed");
        if (st.classification == KupkaClass::Kupka) {
            if (ps.tauAt(chart) == 0) return fail("Kupka chart with tau_i = 0");
        } else {
            if (!cert.exceptional_chart || *cert.exceptional_chart != chart)
                return fail("unexpected non-Kupka chart");
            if (ps.lambda != ps.p(chart) * (ps.d - 1))
                return fail("exceptional chart violates lambda = p_i (d-1)");
            if (st.classification != KupkaClass::IsolatedInvertible)
                return fail("exceptional chart is not isolated-invertible");
        }
    }
    IsolationResult iso = is_isolated_at_origin(y, ps, step_budget);
    if (iso.verdict != ZeroDimVerdict::ZeroDimensional)
        return fail("origin is not certified isolated");
    if (iso.evidence.quotient_dim != cert.origin.quotient_dim)
        return fail("staircase quotient dimension changed");
    if (iso.evidence.staircase != cert.origin.staircase) return fail("staircase changed");
    return true;
}

} // namespace gkfol
