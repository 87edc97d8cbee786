#include "gkfol/weights.hpp"

#include <algorithm>
#include <numeric>

namespace gkfol {

WeightVector normalize_weights(const std::vector<Int>& raw) {
    if (raw.size() < 3) throw TooFewWeights();
    for (Int v : raw)
        if (v <= 0) throw InvalidInput("weights must be positive");
    std::vector<Int> p = raw;
    std::sort(p.begin(), p.end(), std::greater<Int>());
    for (size_t k = 0; k + 1 < p.size(); ++k)
        if (p[k] == p[k + 1]) throw DuplicateWeights();
    Int g = 0;
    for (Int v : p) g = std::gcd(g, v);
    for (Int& v : p) v /= g;
    return WeightVector{p};
}

ParamSet derive_params(const WeightVector& w, Int lambda, Int d) {
    if (d < 1) throw InvalidInput("degree parameter d must be >= 1");
    ParamSet ps;
    ps.weights = w;
    ps.lambda = lambda;
    ps.d = d;
    const int n = w.n();
    ps.tau = lambda;
    for (Int v : w.p) ps.tau += v;
    ps.lambda_i.resize(static_cast<size_t>(n));
    ps.tau_i.resize(static_cast<size_t>(n));
    ps.p_bar.resize(static_cast<size_t>(n));
    ps.lambda_i[0] = w.at(1) * (d - 1) - lambda;
    ps.tau_i[0] = w.at(1) * (n + d) - ps.tau;
    for (int i = 2; i <= n; ++i) {
        ps.lambda_i[static_cast<size_t>(i) - 1] = lambda - w.at(i) * (d - 1);
        ps.tau_i[static_cast<size_t>(i) - 1] = ps.tau - w.at(i) * (n + d);
    }
    for (int j = 1; j <= n; ++j)
        ps.p_bar[static_cast<size_t>(j) - 1] = w.at(1) - w.at(n - j + 2);
    return ps;
}

bool check_condition(const ParamSet& ps, const ConditionId& c) {
    const int n = ps.n();
    if (c.i < 1 || c.i > n - 1 || c.j < 1 || c.j > n)
        throw InvalidInput("condition index out of range");
    const Int rhs = ps.p(c.i + 1) * ps.d;
    if (c.j <= c.i) return ps.p(c.j) + ps.lambda == rhs;
    return ps.p(c.j + 1) + ps.lambda == rhs; // p(n+1) = 0 convention
}

ParamSet bar_involution(const ParamSet& ps) {
    WeightVector bar{ps.p_bar};
    return derive_params(bar, ps.lam(1), ps.d);
}

mpq_class milnor_number(const std::vector<Int>& p, Int lambda) {
    for (Int v : p)
        if (v < 1) throw InvalidInput("milnor_number needs weights >= 1");
    mpz_class num = 1, den = 1;
    for (Int v : p) {
        num *= mpz_class(v + lambda);
        den *= mpz_class(v);
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace gkfol
