#ifndef GKFOL_WEIGHTS_HPP
#define GKFOL_WEIGHTS_HPP

#include <gmpxx.h>

#include <vector>

#include "gkfol/errors.hpp"

namespace gkfol {

using Int = long;

/// Strictly decreasing, gcd-reduced positive integer weights p_1 > ... > p_n >= 1.
/// Stored already normalized; operations never re-sort.
struct WeightVector {
    std::vector<Int> p;

    int n() const { return static_cast<int>(p.size()); }

    // 1-based access with the convention p_{n+1} = 0.
    Int at(int k) const { return k == n() + 1 ? 0 : p.at(static_cast<size_t>(k) - 1); }

    bool operator==(const WeightVector& o) const { return p == o.p; }
    bool operator<(const WeightVector& o) const { return p < o.p; }
};

/// All derived classification quantities of a family (weights, lambda, d):
/// tau, the per-chart weights lambda_i / tau_i, and the flipped weights p_bar.
struct ParamSet {
    WeightVector weights;
    Int lambda = 0;
    Int d = 1;
    Int tau = 0;
    std::vector<Int> lambda_i; // lambda_1..lambda_n, 0-indexed storage
    std::vector<Int> tau_i;    // tau_1..tau_n
    std::vector<Int> p_bar;    // p_bar_1..p_bar_n

    int n() const { return weights.n(); }
    Int p(int k) const { return weights.at(k); }          // 1-based, p(n+1) = 0
    Int lam(int i) const { return lambda_i.at(static_cast<size_t>(i) - 1); }
    Int tauAt(int i) const { return tau_i.at(static_cast<size_t>(i) - 1); }

    bool operator==(const ParamSet& o) const {
        return weights == o.weights && lambda == o.lambda && d == o.d;
    }
};

/// Condition c_ij with i in [1, n-1], j in [1, n].
struct ConditionId {
    int i = 1;
    int j = 1;
};

/// Sort descending and divide by the gcd. Rejects duplicates and short input.
WeightVector normalize_weights(const std::vector<Int>& raw);

/// Evaluate every derived quantity; accepts any integer lambda, requires d >= 1.
ParamSet derive_params(const WeightVector& w, Int lambda, Int d);

/// c_ij: p_j + lambda = p_{i+1} d if j <= i, and p_{j+1} + lambda = p_{i+1} d if j > i.
bool check_condition(const ParamSet& ps, const ConditionId& c);

/// The flip (P, lambda) -> (P_bar, lambda_1); an involution on ParamSet.
ParamSet bar_involution(const ParamSet& ps);

/// prod_j (p_j + lambda) / prod_j p_j as an exact rational. Non-strict weights
/// are allowed here (each entry >= 1 suffices).
mpq_class milnor_number(const std::vector<Int>& p, Int lambda);

} // namespace gkfol

#endif
