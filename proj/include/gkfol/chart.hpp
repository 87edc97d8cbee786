#ifndef GKFOL_CHART_HPP
#define GKFOL_CHART_HPP

#include "gkfol/field.hpp"
#include "gkfol/weights.hpp"

namespace gkfol {

/// The family data expressed in one affine chart: the diagonal field S_i with
/// its weight entries, the chart weight lambda_i, the defining form omega_i
/// and its rotational Y_i. Contract: [S_i, Y_i] = lambda_i Y_i, and
/// tau_i * omega_i = i_{S_i} i_{Y_i} nu whenever tau_i != 0.
struct ChartFrame {
    int chart = 0;
    std::vector<Int> rho;  // diagonal entries of S_i
    VectorField s_i;
    Int lambda_i = 0;
    Int tau_i = 0;
    AltForm omega_i;
    VectorField y_i;
};

/// Diagonal entries of S_i on chart i (chart 1 carries the flipped weights
/// p_bar, charts 2..n the mixed-sign entries p_k - p_i with last entry -p_i).
std::vector<Int> chart_weights(const ParamSet& ps, int chart);

/// Transport Y (quasi-homogeneous of weight lambda on the base chart) to
/// chart i: pull omega_Y back through the rational coordinate change, clear
/// the minimal monomial denominator, renormalize to the weight tau_i, and
/// take the rotational.
ChartFrame chart_transform(const ParamSet& ps, const VectorField& y, int chart);

} // namespace gkfol

#endif
