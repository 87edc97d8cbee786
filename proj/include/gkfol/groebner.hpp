#ifndef GKFOL_GROEBNER_HPP
#define GKFOL_GROEBNER_HPP

#include <vector>

#include "gkfol/poly.hpp"

namespace gkfol {

enum class ZeroDimVerdict { ZeroDimensional, PositiveDimensional, Unknown };

struct StaircaseResult {
    ZeroDimVerdict verdict = ZeroDimVerdict::Unknown;
    std::vector<Exp> leading_exponents; // reduced basis leading monomials, sorted
    long quotient_dim = -1;             // vector-space dimension of the quotient
    long steps_used = 0;
};

/// Buchberger in graded reverse lexicographic order with a hard step budget.
/// Zero-dimensional iff the leading-term ideal contains a pure power of every
/// variable; in that case the staircase below the leading terms is counted.
/// Budget overruns give Unknown, never a wrong verdict.
StaircaseResult zero_dim_test(const std::vector<Poly>& gens, long step_budget);

} // namespace gkfol

#endif
