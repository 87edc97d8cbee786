#ifndef GKFOL_POLYGCD_HPP
#define GKFOL_POLYGCD_HPP

#include <vector>

#include "gkfol/poly.hpp"

namespace gkfol {

/// Multivariate gcd over the rationals by recursive content / primitive-part
/// reduction, one variable at a time. Result is integer-primitive with a
/// positive leading coefficient; gcd with zero returns the other argument.
Poly poly_gcd(const Poly& a, const Poly& b);

Poly poly_gcd_many(const std::vector<Poly>& polys, int nvars);

bool is_constant(const Poly& p);

} // namespace gkfol

#endif
