#ifndef GKFOL_W0SPACE_HPP
#define GKFOL_W0SPACE_HPP

#include <cstdint>

#include "gkfol/field.hpp"
#include "gkfol/weights.hpp"

namespace gkfol {

/// One admissible monomial position: the term x^sigma d/dx_comp obeying the
/// weight equation sum p_k sigma_k = p_comp + lambda with total degree <= d+1.
struct MonomialSlot {
    int comp = 1; // 1-based component index
    Exp sigma;
};

/// Exact basis of the space of admissible rotational fields: divergence-free,
/// quasi-homogeneous of weight lambda, degree <= d+1, top part pointwise
/// dependent on the radial and diagonal fields.
struct W0Basis {
    ParamSet ps;
    std::vector<MonomialSlot> slots;
    std::vector<std::vector<mpq_class>> basis; // coordinate vectors over slots

    int dim() const { return static_cast<int>(basis.size()); }
    VectorField field_from_slot_coords(const std::vector<mpq_class>& slot_coords) const;
    VectorField field_from_coords(const std::vector<mpq_class>& basis_coords) const;
    std::vector<mpq_class> slot_coords_of(const VectorField& y) const;

    /// Express y over the basis vectors, if it lies in the span.
    std::optional<std::vector<mpq_class>> coords_of(const VectorField& y) const;
};

/// All sigma >= 0 with sum p_k sigma_k = target and sum sigma_k <= degree_cap,
/// in grlex order. Negative targets give the empty list.
std::vector<Exp> weighted_monomials(const WeightVector& w, Int target, int degree_cap);

W0Basis w0_basis(const ParamSet& ps);

/// Family dimension from the basis dimension and the (d, lambda) case split.
Int dim_component(const ParamSet& ps);

/// Deterministic pseudo-random integer combination of the basis, coefficients
/// in [-bound, bound], never identically zero.
VectorField random_element(const W0Basis& b, Int bound, uint64_t seed);

/// The defining membership constraints, checked symbolically.
bool satisfies_w0_constraints(const ParamSet& ps, const VectorField& y);

} // namespace gkfol

#endif
