#ifndef GKFOL_FIELD_HPP
#define GKFOL_FIELD_HPP

#include <optional>
#include <vector>

#include "gkfol/poly.hpp"

namespace gkfol {

using QMat = std::vector<std::vector<mpq_class>>;

/// Polynomial vector field, one Poly per coordinate direction.
struct VectorField {
    std::vector<Poly> comps;

    VectorField() = default;
    explicit VectorField(int n) : comps(static_cast<size_t>(n), Poly(n)) {}

    int nvars() const { return static_cast<int>(comps.size()); }
    bool is_zero() const;
    const Poly& comp(int j) const { return comps.at(static_cast<size_t>(j) - 1); }
    Poly& comp(int j) { return comps.at(static_cast<size_t>(j) - 1); }

    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField scaled(const mpq_class& c) const;
    bool operator==(const VectorField& o) const { return comps == o.comps; }

    /// The diagonal field sum_j rho_j x_j d/dx_j.
    static VectorField diagonal(const std::vector<Int>& rho);
    static VectorField radial(int n);

    /// Apply as a derivation: sum_j comps_j * df/dx_j.
    Poly apply(const Poly& f) const;
};

/// Alternating k-form with polynomial coefficients, keyed by strictly
/// increasing index tuples (0-based internally).
class AltForm {
public:
    AltForm() : n_(0), grade_(0) {}
    AltForm(int n, int grade) : n_(n), grade_(grade) {}

    int nvars() const { return n_; }
    int grade() const { return grade_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<std::vector<int>, Poly>& coeffs() const { return coeffs_; }

    void add(const std::vector<int>& tuple, const Poly& c);
    Poly coeff(const std::vector<int>& tuple) const;

    AltForm operator+(const AltForm& o) const;
    AltForm operator-(const AltForm& o) const;
    AltForm scaled(const mpq_class& c) const;
    AltForm mul_poly(const Poly& f) const;
    AltForm mul_monomial(const Exp& m) const;
    bool operator==(const AltForm& o) const;

    /// dx_1 ^ ... ^ dx_n.
    static AltForm unit_volume(int n);

    /// Minimal monomial multiple making every coefficient polynomial.
    AltForm cleared_denominator() const;

    /// Common weighted degree of all terms, counting the dx indices:
    /// term c x^s dx_T has weight sum rho_k s_k + sum_{m in T} rho_m.
    bool weighted_degree(const std::vector<Int>& rho, Int& out) const;

    int max_coeff_degree() const; // -1 if zero

private:
    int n_, grade_;
    std::map<std::vector<int>, Poly> coeffs_;
};

/// [A, B]_j = A(B_j) - B(A_j).
VectorField lie_bracket(const VectorField& a, const VectorField& b);

Poly divergence(const VectorField& x);

/// The common weight lambda with [S, X] = lambda X for diagonal S with the
/// given entries, or nullopt if no single weight works. Throws on X = 0.
std::optional<Int> quasi_weight(const std::vector<Int>& weights, const VectorField& x);

/// Interior product i_V form.
AltForm interior(const VectorField& v, const AltForm& form);

/// i_S i_X (dx_1 ^ ... ^ dx_n): X goes into the volume form first, then S.
AltForm contract(const VectorField& s, const VectorField& x);

AltForm exterior_derivative(const AltForm& f);

/// The unique Y with d(omega) = i_Y nu_n, for omega of grade n-2.
VectorField rot(const AltForm& omega);

std::vector<mpq_class> evaluate(const VectorField& x, const std::vector<mpq_class>& point);

/// Matrix of the linear part: row j, column k holds d(X_j)/dx_k at 0.
QMat jacobian_at_zero(const VectorField& x);

} // namespace gkfol

#endif
