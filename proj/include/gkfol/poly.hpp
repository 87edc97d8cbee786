#ifndef GKFOL_POLY_HPP
#define GKFOL_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "gkfol/errors.hpp"
#include "gkfol/weights.hpp"

namespace gkfol {

/// Exponent vector, dense, one slot per variable. Negative entries are the
/// Laurent case used inside chart transforms.
using Exp = std::vector<int>;

int total_degree(const Exp& e);

/// Graded lexicographic: first by total degree, ties broken lexicographically.
/// Canonical term order for iteration and serialization.
struct GrlexLess {
    bool operator()(const Exp& a, const Exp& b) const;
};

/// Sparse multivariate polynomial over exact rationals. No zero coefficients
/// are stored; terms iterate in grlex order. Exponents may go negative, which
/// makes the same container double as the Laurent ring of the chart maps.
class Poly {
public:
    Poly() : n_(0) {}
    explicit Poly(int n) : n_(n) {}

    static Poly zero(int n) { return Poly(n); }
    static Poly constant(int n, const mpq_class& c);
    static Poly monomial(const Exp& e, const mpq_class& c);
    static Poly variable(int n, int i); // x_i, 1-based

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exp, mpq_class, GrlexLess>& terms() const { return terms_; }

    mpq_class coeff(const Exp& e) const;
    void add_term(const Exp& e, const mpq_class& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    Poly scaled(const mpq_class& c) const;
    Poly mul_monomial(const Exp& e, const mpq_class& c) const;

    bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// d/dx_i (1-based); valid for Laurent exponents too.
    Poly derivative(int i) const;

    /// Exact evaluation; requires non-negative exponents.
    mpq_class eval(const std::vector<mpq_class>& point) const;

    /// Substitute x_k -> u^{sub[k-1]} (monomial map, possibly Laurent).
    Poly substitute_monomials(const std::vector<Exp>& sub, int out_nvars) const;

    bool is_polynomial() const; // no negative exponents
    int degree() const;         // max total degree, -1 for zero
    Poly homogeneous_part(int k) const;

    /// Smallest exponent of variable i (1-based) over all terms; 0 for zero poly.
    int min_exponent(int i) const;

    /// Multiply by the minimal monomial making every exponent non-negative.
    Poly cleared_denominator() const;

    /// Weighted degree sum_k rho_k e_k if it is the same for every term.
    bool weighted_degree(const std::vector<Int>& rho, Int& out) const;

    /// Integer content: c > 0 such that this/c is integer-primitive. Zero poly -> 1.
    mpq_class content() const;
    Poly primitive_part() const;

private:
    int n_;
    std::map<Exp, mpq_class, GrlexLess> terms_;
};

} // namespace gkfol

#endif
