#include "gkfol/poly.hpp"

#include <algorithm>
#include <numeric>

namespace gkfol {

int total_degree(const Exp& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
}

bool GrlexLess::operator()(const Exp& a, const Exp& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly Poly::constant(int n, const mpq_class& c) {
    Poly p(n);
    p.add_term(Exp(static_cast<size_t>(n), 0), c);
    return p;
}

Poly Poly::monomial(const Exp& e, const mpq_class& c) {
    Poly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

Poly Poly::variable(int n, int i) {
    Exp e(static_cast<size_t>(n), 0);
    e.at(static_cast<size_t>(i) - 1) = 1;
    return monomial(e, 1);
}

mpq_class Poly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void Poly::add_term(const Exp& e, const mpq_class& c) {
    if (static_cast<int>(e.size()) != n_) throw DimensionMismatch();
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (n_ != o.n_) throw DimensionMismatch();
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (n_ != o.n_) throw DimensionMismatch();
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    if (n_ != o.n_) throw DimensionMismatch();
    Poly r(n_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exp e = ea;
            for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly Poly::scaled(const mpq_class& c) const {
    Poly r(n_);
    if (c == 0) return r;
    for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
    return r;
}

Poly Poly::mul_monomial(const Exp& m, const mpq_class& c) const {
    Poly r(n_);
    if (c == 0) return r;
    for (const auto& [e, cc] : terms_) {
        Exp ne = e;
        for (size_t k = 0; k < ne.size(); ++k) ne[k] += m[k];
        r.terms_.emplace(ne, cc * c);
    }
    return r;
}

Poly Poly::derivative(int i) const {
    Poly r(n_);
    const size_t k = static_cast<size_t>(i) - 1;
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        Exp ne = e;
        ne[k] -= 1;
        r.add_term(ne, c * e[k]);
    }
    return r;
}

mpq_class Poly::eval(const std::vector<mpq_class>& point) const {
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t = c;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] < 0) throw InvalidInput("cannot evaluate a Laurent term");
            for (int r = 0; r < e[k]; ++r) t *= point[k];
        }
        acc += t;
    }
    return acc;
}

Poly Poly::substitute_monomials(const std::vector<Exp>& sub, int out_nvars) const {
    if (static_cast<int>(sub.size()) != n_) throw DimensionMismatch();
    Poly r(out_nvars);
    for (const auto& [e, c] : terms_) {
        Exp ne(static_cast<size_t>(out_nvars), 0);
        for (size_t k = 0; k < e.size(); ++k)
            for (size_t j = 0; j < ne.size(); ++j) ne[j] += e[k] * sub[k][j];
        r.add_term(ne, c);
    }
    return r;
}

bool Poly::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        for (int v : e)
            if (v < 0) return false;
    return true;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

Poly Poly::homogeneous_part(int k) const {
    Poly r(n_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == k) r.terms_.emplace(e, c);
    return r;
}

int Poly::min_exponent(int i) const {
    const size_t k = static_cast<size_t>(i) - 1;
    bool first = true;
    int m = 0;
    for (const auto& [e, c] : terms_) {
        if (first || e[k] < m) m = e[k];
        first = false;
    }
    return m;
}

Poly Poly::cleared_denominator() const {
    Exp shift(static_cast<size_t>(n_), 0);
    for (int i = 1; i <= n_; ++i) {
        int m = min_exponent(i);
        if (m < 0) shift[static_cast<size_t>(i) - 1] = -m;
    }
    return mul_monomial(shift, 1);
}

bool Poly::weighted_degree(const std::vector<Int>& rho, Int& out) const {
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int w = 0;
        for (size_t k = 0; k < e.size(); ++k) w += rho[k] * e[k];
        if (first) {
            out = w;
            first = false;
        } else if (w != out) {
            return false;
        }
    }
    return !first;
}

mpq_class Poly::content() const {
    if (terms_.empty()) return 1;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_class num = c.get_num(), den = c.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    mpq_class c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

Poly Poly::primitive_part() const {
    if (terms_.empty()) return *this;
    return scaled(1 / content());
}

} // namespace gkfol
