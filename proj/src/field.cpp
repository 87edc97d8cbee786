#include "gkfol/field.hpp"

#include <algorithm>

namespace gkfol {

bool VectorField::is_zero() const {
    for (const auto& c : comps)
        if (!c.is_zero()) return false;
    return true;
}

VectorField VectorField::operator+(const VectorField& o) const {
    if (nvars() != o.nvars()) throw DimensionMismatch();
    VectorField r(nvars());
    for (size_t k = 0; k < comps.size(); ++k) r.comps[k] = comps[k] + o.comps[k];
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
    if (nvars() != o.nvars()) throw DimensionMismatch();
    VectorField r(nvars());
    for (size_t k = 0; k < comps.size(); ++k) r.comps[k] = comps[k] - o.comps[k];
    return r;
}

VectorField VectorField::scaled(const mpq_class& c) const {
    VectorField r(nvars());
    for (size_t k = 0; k < comps.size(); ++k) r.comps[k] = comps[k].scaled(c);
    return r;
}

VectorField VectorField::diagonal(const std::vector<Int>& rho) {
    const int n = static_cast<int>(rho.size());
    VectorField s(n);
    for (int j = 1; j <= n; ++j)
        s.comp(j) = Poly::variable(n, j).scaled(mpq_class(rho[static_cast<size_t>(j) - 1]));
    return s;
}

VectorField VectorField::radial(int n) {
    return diagonal(std::vector<Int>(static_cast<size_t>(n), 1));
}

Poly VectorField::apply(const Poly& f) const {
    Poly r(f.nvars());
    for (int j = 1; j <= nvars(); ++j) r += comp(j) * f.derivative(j);
    return r;
}

void AltForm::add(const std::vector<int>& tuple, const Poly& c) {
    if (static_cast<int>(tuple.size()) != grade_) throw GradeMismatch();
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(tuple, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

Poly AltForm::coeff(const std::vector<int>& tuple) const {
    auto it = coeffs_.find(tuple);
    return it == coeffs_.end() ? Poly::zero(n_) : it->second;
}

AltForm AltForm::operator+(const AltForm& o) const {
    if (n_ != o.n_ || grade_ != o.grade_) throw GradeMismatch();
    AltForm r = *this;
    for (const auto& [t, c] : o.coeffs_) r.add(t, c);
    return r;
}

AltForm AltForm::operator-(const AltForm& o) const {
    return *this + o.scaled(-1);
}

AltForm AltForm::scaled(const mpq_class& c) const {
    AltForm r(n_, grade_);
    if (c == 0) return r;
    for (const auto& [t, cc] : coeffs_) r.coeffs_.emplace(t, cc.scaled(c));
    return r;
}

AltForm AltForm::mul_poly(const Poly& f) const {
    AltForm r(n_, grade_);
    for (const auto& [t, cc] : coeffs_) r.add(t, cc * f);
    return r;
}

AltForm AltForm::mul_monomial(const Exp& m) const {
    AltForm r(n_, grade_);
    for (const auto& [t, cc] : coeffs_) r.coeffs_.emplace(t, cc.mul_monomial(m, 1));
    return r;
}

bool AltForm::operator==(const AltForm& o) const {
    return n_ == o.n_ && grade_ == o.grade_ && coeffs_ == o.coeffs_;
}

AltForm AltForm::unit_volume(int n) {
    AltForm nu(n, n);
    std::vector<int> all(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) all[static_cast<size_t>(k)] = k;
    nu.add(all, Poly::constant(n, 1));
    return nu;
}

AltForm AltForm::cleared_denominator() const {
    Exp shift(static_cast<size_t>(n_), 0);
    for (int i = 1; i <= n_; ++i) {
        int m = 0;
        bool first = true;
        for (const auto& [t, c] : coeffs_) {
            int e = c.min_exponent(i);
            if (first || e < m) m = e;
            first = false;
        }
        if (m < 0) shift[static_cast<size_t>(i) - 1] = -m;
    }
    return mul_monomial(shift);
}

bool AltForm::weighted_degree(const std::vector<Int>& rho, Int& out) const {
    bool first = true;
    for (const auto& [t, c] : coeffs_) {
        Int base = 0;
        for (int idx : t) base += rho[static_cast<size_t>(idx)];
        Int w = 0;
        if (!c.weighted_degree(rho, w)) return false;
        if (first) {
            out = base + w;
            first = false;
        } else if (base + w != out) {
            return false;
        }
    }
    return !first;
}

int AltForm::max_coeff_degree() const {
    int d = -1;
    for (const auto& [t, c] : coeffs_) d = std::max(d, c.degree());
    return d;
}

VectorField lie_bracket(const VectorField& a, const VectorField& b) {
    if (a.nvars() != b.nvars()) throw DimensionMismatch();
    const int n = a.nvars();
    VectorField r(n);
    for (int j = 1; j <= n; ++j) r.comp(j) = a.apply(b.comp(j)) - b.apply(a.comp(j));
    return r;
}

Poly divergence(const VectorField& x) {
    Poly r(x.nvars());
    for (int j = 1; j <= x.nvars(); ++j) r += x.comp(j).derivative(j);
    return r;
}

std::optional<Int> quasi_weight(const std::vector<Int>& weights, const VectorField& x) {
    if (x.is_zero()) throw ZeroField();
    bool first = true;
    Int lambda = 0;
    for (int j = 1; j <= x.nvars(); ++j) {
        for (const auto& [e, c] : x.comp(j).terms()) {
            Int w = -weights[static_cast<size_t>(j) - 1];
            for (size_t k = 0; k < e.size(); ++k) w += weights[k] * e[k];
            if (first) {
                lambda = w;
                first = false;
            } else if (w != lambda) {
                return std::nullopt;
            }
        }
    }
    return lambda;
}

AltForm interior(const VectorField& v, const AltForm& form) {
    if (v.nvars() != form.nvars()) throw DimensionMismatch();
    if (form.grade() == 0) throw GradeMismatch();
    AltForm r(form.nvars(), form.grade() - 1);
    for (const auto& [t, c] : form.coeffs()) {
        for (size_t pos = 0; pos < t.size(); ++pos) {
            std::vector<int> rest;
            rest.reserve(t.size() - 1);
            for (size_t q = 0; q < t.size(); ++q)
                if (q != pos) rest.push_back(t[q]);
            const Poly& vc = v.comp(t[pos] + 1);
            if (vc.is_zero()) continue;
            Poly term = vc * c;
            if (pos % 2 == 1) term = -term;
            r.add(rest, term);
        }
    }
    return r;
}

AltForm contract(const VectorField& s, const VectorField& x) {
    if (s.nvars() != x.nvars()) throw DimensionMismatch();
    AltForm nu = AltForm::unit_volume(s.nvars());
    return interior(s, interior(x, nu));
}

AltForm exterior_derivative(const AltForm& f) {
    const int n = f.nvars();
    if (f.grade() >= n) throw GradeOverflow();
    AltForm r(n, f.grade() + 1);
    for (const auto& [t, c] : f.coeffs()) {
        for (int i = 0; i < n; ++i) {
            Poly dc = c.derivative(i + 1);
            if (dc.is_zero()) continue;
            // dx_i ^ dx_t: zero when i appears, else sorted insert with sign.
            if (std::find(t.begin(), t.end(), i) != t.end()) continue;
            std::vector<int> nt = t;
            auto ins = std::lower_bound(nt.begin(), nt.end(), i);
            const size_t idx = static_cast<size_t>(ins - nt.begin());
            nt.insert(ins, i);
            if (idx % 2 == 1) dc = -dc;
            r.add(nt, dc);
        }
    }
    return r;
}

VectorField rot(const AltForm& omega) {
    const int n = omega.nvars();
    if (omega.grade() != n - 2) throw GradeMismatch();
    AltForm d = exterior_derivative(omega);
    // i_Y nu = sum_j (-1)^{j-1} Y_j dx_{complement of j}
    VectorField y(n);
    for (int j = 1; j <= n; ++j) {
        std::vector<int> t;
        t.reserve(static_cast<size_t>(n) - 1);
        for (int k = 0; k < n; ++k)
            if (k != j - 1) t.push_back(k);
        Poly c = d.coeff(t);
        y.comp(j) = (j % 2 == 1) ? c : -c;
    }
    return y;
}

std::vector<mpq_class> evaluate(const VectorField& x, const std::vector<mpq_class>& point) {
    std::vector<mpq_class> r;
    r.reserve(x.comps.size());
    for (const auto& c : x.comps) r.push_back(c.eval(point));
    return r;
}

QMat jacobian_at_zero(const VectorField& x) {
    const int n = x.nvars();
    QMat j(static_cast<size_t>(n), std::vector<mpq_class>(static_cast<size_t>(n), 0));
    for (int row = 1; row <= n; ++row)
        for (int col = 1; col <= n; ++col) {
            Exp e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(col) - 1] = 1;
            j[static_cast<size_t>(row) - 1][static_cast<size_t>(col) - 1] = x.comp(row).coeff(e);
        }
    return j;
}

} // namespace gkfol
