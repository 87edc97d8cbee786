#include "gkfol/polygcd.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace gkfol {

namespace {

int deg_in(const Poly& p, int v) {
    int d = 0;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[static_cast<size_t>(v) - 1]);
    return d;
}

// Highest variable index occurring in p, or 0 if constant.
int top_var(const Poly& p) {
    int v = 0;
    for (const auto& [e, c] : p.terms())
        for (int k = p.nvars(); k > v; --k)
            if (e[static_cast<size_t>(k) - 1] > 0) {
                v = k;
                break;
            }
    return v;
}

// Coefficients of p seen as univariate in x_v.
std::map<int, Poly> split_univar(const Poly& p, int v) {
    std::map<int, Poly> out;
    for (const auto& [e, c] : p.terms()) {
        const int dv = e[static_cast<size_t>(v) - 1];
        Exp rest = e;
        rest[static_cast<size_t>(v) - 1] = 0;
        auto it = out.find(dv);
        if (it == out.end()) it = out.emplace(dv, Poly::zero(p.nvars())).first;
        it->second.add_term(rest, c);
    }
    return out;
}

Poly normalized(Poly p) {
    if (p.is_zero()) return p;
    p = p.primitive_part();
    if (p.terms().rbegin()->second < 0) p = -p;
    return p;
}

// Exact division; nullopt when b does not divide a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    Poly rem = a, quot(a.nvars());
    const auto bl = *b.terms().rbegin(); // grlex-leading term of divisor
    while (!rem.is_zero()) {
        const auto rl = *rem.terms().rbegin();
        Exp q = rl.first;
        bool ok = true;
        for (size_t k = 0; k < q.size(); ++k) {
            q[k] -= bl.first[k];
            if (q[k] < 0) ok = false;
        }
        if (!ok) return std::nullopt;
        const mpq_class c = rl.second / bl.second;
        quot.add_term(q, c);
        rem -= b.mul_monomial(q, c);
    }
    return quot;
}

Poly poly_pow(const Poly& base, int e) {
    Poly r = Poly::constant(base.nvars(), 1);
    for (int k = 0; k < e; ++k) r = r * base;
    return r;
}

Poly must_divide(const Poly& a, const Poly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw GkError("internal: inexact division in the gcd sequence");
    return *q;
}

Poly gcd_rec(const Poly& a, const Poly& b);

// Per-variable minimum exponent over all terms.
Exp min_exponents(const Poly& p) {
    Exp m(static_cast<size_t>(p.nvars()), 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        for (size_t k = 0; k < m.size(); ++k)
            m[k] = first ? e[k] : std::min(m[k], e[k]);
        first = false;
    }
    return m;
}

// gcd when one side is a single term: the common monomial part.
Poly monomial_gcd(const Exp& mono, const Poly& other) {
    Exp m = min_exponents(other);
    for (size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], mono[k]);
    return Poly::monomial(m, 1);
}

// gcd of the coefficient list (the content w.r.t. one variable).
Poly content_of(const std::map<int, Poly>& coeffs, int nvars) {
    Poly g = Poly::zero(nvars);
    for (const auto& [dv, c] : coeffs) {
        g = gcd_rec(g, c);
        if (is_constant(g)) break;
    }
    return g;
}

// Pseudo-remainder of a by b in x_v: lc_v(b)^(da-db+1) a mod b. The final
// power padding keeps the exact-division bookkeeping of the subresultant
// sequence valid when degrees drop by more than one.
Poly prem(const Poly& a, const Poly& b, int v, int nvars) {
    const auto sb = split_univar(b, v);
    const int db = sb.rbegin()->first;
    const Poly lb = sb.rbegin()->second;
    const int delta = deg_in(a, v) - db;
    Poly r = a;
    int used = 0;
    while (!r.is_zero()) {
        const auto sr = split_univar(r, v);
        const int step = sr.rbegin()->first;
        if (step < db) break;
        const Poly lr = sr.rbegin()->second;
        Exp shift(static_cast<size_t>(nvars), 0);
        shift[static_cast<size_t>(v) - 1] = step - db;
        r = r * lb - b.mul_monomial(shift, 1) * lr;
        ++used;
    }
    for (; used < delta + 1; ++used) r = r * lb;
    return r;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    if (is_constant(a) || is_constant(b)) return Poly::constant(a.nvars(), 1);
    if (a.term_count() == 1) return monomial_gcd(a.terms().begin()->first, b);
    if (b.term_count() == 1) return monomial_gcd(b.terms().begin()->first, a);

    const int v = std::max(top_var(a), top_var(b));
    if (deg_in(a, v) == 0 || deg_in(b, v) == 0) {
        const Poly& with_v = deg_in(a, v) > 0 ? a : b;
        const Poly& other = deg_in(a, v) > 0 ? b : a;
        return gcd_rec(content_of(split_univar(with_v, v), a.nvars()), other);
    }

    const Poly cont_a = content_of(split_univar(a, v), a.nvars());
    const Poly cont_b = content_of(split_univar(b, v), a.nvars());
    const Poly cont = gcd_rec(cont_a, cont_b);

    Poly pa = must_divide(a, cont_a);
    Poly pb = must_divide(b, cont_b);
    if (deg_in(pa, v) < deg_in(pb, v)) std::swap(pa, pb);

    // Subresultant pseudo-remainder sequence in x_v: divide each remainder by
    // the known factor g h^delta instead of recomputing contents.
    Poly g = Poly::constant(a.nvars(), 1);
    Poly h = Poly::constant(a.nvars(), 1);
    for (;;) {
        const int da = deg_in(pa, v), db = deg_in(pb, v);
        const int delta = da - db;
        Poly r = prem(pa, pb, v, a.nvars());
        if (r.is_zero()) break;
        if (deg_in(r, v) == 0) {
            // gcd carries no x_v: only the content survives.
            return normalized(cont);
        }
        const Poly divisor = g * poly_pow(h, delta);
        pa = pb;
        pb = must_divide(r, divisor);
        g = split_univar(pa, v).rbegin()->second;
        if (delta >= 1) {
            Poly gd = poly_pow(g, delta);
            h = must_divide(gd, poly_pow(h, delta - 1));
        }
    }
    const Poly cont_pb = content_of(split_univar(pb, v), a.nvars());
    return normalized(cont * must_divide(pb, cont_pb));
}

} // namespace

bool is_constant(const Poly& p) { return p.degree() == 0; }

Poly poly_gcd(const Poly& a, const Poly& b) { return gcd_rec(a, b); }

Poly poly_gcd_many(const std::vector<Poly>& polys, int nvars) {
    std::vector<const Poly*> order;
    order.reserve(polys.size());
    for (const auto& p : polys) order.push_back(&p);
    std::sort(order.begin(), order.end(),
              [](const Poly* x, const Poly* y) { return x->term_count() < y->term_count(); });
    Poly g = Poly::zero(nvars);
    for (const Poly* p : order) {
        g = gcd_rec(g, *p);
        if (is_constant(g)) break;
    }
    return g;
}

} // namespace gkfol
