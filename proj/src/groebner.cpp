#include "gkfol/groebner.hpp"

#include <algorithm>
#include <set>

namespace gkfol {

namespace {

// Graded reverse lexicographic: higher total degree wins; on ties the
// exponent whose last nonzero entry of the difference is negative is larger.
bool grevlex_greater(const Exp& a, const Exp& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (size_t k = a.size(); k-- > 0;) {
        const int diff = a[k] - b[k];
        if (diff != 0) return diff < 0;
    }
    return false;
}

struct GPoly {
    // Terms sorted grevlex-descending; coefficients integer-primitive.
    std::vector<std::pair<Exp, mpq_class>> terms;

    bool is_zero() const { return terms.empty(); }
    const Exp& lm() const { return terms.front().first; }
    const mpq_class& lc() const { return terms.front().second; }
};

struct Budget {
    long remaining;
    bool exhausted = false;
    long used = 0;
    bool spend(long k = 1) {
        used += k;
        remaining -= k;
        if (remaining < 0) exhausted = true;
        return !exhausted;
    }
};

GPoly to_gpoly(const Poly& p) {
    GPoly g;
    g.terms.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) g.terms.emplace_back(e, c);
    std::sort(g.terms.begin(), g.terms.end(),
              [](const auto& a, const auto& b) { return grevlex_greater(a.first, b.first); });
    return g;
}

void make_primitive(GPoly& g) {
    if (g.terms.empty()) return;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : g.terms) {
        mpz_class num = c.get_num(), den = c.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    mpq_class s(den_lcm, num_gcd);
    s.canonicalize();
    if (g.terms.front().second < 0) s = -s;
    for (auto& [e, c] : g.terms) c *= s;
}

bool divides(const Exp& a, const Exp& b) {
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

Exp lcm_exp(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
    return r;
}

// g -= (coef * x^shift) * h, merging sorted term lists.
GPoly axpy(const GPoly& g, const mpq_class& coef, const Exp& shift, const GPoly& h) {
    GPoly out;
    out.terms.reserve(g.terms.size() + h.terms.size());
    size_t i = 0, j = 0;
    auto shifted = [&](size_t jj) {
        Exp e = h.terms[jj].first;
        for (size_t k = 0; k < e.size(); ++k) e[k] += shift[k];
        return e;
    };
    while (i < g.terms.size() || j < h.terms.size()) {
        if (j == h.terms.size()) {
            out.terms.push_back(g.terms[i++]);
            continue;
        }
        Exp ej = shifted(j);
        if (i == g.terms.size()) {
            out.terms.emplace_back(std::move(ej), -coef * h.terms[j].second);
            ++j;
            continue;
        }
        if (g.terms[i].first == ej) {
            mpq_class c = g.terms[i].second - coef * h.terms[j].second;
            if (c != 0) out.terms.emplace_back(g.terms[i].first, std::move(c));
            ++i;
            ++j;
        } else if (grevlex_greater(g.terms[i].first, ej)) {
            out.terms.push_back(g.terms[i++]);
        } else {
            out.terms.emplace_back(std::move(ej), -coef * h.terms[j].second);
            ++j;
        }
    }
    return out;
}

// Full normal form of g modulo basis.
GPoly reduce(GPoly g, const std::vector<GPoly>& basis, Budget& budget) {
    GPoly out;
    while (!g.is_zero()) {
        if (!budget.spend()) return out;
        bool reduced = false;
        for (const auto& b : basis) {
            if (!divides(b.lm(), g.lm())) continue;
            Exp shift(g.lm().size());
            for (size_t k = 0; k < shift.size(); ++k) shift[k] = g.lm()[k] - b.lm()[k];
            g = axpy(g, g.lc() / b.lc(), shift, b);
            reduced = true;
            break;
        }
        if (!reduced) {
            out.terms.push_back(g.terms.front());
            g.terms.erase(g.terms.begin());
        }
    }
    return out;
}

} // namespace

StaircaseResult zero_dim_test(const std::vector<Poly>& gens, long step_budget) {
    StaircaseResult res;
    Budget budget{step_budget};
    if (gens.empty()) {
        res.verdict = ZeroDimVerdict::PositiveDimensional;
        return res;
    }
    const int n = gens.front().nvars();

    std::vector<GPoly> basis;
    for (const auto& p : gens) {
        if (p.is_zero()) continue;
        if (!p.is_polynomial()) throw InvalidInput("ideal generators must be polynomials");
        GPoly g = to_gpoly(p);
        make_primitive(g);
        basis.push_back(std::move(g));
    }
    if (basis.empty()) {
        res.verdict = ZeroDimVerdict::PositiveDimensional;
        return res;
    }

    struct Pair {
        size_t i, j;
        Exp lcm;
        int deg;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return GrlexLess{}(a.lcm, b.lcm);
    };
    std::vector<Pair> pairs;
    std::set<std::pair<size_t, size_t>> done;
    auto push_pairs_for = [&](size_t idx) {
        for (size_t i = 0; i < idx; ++i) {
            Exp l = lcm_exp(basis[i].lm(), basis[idx].lm());
            pairs.push_back(Pair{i, idx, l, total_degree(l)});
        }
    };
    for (size_t idx = 0; idx < basis.size(); ++idx) push_pairs_for(idx);

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair pr = *it;
        pairs.erase(it);
        done.insert({pr.i, pr.j});

        const Exp &li = basis[pr.i].lm(), &lj = basis[pr.j].lm();
        // Coprime leading monomials reduce to zero.
        bool coprime = true;
        for (size_t k = 0; k < li.size(); ++k)
            if (li[k] > 0 && lj[k] > 0) {
                coprime = false;
                break;
            }
        if (coprime) continue;
        // Chain criterion: a third leading monomial dividing the lcm whose
        // pairs with both ends were already handled.
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides(basis[k].lm(), pr.lcm)) continue;
            auto key1 = std::minmax(pr.i, k);
            auto key2 = std::minmax(pr.j, k);
            if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        Exp si(li.size()), sj(lj.size());
        for (size_t k = 0; k < li.size(); ++k) {
            si[k] = pr.lcm[k] - li[k];
            sj[k] = pr.lcm[k] - lj[k];
        }
        // x^{si} f_i - (lc_i/lc_j) x^{sj} f_j: the lcm leads cancel.
        GPoly shifted = axpy(GPoly{}, mpq_class(-1), si, basis[pr.i]);
        GPoly spoly =
            axpy(shifted, basis[pr.i].lc() / basis[pr.j].lc(), sj, basis[pr.j]);

        GPoly nf = reduce(std::move(spoly), basis, budget);
        if (budget.exhausted) {
            res.verdict = ZeroDimVerdict::Unknown;
            res.steps_used = budget.used;
            return res;
        }
        if (nf.is_zero()) continue;
        make_primitive(nf);
        basis.push_back(std::move(nf));
        push_pairs_for(basis.size() - 1);
    }

    // Minimalize and tail-reduce to the reduced basis.
    std::vector<GPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j)
            if (i != j && divides(basis[j].lm(), basis[i].lm()) &&
                (!(basis[i].lm() == basis[j].lm()) || j < i))
                redundant = true;
        if (!redundant) minimal.push_back(basis[i]);
    }
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<GPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = reduce(minimal[i], others, budget);
        if (budget.exhausted) {
            res.verdict = ZeroDimVerdict::Unknown;
            res.steps_used = budget.used;
            return res;
        }
        make_primitive(minimal[i]);
    }

    for (const auto& g : minimal) res.leading_exponents.push_back(g.lm());
    std::sort(res.leading_exponents.begin(), res.leading_exponents.end(), GrlexLess{});
    res.steps_used = budget.used;

    // Unit ideal: empty zero set, trivially zero-dimensional.
    if (res.leading_exponents.size() == 1 && total_degree(res.leading_exponents.front()) == 0) {
        res.verdict = ZeroDimVerdict::ZeroDimensional;
        res.quotient_dim = 0;
        return res;
    }

    // Pure power of every variable present in the leading-term ideal?
    std::vector<long> cap(static_cast<size_t>(n), -1);
    for (const auto& e : res.leading_exponents) {
        int nz = -1;
        bool pure = true;
        for (int k = 0; k < n; ++k) {
            if (e[static_cast<size_t>(k)] > 0) {
                if (nz >= 0) pure = false;
                nz = k;
            }
        }
        if (pure && nz >= 0) {
            long deg = e[static_cast<size_t>(nz)];
            if (cap[static_cast<size_t>(nz)] < 0 || deg < cap[static_cast<size_t>(nz)])
                cap[static_cast<size_t>(nz)] = deg;
        }
    }
    for (long c : cap)
        if (c < 0) {
            res.verdict = ZeroDimVerdict::PositiveDimensional;
            return res;
        }

    // Count the staircase inside the box of pure-power caps.
    long count = 0;
    Exp mono(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            for (const auto& e : res.leading_exponents)
                if (divides(e, mono)) return;
            ++count;
            return;
        }
        for (int v = 0; v < cap[static_cast<size_t>(k)]; ++v) {
            mono[static_cast<size_t>(k)] = v;
            self(self, k + 1);
        }
        mono[static_cast<size_t>(k)] = 0;
    };
    rec(rec, 0);

    res.verdict = ZeroDimVerdict::ZeroDimensional;
    res.quotient_dim = count;
    return res;
}

} // namespace gkfol
