#include "gkfol/w0space.hpp"

#include <algorithm>
#include <random>

#include "gkfol/linalg.hpp"

namespace gkfol {

std::vector<Exp> weighted_monomials(const WeightVector& w, Int target, int degree_cap) {
    const int n = w.n();
    std::vector<Exp> out;
    if (target < 0 || degree_cap < 0) return out;
    Exp cur(static_cast<size_t>(n), 0);
    // Bounded knapsack over the positions, largest weight first.
    auto rec = [&](auto&& self, int k, Int rest, int deg_left) -> void {
        if (k == n) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        const Int pk = w.at(k + 1);
        const Int max_e = std::min<Int>(rest / pk, deg_left);
        for (Int e = 0; e <= max_e; ++e) {
            cur[static_cast<size_t>(k)] = static_cast<int>(e);
            self(self, k + 1, rest - e * pk, deg_left - static_cast<int>(e));
        }
        cur[static_cast<size_t>(k)] = 0;
    };
    rec(rec, 0, target, degree_cap);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

namespace {

// Coefficient rows of the two linear systems over the slots: divergence and
// the 3x3 minors of (R(x); S(x); top-degree part).
QMat constraint_matrix(const ParamSet& ps, const std::vector<MonomialSlot>& slots) {
    const int n = ps.n();
    const int nslots = static_cast<int>(slots.size());
    std::map<Exp, std::vector<mpq_class>, GrlexLess> rows; // keyed per monomial

    auto row_of = [&](const Exp& mono) -> std::vector<mpq_class>& {
        auto it = rows.find(mono);
        if (it == rows.end())
            it = rows.emplace(mono, std::vector<mpq_class>(static_cast<size_t>(nslots), 0)).first;
        return it->second;
    };

    QMat mat;
    // div(Y) = 0, coefficient-wise.
    for (int s = 0; s < nslots; ++s) {
        const auto& slot = slots[static_cast<size_t>(s)];
        const int j = slot.comp;
        if (slot.sigma[static_cast<size_t>(j) - 1] == 0) continue;
        Exp mono = slot.sigma;
        mono[static_cast<size_t>(j) - 1] -= 1;
        row_of(mono)[static_cast<size_t>(s)] += slot.sigma[static_cast<size_t>(j) - 1];
    }
    for (auto& [mono, row] : rows) mat.push_back(std::move(row));
    rows.clear();

    // Top part: for columns a < b < c,
    //   (p_c - p_b) x_b x_c Y_a - (p_c - p_a) x_a x_c Y_b + (p_b - p_a) x_a x_b Y_c = 0.
    const int top_deg = static_cast<int>(ps.d) + 1;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                std::map<Exp, std::vector<mpq_class>, GrlexLess> minor_rows;
                auto mrow = [&](const Exp& mono) -> std::vector<mpq_class>& {
                    auto it = minor_rows.find(mono);
                    if (it == minor_rows.end())
                        it = minor_rows
                                 .emplace(mono, std::vector<mpq_class>(static_cast<size_t>(nslots), 0))
                                 .first;
                    return it->second;
                };
                for (int s = 0; s < nslots; ++s) {
                    const auto& slot = slots[static_cast<size_t>(s)];
                    if (total_degree(slot.sigma) != top_deg) continue;
                    Int factor = 0;
                    int va = 0, vb = 0;
                    if (slot.comp == a) {
                        factor = ps.p(c) - ps.p(b);
                        va = b; vb = c;
                    } else if (slot.comp == b) {
                        factor = -(ps.p(c) - ps.p(a));
                        va = a; vb = c;
                    } else if (slot.comp == c) {
                        factor = ps.p(b) - ps.p(a);
                        va = a; vb = b;
                    } else {
                        continue;
                    }
                    Exp mono = slot.sigma;
                    mono[static_cast<size_t>(va) - 1] += 1;
                    mono[static_cast<size_t>(vb) - 1] += 1;
                    mrow(mono)[static_cast<size_t>(s)] += factor;
                }
                for (auto& [mono, row] : minor_rows) mat.push_back(std::move(row));
            }
    return mat;
}

} // namespace

VectorField W0Basis::field_from_slot_coords(const std::vector<mpq_class>& slot_coords) const {
    const int n = ps.n();
    VectorField y(n);
    for (size_t s = 0; s < slots.size(); ++s) {
        if (slot_coords[s] == 0) continue;
        y.comp(slots[s].comp).add_term(slots[s].sigma, slot_coords[s]);
    }
    return y;
}

VectorField W0Basis::field_from_coords(const std::vector<mpq_class>& basis_coords) const {
    std::vector<mpq_class> slot_coords(slots.size(), 0);
    for (size_t b = 0; b < basis.size(); ++b)
        for (size_t s = 0; s < slots.size(); ++s) slot_coords[s] += basis_coords[b] * basis[b][s];
    return field_from_slot_coords(slot_coords);
}

std::vector<mpq_class> W0Basis::slot_coords_of(const VectorField& y) const {
    std::vector<mpq_class> coords(slots.size(), 0);
    for (size_t s = 0; s < slots.size(); ++s)
        coords[s] = y.comp(slots[s].comp).coeff(slots[s].sigma);
    return coords;
}

std::optional<std::vector<mpq_class>> W0Basis::coords_of(const VectorField& y) const {
    // Solve basis^T c = slot coordinates of y, then confirm the reconstruction.
    const std::vector<mpq_class> target = slot_coords_of(y);
    QMat a(slots.size(), std::vector<mpq_class>(basis.size(), 0));
    for (size_t s = 0; s < slots.size(); ++s)
        for (size_t b = 0; b < basis.size(); ++b) a[s][b] = basis[b][s];
    auto c = solve(a, target);
    if (!c) return std::nullopt;
    if (!(field_from_coords(*c) == y)) return std::nullopt;
    return c;
}

W0Basis w0_basis(const ParamSet& ps) {
    W0Basis b;
    b.ps = ps;
    if (ps.lambda < -ps.p(1)) return b; // no polynomial fields below -p_1
    const int n = ps.n();
    for (int j = 1; j <= n; ++j)
        for (const Exp& sigma :
             weighted_monomials(ps.weights, ps.p(j) + ps.lambda, static_cast<int>(ps.d) + 1))
            b.slots.push_back(MonomialSlot{j, sigma});
    if (b.slots.empty()) return b;
    b.basis = nullspace(constraint_matrix(ps, b.slots), static_cast<int>(b.slots.size()));
    return b;
}

Int dim_component(const ParamSet& ps) {
    const W0Basis b = w0_basis(ps);
    if (b.dim() == 0) throw EmptyFamily();
    const Int n = ps.n();
    const Int dim_v0 = b.dim() - 1;
    if (ps.d >= 2) return dim_v0 + n * n + n;
    if (ps.lambda != 0) return dim_v0 + n * n + n - 1;
    return n * n + 2 * n - 2;
}

VectorField random_element(const W0Basis& b, Int bound, uint64_t seed) {
    if (b.dim() == 0) throw EmptyBasis();
    if (bound < 1) throw InvalidInput("coefficient bound must be >= 1");
    std::mt19937_64 rng(seed);
    const uint64_t span = static_cast<uint64_t>(2 * bound + 1);
    for (;;) {
        std::vector<mpq_class> coeffs;
        coeffs.reserve(static_cast<size_t>(b.dim()));
        bool nonzero = false;
        for (int k = 0; k < b.dim(); ++k) {
            const Int c = static_cast<Int>(rng() % span) - bound;
            if (c != 0) nonzero = true;
            coeffs.emplace_back(c);
        }
        if (!nonzero) continue;
        return b.field_from_coords(coeffs);
    }
}

bool satisfies_w0_constraints(const ParamSet& ps, const VectorField& y) {
    if (y.is_zero()) return true;
    if (!y.comps[0].is_polynomial()) return false;
    if (y.nvars() != ps.n()) return false;
    for (const auto& c : y.comps)
        if (c.degree() > static_cast<int>(ps.d) + 1 || !c.is_polynomial()) return false;
    auto lam = quasi_weight(ps.weights.p, y);
    if (!lam || *lam != ps.lambda) return false;
    if (!divergence(y).is_zero()) return false;
    // i_R i_S i_{top} nu = 0: top part pointwise dependent on R and S.
    VectorField top(ps.n());
    for (int j = 1; j <= ps.n(); ++j)
        top.comp(j) = y.comp(j).homogeneous_part(static_cast<int>(ps.d) + 1);
    if (!top.is_zero()) {
        AltForm w = interior(VectorField::radial(ps.n()),
                             contract(VectorField::diagonal(ps.weights.p), top));
        if (!w.is_zero()) return false;
    }
    return true;
}

} // namespace gkfol
