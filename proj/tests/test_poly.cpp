#include "doctest.h"

#include <random>

#include "gkfol/field.hpp"
#include "gkfol/polygcd.hpp"
#include "gkfol/w0space.hpp"

using namespace gkfol;

namespace {

Poly from_terms(int n, std::initializer_list<std::pair<Exp, int>> terms) {
    Poly p(n);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

// Small random field, not necessarily quasi-homogeneous.
VectorField random_field(int n, std::mt19937_64& rng, int max_terms = 3, int max_deg = 2) {
    VectorField f(n);
    for (int j = 1; j <= n; ++j) {
        const int terms = static_cast<int>(rng() % static_cast<uint64_t>(max_terms + 1));
        for (int t = 0; t < terms; ++t) {
            Exp e(static_cast<size_t>(n), 0);
            for (int k = 0; k < n; ++k) e[static_cast<size_t>(k)] = static_cast<int>(rng() % static_cast<uint64_t>(max_deg + 1));
            const long c = static_cast<long>(rng() % 9) - 4;
            f.comp(j).add_term(e, c);
        }
    }
    return f;
}

// Random (S, X) with [S, X] = lambda X: pick weights, then admissible slots.
struct QhInstance {
    std::vector<Int> weights;
    Int lambda;
    VectorField x;
};

QhInstance random_qh(int n, std::mt19937_64& rng) {
    for (;;) {
        std::vector<Int> w;
        Int prev = static_cast<Int>(rng() % 5) + 7;
        for (int k = 0; k < n; ++k) {
            w.push_back(prev);
            prev -= 1 + static_cast<Int>(rng() % 3);
            if (prev < 1) prev = 1;
        }
        bool strict = true;
        for (size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k] <= w[k + 1]) strict = false;
        if (!strict) continue;

        // Target weight from a random admissible monomial.
        const int comp = static_cast<int>(rng() % static_cast<uint64_t>(n)) + 1;
        Exp seed(static_cast<size_t>(n), 0);
        for (int k = 0; k < n; ++k) seed[static_cast<size_t>(k)] = static_cast<int>(rng() % 3);
        Int lambda = -w[static_cast<size_t>(comp) - 1];
        for (int k = 0; k < n; ++k) lambda += w[static_cast<size_t>(k)] * seed[static_cast<size_t>(k)];

        VectorField x(n);
        WeightVector wv{w};
        int placed = 0;
        for (int j = 1; j <= n; ++j) {
            auto monos = weighted_monomials(wv, w[static_cast<size_t>(j) - 1] + lambda, 6);
            for (const auto& m : monos) {
                if (rng() % 3 == 0) {
                    const long c = static_cast<long>(rng() % 7) - 3;
                    if (c != 0) {
                        x.comp(j).add_term(m, c);
                        ++placed;
                    }
                }
            }
        }
        if (placed == 0) continue;
        return {w, lambda, x};
    }
}

} // namespace

TEST_CASE("lie bracket basics") {
    const int n = 3;
    VectorField s = VectorField::diagonal({4, 2, 1});
    CHECK(lie_bracket(s, s).is_zero());

    VectorField x(n);
    x.comp(2) = from_terms(n, {{{1, 0, 1}, 1}}); // xz d/dy
    VectorField br = lie_bracket(s, x);
    CHECK(br == x.scaled(3));

    // Euler identity: [R, H] = (deg-1) H for homogeneous H.
    VectorField h(n);
    h.comp(1) = from_terms(n, {{{2, 0, 0}, 1}});
    CHECK(lie_bracket(VectorField::radial(n), h) == h);
}

TEST_CASE("divergence") {
    VectorField s = VectorField::diagonal({4, 2, 1});
    CHECK(divergence(s) == Poly::constant(3, 7));
    VectorField h(3);
    h.comp(1) = from_terms(3, {{{2, 0, 0}, 1}});
    CHECK(divergence(h) == from_terms(3, {{{1, 0, 0}, 2}}));
}

TEST_CASE("quasi_weight") {
    VectorField x(3);
    x.comp(2) = from_terms(3, {{{1, 0, 1}, 1}});
    CHECK(quasi_weight({4, 2, 1}, x) == 3);

    VectorField dz(3);
    dz.comp(3) = Poly::constant(3, 1);
    CHECK(quasi_weight({4, 2, 1}, dz) == -1);

    VectorField mixed(3);
    mixed.comp(1) = Poly::variable(3, 1);
    mixed.comp(2) = Poly::variable(3, 1);
    CHECK_FALSE(quasi_weight({4, 2, 1}, mixed).has_value());

    CHECK_THROWS_AS(quasi_weight({4, 2, 1}, VectorField(3)), ZeroField);
}

TEST_CASE("contract against the determinant expansion") {
    // Constant fields: coefficient of dx_k is det of rows (X, S, e_k).
    VectorField s(3), x(3);
    const long a[3] = {2, -1, 5}, b[3] = {3, 4, -2};
    for (int j = 1; j <= 3; ++j) {
        s.comp(j) = Poly::constant(3, a[j - 1]);
        x.comp(j) = Poly::constant(3, b[j - 1]);
    }
    AltForm w = contract(s, x);
    for (int k = 0; k < 3; ++k) {
        // brute-force 3x3 determinant with rows b, a, e_k
        QMat m(3, std::vector<mpq_class>(3, 0));
        for (int c = 0; c < 3; ++c) {
            m[0][static_cast<size_t>(c)] = b[c];
            m[1][static_cast<size_t>(c)] = a[c];
            m[2][static_cast<size_t>(c)] = (c == k) ? 1 : 0;
        }
        mpq_class det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        CHECK(w.coeff({k}).eval({0, 0, 0}) == det);
    }

    CHECK(contract(s, s).is_zero());

    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        VectorField u = random_field(4, rng), v = random_field(4, rng), w2 = random_field(4, rng);
        CHECK(contract(u, v + w2) == contract(u, v) + contract(u, w2));
        CHECK(contract(u, v) == interior(u, interior(v, AltForm::unit_volume(4))));
        CHECK((contract(u, v) + contract(v, u)).is_zero());
    }
}

TEST_CASE("exterior derivative: constants, divergence identity, d o d = 0") {
    AltForm c(3, 1);
    c.add({0}, Poly::constant(3, 5));
    CHECK(exterior_derivative(c).is_zero());

    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        const int n = 3 + static_cast<int>(rng() % 2);
        VectorField y = random_field(n, rng);
        AltForm iy = interior(y, AltForm::unit_volume(n));
        CHECK(exterior_derivative(iy) == AltForm::unit_volume(n).mul_poly(divergence(y)));

        // d(d(f)) = 0 for random forms of low grade
        AltForm f(n, 1);
        for (int q = 0; q < n; ++q) {
            Exp e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(rng() % static_cast<uint64_t>(n))] = static_cast<int>(rng() % 3);
            f.add({q}, Poly::monomial(e, static_cast<long>(rng() % 5) - 2));
        }
        CHECK(exterior_derivative(exterior_derivative(f)).is_zero());
    }
}

TEST_CASE("rot identity rot(i_S i_X nu) = tau X - div(X) S") {
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 300) {
        const int n = 3 + static_cast<int>(rng() % 3); // 3, 4, 5
        QhInstance inst = random_qh(n, rng);
        VectorField s = VectorField::diagonal(inst.weights);
        Int tau = inst.lambda;
        for (Int w : inst.weights) tau += w;
        // tau X - div(X) S, assembled without going through rot
        VectorField rhs(n);
        Poly divx = divergence(inst.x);
        for (int j = 1; j <= n; ++j)
            rhs.comp(j) = inst.x.comp(j).scaled(tau) - divx * s.comp(j);
        CHECK(rot(contract(s, inst.x)) == rhs);
        ++done;
    }
}

TEST_CASE("rot of a closed form is zero and the weighted example") {
    // omega = i_S i_X nu for S = diag(4,2,1), X = xz d/dy, lambda = 3, tau = 10
    VectorField s = VectorField::diagonal({4, 2, 1});
    VectorField x(3);
    x.comp(2) = from_terms(3, {{{1, 0, 1}, 1}});
    CHECK(divergence(x).is_zero());
    VectorField y = rot(contract(s, x));
    CHECK(y == x.scaled(10));

    // closed form: constant coefficients
    AltForm closed(3, 1);
    closed.add({1}, Poly::constant(3, 9));
    CHECK(rot(closed).is_zero());
}

TEST_CASE("jacobi identity on random triples") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 25; ++t) {
        const int n = 3;
        VectorField a = random_field(n, rng), b = random_field(n, rng), c = random_field(n, rng);
        VectorField j = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) +
                        lie_bracket(c, lie_bracket(a, b));
        CHECK(j.is_zero());
    }
}

TEST_CASE("evaluate and jacobian_at_zero") {
    VectorField s = VectorField::diagonal({4, 2, 1});
    CHECK(evaluate(s, {0, 0, 0}) == std::vector<mpq_class>{0, 0, 0});
    QMat j = jacobian_at_zero(s);
    CHECK(j[0][0] == 4);
    CHECK(j[1][1] == 2);
    CHECK(j[2][2] == 1);
    CHECK(j[0][1] == 0);

    VectorField nil(2);
    nil.comp(1) = Poly::variable(2, 2).scaled(0) + Poly::monomial({0, 2}, 1); // y^2 d/dx
    nil.comp(2) = Poly::variable(2, 1);                                      // x d/dy
    QMat jn = jacobian_at_zero(nil);
    CHECK(jn[0][0] == 0);
    CHECK(jn[0][1] == 0);
    CHECK(jn[1][0] == 1);
    CHECK(jn[1][1] == 0);
}

TEST_CASE("multivariate gcd") {
    const int n = 3;
    Poly x = Poly::variable(n, 1), y = Poly::variable(n, 2), z = Poly::variable(n, 3);
    Poly f = (x + y) * (x - z) * (x - z);
    Poly g = (x + y) * (x - z) * y;
    Poly got = poly_gcd(f, g);
    Poly expect = (x + y) * (x - z);
    CHECK(got == expect.primitive_part());

    CHECK(is_constant(poly_gcd(x + y, x - y)));
    CHECK(poly_gcd(Poly::zero(n), f) == f.primitive_part());
    CHECK(is_constant(poly_gcd_many({x + y, y + z, x * z}, n)));
    Poly common = x * y - z * z;
    CHECK(poly_gcd_many({common * x, common * (y + z), common * common}, n) ==
          common.primitive_part());
}
