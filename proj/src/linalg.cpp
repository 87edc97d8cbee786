#include "gkfol/linalg.hpp"

namespace gkfol {

namespace {

// Scale every row to integer entries and strip common content; fraction-free
// (Bareiss) elimination then stays in integers with exact divisions.
std::vector<std::vector<mpz_class>> integer_rows(const QMat& a, int ncols) {
    std::vector<std::vector<mpz_class>> m;
    m.reserve(a.size());
    for (const auto& row : a) {
        mpz_class den_lcm = 1;
        for (const auto& q : row) {
            mpz_class d = q.get_den();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
        std::vector<mpz_class> r(static_cast<size_t>(ncols), 0);
        mpz_class g = 0;
        for (size_t c = 0; c < row.size(); ++c) {
            mpq_class q = row[c] * mpq_class(den_lcm);
            r[c] = q.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[c].get_mpz_t());
        }
        if (g > 1)
            for (auto& v : r) v /= g;
        m.push_back(std::move(r));
    }
    return m;
}

struct Echelon {
    std::vector<std::vector<mpz_class>> m;
    std::vector<int> pivot_col; // per pivot row
};

Echelon bareiss(std::vector<std::vector<mpz_class>> m, int ncols) {
    Echelon e;
    const size_t rows = m.size();
    mpz_class prev = 1;
    size_t r = 0;
    for (int c = 0; c < ncols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][static_cast<size_t>(c)] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        const mpz_class pivval = m[r][static_cast<size_t>(c)];
        for (size_t i = r + 1; i < rows; ++i) {
            const mpz_class lead = m[i][static_cast<size_t>(c)];
            for (int j = 0; j < ncols; ++j) {
                mpz_class t = pivval * m[i][static_cast<size_t>(j)] -
                              lead * m[r][static_cast<size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][static_cast<size_t>(j)] = t;
            }
        }
        prev = pivval;
        e.pivot_col.push_back(c);
        ++r;
    }
    m.resize(r);
    e.m = std::move(m);
    return e;
}

} // namespace

std::vector<std::vector<mpq_class>> nullspace(const QMat& a, int ncols) {
    Echelon e = bareiss(integer_rows(a, ncols), ncols);
    const int nr = static_cast<int>(e.m.size());
    std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
    for (int c : e.pivot_col) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<std::vector<mpq_class>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<mpq_class> v(static_cast<size_t>(ncols), 0);
        v[static_cast<size_t>(f)] = 1;
        // Back-substitute through the echelon rows, bottom-up.
        for (int r = nr - 1; r >= 0; --r) {
            const int pc = e.pivot_col[static_cast<size_t>(r)];
            mpq_class acc = 0;
            for (int c = pc + 1; c < ncols; ++c)
                acc += mpq_class(e.m[static_cast<size_t>(r)][static_cast<size_t>(c)]) *
                       v[static_cast<size_t>(c)];
            v[static_cast<size_t>(pc)] =
                -acc / mpq_class(e.m[static_cast<size_t>(r)][static_cast<size_t>(pc)]);
        }
        // First nonzero coordinate scaled to 1.
        for (const auto& q : v)
            if (q != 0) {
                mpq_class s = q;
                for (auto& w : v) w /= s;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<mpq_class>> solve(const QMat& a, const std::vector<mpq_class>& b) {
    const int ncols = a.empty() ? 0 : static_cast<int>(a[0].size());
    QMat aug = a;
    for (size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
    Echelon e = bareiss(integer_rows(aug, ncols + 1), ncols + 1);
    std::vector<mpq_class> x(static_cast<size_t>(ncols), 0);
    for (int r = static_cast<int>(e.m.size()) - 1; r >= 0; --r) {
        const int pc = e.pivot_col[static_cast<size_t>(r)];
        if (pc == ncols) return std::nullopt; // 0 = nonzero row
        mpq_class acc = mpq_class(e.m[static_cast<size_t>(r)][static_cast<size_t>(ncols)]);
        for (int c = pc + 1; c < ncols; ++c)
            acc -= mpq_class(e.m[static_cast<size_t>(r)][static_cast<size_t>(c)]) *
                   x[static_cast<size_t>(c)];
        x[static_cast<size_t>(pc)] =
            acc / mpq_class(e.m[static_cast<size_t>(r)][static_cast<size_t>(pc)]);
    }
    return x;
}

int rank(QMat a) {
    const int ncols = a.empty() ? 0 : static_cast<int>(a[0].size());
    return static_cast<int>(bareiss(integer_rows(a, ncols), ncols).pivot_col.size());
}

mpq_class determinant(QMat a) {
    const size_t n = a.size();
    mpq_class det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

bool is_nilpotent(const QMat& a) {
    const size_t n = a.size();
    QMat p = a;
    for (size_t step = 1; step < n; ++step) {
        QMat q(n, std::vector<mpq_class>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) {
                if (p[i][k] == 0) continue;
                for (size_t j = 0; j < n; ++j) q[i][j] += p[i][k] * a[k][j];
            }
        p = std::move(q);
    }
    for (const auto& row : p)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

} // namespace gkfol
