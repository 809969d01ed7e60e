#include "eisres/linalg.hpp"

#include "eisres/error.hpp"

#include <algorithm>
#include <utility>

namespace eisres {

QMatrix identity_matrix(std::size_t n) {
    QMatrix m(n, QVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMatrix transpose(const QMatrix& m) {
    if (m.empty()) return {};
    QMatrix t(m[0].size(), QVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
    QMatrix c(a.size(), QVector(b.empty() ? 0 : b[0].size(), Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

QVector multiply(const QVector& v, const QMatrix& m) {
    QVector r(m.empty() ? 0 : m[0].size(), Rational(0));
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (v[k] == 0) continue;
        for (std::size_t j = 0; j < m[k].size(); ++j) r[j] += v[k] * m[k][j];
    }
    return r;
}

Rational determinant(QMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

QMatrix inverse(QMatrix m, const char* what) {
    const std::size_t n = m.size();
    QMatrix inv = identity_matrix(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw Error(ErrorCode::SingularGram, std::string(what) + " is singular");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Rational piv = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

std::size_t rank(QMatrix m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

ZMatrix hermite_normal_form(ZMatrix rows) {
    if (rows.empty()) return {};
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        // Euclid on column c among rows r..end.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (r < rows.size() && rows[r][c] != 0) {
            if (rows[r][c] < 0)
                for (auto& x : rows[r]) x = -x;
            for (std::size_t i = 0; i < r; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                if (q != 0)
                    for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
            }
            ++r;
        }
    }
    rows.resize(r);
    return rows;
}

Integer common_denominator(const QMatrix& m) {
    Integer d = 1;
    for (const auto& row : m)
        for (const auto& x : row) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    return d;
}

QMatrix lattice_hnf(const QMatrix& rows) {
    Integer d = common_denominator(rows);
    ZMatrix z;
    z.reserve(rows.size());
    for (const auto& row : rows) {
        ZVector zr;
        zr.reserve(row.size());
        for (const auto& x : row) {
            Rational y = x * d;
            zr.push_back(y.get_num());
        }
        z.push_back(std::move(zr));
    }
    ZMatrix h = hermite_normal_form(std::move(z));
    QMatrix out;
    out.reserve(h.size());
    for (const auto& row : h) {
        QVector qr;
        qr.reserve(row.size());
        for (const auto& x : row) {
            Rational y(x, d);
            y.canonicalize();
            qr.push_back(y);
        }
        out.push_back(std::move(qr));
    }
    return out;
}

ZVector reduce_mod_hnf(ZVector v, const ZMatrix& hnf) {
    for (const auto& row : hnf) {
        std::size_t piv = 0;
        while (row[piv] == 0) ++piv;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v[piv].get_mpz_t(), row[piv].get_mpz_t());
        if (q != 0)
            for (std::size_t j = piv; j < v.size(); ++j) v[j] -= q * row[j];
    }
    return v;
}

bool is_integral(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.get_den() == 1; });
}

}  // namespace eisres
