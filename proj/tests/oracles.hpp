#pragma once

#include "loday/algebra.hpp"
#include "loday/qmatrix.hpp"

// Independent reference computations. Nothing here touches the shape
// machinery or the sparse elimination under test.
namespace oracles {

using namespace loday;

// Textbook dense Gaussian elimination, row-echelon rank.
inline int dense_rank(std::vector<QVector> rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    int rank = 0;
    size_t lead = 0;
    for (size_t r = 0; r < rows.size() && lead < cols; ++lead) {
        size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][lead].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        Rational inv = Rational(1) / rows[r][lead];
        for (size_t c = lead; c < cols; ++c) rows[r][c] *= inv;
        for (size_t rr = 0; rr < rows.size(); ++rr) {
            if (rr == r || rows[rr][lead].is_zero()) continue;
            Rational factor = rows[rr][lead];
            for (size_t c = lead; c < cols; ++c) rows[rr][c] -= factor * rows[r][c];
        }
        ++r;
        ++rank;
    }
    return rank;
}

inline std::vector<QVector> to_dense(const QMatrix& m) {
    std::vector<QVector> rows(m.rows(), QVector(m.cols(), Rational(0)));
    for (const auto& [rc, v] : m.entries()) rows[rc.first][rc.second] = v;
    return rows;
}

// Hochschild coboundary C^n(A, A) -> C^{n+1}(A, A) of an associative algebra,
// built straight from the classical formula: no shapes, no routing.
//   (df)(a_1..a_{n+1}) = a_1 f(a_2..) + sum (-1)^i f(.., a_i a_{i+1}, ..)
//                        + (-1)^{n+1} f(a_1..a_n) a_{n+1}
inline std::vector<QVector> hochschild_matrix(const AlgebraSpec& assoc, int n) {
    if (assoc.family != ShapeFamily::associative)
        throw std::invalid_argument("hochschild_matrix: associative specs only");
    const int d = assoc.dim;
    const long in_count = ipow(d, n), out_count = ipow(d, n + 1);
    const long rows = out_count * d, cols = in_count * d;
    std::vector<QVector> mat(rows, QVector(cols, Rational(0)));

    auto digits = [&](long t, int len) {
        std::vector<int> x(len);
        for (int k = len - 1; k >= 0; --k) {
            x[k] = static_cast<int>(t % d);
            t /= d;
        }
        return x;
    };
    auto tuple = [&](const std::vector<int>& x) {
        long t = 0;
        for (int v : x) t = t * d + v;
        return t;
    };
    auto mu = [&](int i, int j) {
        QVector v(d);
        for (int k = 0; k < d; ++k) v[k] = assoc.pi.at(0, static_cast<long>(i) * d + j, k);
        return v;
    };

    for (long t = 0; t < out_count; ++t) {
        std::vector<int> x = digits(t, n + 1);
        // a_1 . f(a_2..a_{n+1})
        {
            long ft = tuple(std::vector<int>(x.begin() + 1, x.end()));
            for (int z = 0; z < d; ++z) {
                QVector v = mu(x[0], z);
                for (int o = 0; o < d; ++o)
                    mat[t * d + o][ft * d + z] += v[o];
            }
        }
        // (-1)^i f(a_1, .., a_i a_{i+1}, .., a_{n+1})
        for (int i = 1; i <= n; ++i) {
            QVector prod = mu(x[i - 1], x[i]);
            std::vector<int> inner(n);
            for (int k = 0; k < i - 1; ++k) inner[k] = x[k];
            for (int k = i; k < n; ++k) inner[k] = x[k + 1];
            for (int z = 0; z < d; ++z) {
                if (prod[z].is_zero()) continue;
                inner[i - 1] = z;
                long ft = tuple(inner);
                Rational c = (i % 2 == 0) ? prod[z] : -prod[z];
                for (int o = 0; o < d; ++o) mat[t * d + o][ft * d + o] += c;
            }
        }
        // (-1)^{n+1} f(a_1..a_n) . a_{n+1}
        {
            long ft = tuple(std::vector<int>(x.begin(), x.end() - 1));
            for (int z = 0; z < d; ++z) {
                QVector v = mu(z, x[n]);
                for (int o = 0; o < d; ++o) {
                    Rational c = ((n + 1) % 2 == 0) ? v[o] : -v[o];
                    mat[t * d + o][ft * d + z] += c;
                }
            }
        }
    }
    return mat;
}

}  // namespace oracles
