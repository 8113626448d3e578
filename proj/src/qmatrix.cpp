#include "loday/qmatrix.hpp"

#include <algorithm>

namespace loday {

QVector QMatrix::apply(const QVector& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("QMatrix::apply: dimension mismatch");
    QVector out(rows_, Rational(0));
    for (const auto& [rc, v] : entries_) out[rc.first] += v * x[rc.second];
    return out;
}

namespace {

// One matrix row, entries sorted by column index, all nonzero.
using Row = std::vector<std::pair<int, Rational>>;

// dst + factor * src
Row axpy(const Row& dst, const Row& src, const Rational& factor) {
    Row out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            Rational v = factor * src[j].second;
            if (!v.is_zero()) out.emplace_back(src[j].first, v);
            ++j;
        } else {
            Rational v = dst[i].second + factor * src[j].second;
            if (!v.is_zero()) out.emplace_back(dst[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

const Rational* find_col(const Row& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it != row.end() && it->first == col) return &it->second;
    return nullptr;
}

struct Elimination {
    std::vector<Row> pivot_rows;  // reduced rows, pivot coefficient normalized to 1
    std::vector<int> pivot_cols;  // ascending
    std::vector<Row> spent_rows;  // fully eliminated rows (only the sentinel column may remain)
};

// Gauss-Jordan over Q, columns scanned left to right. Pivot row chosen by
// fewest nonzeros (exactness makes the choice performance-only). A vector b
// may ride along in a sentinel column beyond m.cols().
Elimination eliminate(const QMatrix& m, const QVector* b) {
    const int sentinel = m.cols();
    std::vector<Row> active(m.rows());
    for (const auto& [rc, v] : m.entries()) active[rc.first].emplace_back(rc.second, v);
    if (b) {
        for (int r = 0; r < m.rows(); ++r)
            if (!(*b)[r].is_zero()) active[r].emplace_back(sentinel, (*b)[r]);
    }

    Elimination out;
    std::vector<bool> settled(active.size(), false);
    for (int col = 0; col < m.cols(); ++col) {
        int pivot = -1;
        for (size_t r = 0; r < active.size(); ++r) {
            if (settled[r] || active[r].empty() || active[r].front().first != col) continue;
            if (pivot < 0 || active[r].size() < active[pivot].size()) pivot = static_cast<int>(r);
        }
        if (pivot < 0) continue;

        Row prow = std::move(active[pivot]);
        settled[pivot] = true;
        Rational inv = Rational(1) / prow.front().second;
        for (auto& e : prow) e.second *= inv;

        for (size_t r = 0; r < active.size(); ++r) {
            if (settled[r]) continue;
            if (const Rational* v = find_col(active[r], col))
                active[r] = axpy(active[r], prow, -*v);
        }
        for (auto& done : out.pivot_rows) {
            if (const Rational* v = find_col(done, col)) done = axpy(done, prow, -*v);
        }
        out.pivot_rows.push_back(std::move(prow));
        out.pivot_cols.push_back(col);
    }
    for (size_t r = 0; r < active.size(); ++r)
        if (!settled[r]) out.spent_rows.push_back(std::move(active[r]));
    return out;
}

}  // namespace

int rank(const QMatrix& m) { return static_cast<int>(eliminate(m, nullptr).pivot_cols.size()); }

std::vector<QVector> kernel_basis(const QMatrix& m) {
    Elimination e = eliminate(m, nullptr);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    std::vector<QVector> basis;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        QVector v(m.cols(), Rational(0));
        v[free_col] = Rational(1);
        for (size_t r = 0; r < e.pivot_rows.size(); ++r) {
            if (const Rational* a = find_col(e.pivot_rows[r], free_col))
                v[e.pivot_cols[r]] = -*a;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve: length(b) != rows");
    Elimination e = eliminate(m, &b);
    const int sentinel = m.cols();
    for (const Row& row : e.spent_rows) {
        // spent rows carry no matrix columns; a leftover b entry means b is
        // outside the image
        if (!row.empty()) return std::nullopt;
    }
    QVector x(m.cols(), Rational(0));
    for (size_t r = 0; r < e.pivot_rows.size(); ++r) {
        if (const Rational* v = find_col(e.pivot_rows[r], sentinel)) x[e.pivot_cols[r]] = *v;
    }
    return x;
}

}  // namespace loday
