#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "loday/rational.hpp"

namespace loday {

using QVector = std::vector<Rational>;

/// Sparse matrix over Q. Stored entries are nonzero; absent means 0.
class QMatrix {
public:
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("QMatrix: negative size");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rational& v) {
        check(r, c);
        if (v.is_zero())
            entries_.erase({r, c});
        else
            entries_[{r, c}] = v;
    }

    Rational get(int r, int c) const {
        check(r, c);
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Rational(0) : it->second;
    }

    size_t nonzero_count() const { return entries_.size(); }
    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

    QVector apply(const QVector& x) const;

private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("QMatrix: index out of bounds");
    }
    int rows_, cols_;
    std::map<std::pair<int, int>, Rational> entries_;
};

// Exact row rank over Q.
int rank(const QMatrix& m);

// Exact basis of { x : Mx = 0 }; size = cols - rank.
std::vector<QVector> kernel_basis(const QMatrix& m);

// Some x with Mx = b, or nullopt when b is not in the column space.
// Throws on length(b) != rows.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

}  // namespace loday
