#pragma once

#include <optional>
#include <vector>

#include "loday/qmatrix.hpp"
#include "loday/rational.hpp"
#include "loday/shapes.hpp"

namespace loday {

long ipow(long base, int exp);

/// A member of Hom(K[U_n] (x) A^(x)n, A) (or with target M when
/// out_dim != in_dim): a tensor indexed by (shape, input tuple, output).
/// Flat layout (shape order, tuple lexicographic, output index); this is the
/// canonical basis order used by every matrix in the project.
class Element {
public:
    Element(ShapeFamily fam, int arity, int in_dim, int out_dim);

    /// The arity-1 element with coeffs(shape; i -> i) = 1.
    static Element identity(ShapeFamily fam, int d);

    ShapeFamily family() const { return family_; }
    int arity() const { return arity_; }
    int degree() const { return arity_ - 1; }
    int in_dim() const { return in_dim_; }
    int out_dim() const { return out_dim_; }
    int shape_count() const { return shape_count_; }
    long tuple_count() const { return tuple_count_; }
    long dimension() const { return static_cast<long>(data_.size()); }

    const Rational& at(int shape, long tuple, int out) const {
        return data_[(shape * tuple_count_ + tuple) * out_dim_ + out];
    }
    Rational& at(int shape, long tuple, int out) {
        return data_[(shape * tuple_count_ + tuple) * out_dim_ + out];
    }

    // Input tuples are vectors of 1-based basis indices; the leftmost input
    // is the most significant digit.
    long tuple_of(const std::vector<int>& digits) const;
    std::vector<int> digits_of(long tuple) const;

    bool is_zero() const;
    bool same_context(const Element& o) const {
        return family_ == o.family_ && in_dim_ == o.in_dim_ && out_dim_ == o.out_dim_;
    }

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element operator-() const;
    Element& scale(const Rational& c);
    bool operator==(const Element& o) const;

    QVector to_vector() const { return data_; }
    static Element from_vector(ShapeFamily fam, int arity, int in_dim, int out_dim,
                               const QVector& v);

    struct Entry {
        int shape;
        long tuple;
        int out;
        Rational value;
    };
    std::optional<Entry> first_nonzero() const;

private:
    ShapeFamily family_;
    int arity_, in_dim_, out_dim_, shape_count_;
    long tuple_count_;
    std::vector<Rational> data_;
};

/// Human-readable form of a nonzero tensor entry.
struct Witness {
    std::string shape;
    std::vector<int> inputs;  // 1-based basis indices
    int output;               // 1-based
    Rational value;
    std::string str() const;
};
Witness describe_entry(const Element& e, const Element::Entry& entry);

}  // namespace loday
