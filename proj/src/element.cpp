#include "loday/element.hpp"

#include <sstream>

namespace loday {

long ipow(long base, int exp) {
    long r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

Element::Element(ShapeFamily fam, int arity, int in_dim, int out_dim)
    : family_(fam), arity_(arity), in_dim_(in_dim), out_dim_(out_dim) {
    if (arity < 1) throw std::invalid_argument("Element: arity must be >= 1");
    if (in_dim < 1 || out_dim < 1) throw std::invalid_argument("Element: dimensions must be >= 1");
    shape_count_ = static_cast<int>(enumerate(fam, arity).size());
    tuple_count_ = ipow(in_dim, arity);
    data_.assign(static_cast<size_t>(shape_count_) * tuple_count_ * out_dim_, Rational(0));
}

Element Element::identity(ShapeFamily fam, int d) {
    Element e(fam, 1, d, d);
    for (int i = 0; i < d; ++i) e.at(0, i, i) = Rational(1);
    return e;
}

long Element::tuple_of(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) != arity_)
        throw std::invalid_argument("tuple_of: wrong number of inputs");
    long t = 0;
    for (int x : digits) {
        if (x < 1 || x > in_dim_) throw std::out_of_range("tuple_of: basis index out of range");
        t = t * in_dim_ + (x - 1);
    }
    return t;
}

std::vector<int> Element::digits_of(long tuple) const {
    std::vector<int> d(arity_);
    for (int k = arity_ - 1; k >= 0; --k) {
        d[k] = static_cast<int>(tuple % in_dim_) + 1;
        tuple /= in_dim_;
    }
    return d;
}

bool Element::is_zero() const {
    for (const Rational& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

Element& Element::operator+=(const Element& o) {
    if (!same_context(o) || arity_ != o.arity_)
        throw std::invalid_argument("Element: context mismatch in +=");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (!same_context(o) || arity_ != o.arity_)
        throw std::invalid_argument("Element: context mismatch in -=");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Element Element::operator-() const {
    Element e = *this;
    for (Rational& v : e.data_) v = -v;
    return e;
}

Element& Element::scale(const Rational& c) {
    for (Rational& v : data_) v *= c;
    return *this;
}

bool Element::operator==(const Element& o) const {
    return family_ == o.family_ && arity_ == o.arity_ && in_dim_ == o.in_dim_ &&
           out_dim_ == o.out_dim_ && data_ == o.data_;
}

Element Element::from_vector(ShapeFamily fam, int arity, int in_dim, int out_dim,
                             const QVector& v) {
    Element e(fam, arity, in_dim, out_dim);
    if (v.size() != e.data_.size()) throw std::invalid_argument("from_vector: wrong length");
    e.data_ = v;
    return e;
}

std::optional<Element::Entry> Element::first_nonzero() const {
    for (size_t k = 0; k < data_.size(); ++k) {
        if (!data_[k].is_zero()) {
            long rest = static_cast<long>(k) / out_dim_;
            return Entry{static_cast<int>(rest / tuple_count_), rest % tuple_count_,
                         static_cast<int>(k % out_dim_), data_[k]};
        }
    }
    return std::nullopt;
}

std::string Witness::str() const {
    std::ostringstream os;
    os << "(" << shape << "; ";
    for (size_t i = 0; i < inputs.size(); ++i) os << (i ? "," : "") << "e" << inputs[i];
    os << ") -> e" << output << " coefficient " << value.str();
    return os.str();
}

Witness describe_entry(const Element& e, const Element::Entry& entry) {
    Witness w;
    w.shape = enumerate(e.family(), e.arity())[entry.shape].str();
    w.inputs = e.digits_of(entry.tuple);
    w.output = entry.out + 1;
    w.value = entry.value;
    return w;
}

}  // namespace loday
