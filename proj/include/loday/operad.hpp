#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "loday/element.hpp"

namespace loday {

/// The composition calculus of a shape operad O(n) = Hom(K[U_n] (x) A^(x)n, A)
/// for one family and one dimension. When a twist pair (alpha, beta) is
/// attached, every composition routes through the twisted rule
///   f o'_i g = gamma(f; alpha^(n-1), ..., g at slot i, ..., beta^(n-1)),
/// so braces, circle products, brackets, cup and the differential all follow
/// the twisted operad.
class OperadOps {
public:
    OperadOps(ShapeFamily fam, int dim);
    OperadOps(ShapeFamily fam, int dim, Element alpha, Element beta);

    ShapeFamily family() const { return family_; }
    int dim() const { return dim_; }
    bool twisted() const { return twist_.has_value(); }
    const Element& alpha() const { return twist_->first; }
    const Element& beta() const { return twist_->second; }

    Element identity() const { return Element::identity(family_, dim_); }
    Element zero(int arity) const { return Element(family_, arity, dim_, dim_); }

    Element partial_compose(const Element& f, const Element& g, int i) const;

    /// gamma(f; g_1, ..., g_k) = ((f o_k g_k) o_{k-1} g_{k-1}) ... o_1 g_1.
    Element gamma(const Element& f, const std::vector<Element>& gs) const;

    /// {f}{g_1,...,g_p}: signed sum over all order-preserving substitutions.
    /// More arguments than slots yields the zero element; `overflow` reports it.
    Element brace(const Element& f, const std::vector<Element>& gs,
                  bool* overflow = nullptr) const;

    /// f o g = sum_i (-1)^{(i-1)|g|} f o_i g.
    Element circle(const Element& f, const Element& g) const;

    /// [f, g] = f o g - (-1)^{|f||g|} g o f.
    Element lie_bracket(const Element& f, const Element& g) const;

    /// f . g = (-1)^{|f|+1} {pi}{f, g}.
    Element cup(const Element& pi, const Element& f, const Element& g) const;

    /// d_pi(f) = pi o f - (-1)^{|f|} f o pi. When asked, reports whether pi
    /// actually is a multiplication; the result is computed either way.
    Element differential(const Element& pi, const Element& f,
                         bool* pi_is_multiplication = nullptr) const;

    /// First nonzero entry of pi o pi, or nullopt when pi is a multiplication.
    std::optional<Element::Entry> multiplication_defect(const Element& pi) const;

    /// Matrix of d_pi : O(arity) -> O(arity+1) in the canonical basis.
    QMatrix differential_matrix(const Element& pi, int arity) const;

    /// k-th circle power of an arity-1 element (k = 0 gives the identity).
    Element power(const Element& a, int k) const;

private:
    Element raw_compose(const Element& f, const Element& g, int i) const;
    Element raw_gamma(const Element& f, const std::vector<Element>& gs) const;
    void check_operadic(const Element& e, const char* who) const;

    ShapeFamily family_;
    int dim_;
    std::optional<std::pair<Element, Element>> twist_;
};

Element random_element(ShapeFamily fam, int arity, int in_dim, int out_dim,
                       std::mt19937_64& rng);

/// Randomized exact check of the sequential and parallel composition axioms
/// and the unit laws. The sampler lets callers restrict to a subspace (the
/// twisted operads need membership).
struct AxiomReport {
    bool ok = true;
    long checks = 0;
    std::vector<std::string> violations;
};
AxiomReport check_operad_axioms(
    const OperadOps& ops, int max_arity, int samples, unsigned seed,
    const std::function<Element(int, std::mt19937_64&)>& sampler = {});

}  // namespace loday
