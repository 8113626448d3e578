#include "loday/twist.hpp"

#include <sstream>

namespace loday {

namespace {

OperadOps raw_ops(const TwistPair& tw) { return OperadOps(tw.alpha.family(), tw.alpha.in_dim()); }

std::string entry_text(const Element& context_like, const Element::Entry& e) {
    return describe_entry(context_like, e).str();
}

}  // namespace

CheckResult twist_pair_commutes(const TwistPair& tw) {
    if (tw.alpha.arity() != 1 || tw.beta.arity() != 1 || !tw.alpha.same_context(tw.beta))
        return {false, "twist maps must be arity-1 elements of one context"};
    OperadOps ops = raw_ops(tw);
    Element diff = ops.circle(tw.alpha, tw.beta) - ops.circle(tw.beta, tw.alpha);
    if (auto e = diff.first_nonzero())
        return {false, "alpha o beta != beta o alpha at " + entry_text(diff, *e)};
    return {};
}

CheckResult in_twisted_subspace(const Element& f, const TwistPair& tw) {
    OperadOps ops = raw_ops(tw);
    const int n = f.arity();
    Element a_side = ops.gamma(f, std::vector<Element>(n, tw.alpha)) - ops.circle(tw.alpha, f);
    if (auto e = a_side.first_nonzero())
        return {false, "gamma(f; alpha...) != alpha o f at " + entry_text(a_side, *e)};
    Element b_side = ops.gamma(f, std::vector<Element>(n, tw.beta)) - ops.circle(tw.beta, f);
    if (auto e = b_side.first_nonzero())
        return {false, "gamma(f; beta...) != beta o f at " + entry_text(b_side, *e)};
    return {};
}

std::vector<Element> twisted_subspace_basis(const TwistPair& tw, ShapeFamily fam, int dim,
                                            int arity) {
    OperadOps ops(fam, dim);
    Element probe = ops.zero(arity);
    const long n = probe.dimension();
    QMatrix constraints(static_cast<int>(2 * n), static_cast<int>(n));
    QVector unit(n, Rational(0));
    for (long col = 0; col < n; ++col) {
        unit[col] = Rational(1);
        Element e = Element::from_vector(fam, arity, dim, dim, unit);
        QVector a =
            (ops.gamma(e, std::vector<Element>(arity, tw.alpha)) - ops.circle(tw.alpha, e))
                .to_vector();
        QVector b =
            (ops.gamma(e, std::vector<Element>(arity, tw.beta)) - ops.circle(tw.beta, e))
                .to_vector();
        for (long r = 0; r < n; ++r) {
            if (!a[r].is_zero()) constraints.set(static_cast<int>(r), static_cast<int>(col), a[r]);
            if (!b[r].is_zero())
                constraints.set(static_cast<int>(n + r), static_cast<int>(col), b[r]);
        }
        unit[col] = Rational(0);
    }
    std::vector<Element> basis;
    for (const QVector& v : kernel_basis(constraints))
        basis.push_back(Element::from_vector(fam, arity, dim, dim, v));
    return basis;
}

YauResult yau_twist(const Element& pi, const TwistPair& tw) {
    if (pi.arity() != 2) return {std::nullopt, "pi must have arity 2"};
    OperadOps ops = raw_ops(tw);
    if (CheckResult c = twist_pair_commutes(tw); !c.ok) return {std::nullopt, c.detail};
    if (auto e = ops.multiplication_defect(pi))
        return {std::nullopt, "pi is not a multiplication at " + entry_text(ops.zero(3), *e)};
    for (const auto& [name, phi] : {std::pair<const char*, const Element*>{"alpha", &tw.alpha},
                                    {"beta", &tw.beta}}) {
        Element defect = ops.circle(*phi, pi) - ops.brace(pi, {*phi, *phi});
        if (auto e = defect.first_nonzero())
            return {std::nullopt, std::string(name) + " is not an algebra morphism at " +
                                      entry_text(defect, *e)};
    }

    Element twisted = ops.brace(pi, {tw.alpha, tw.beta});
    if (CheckResult c = in_twisted_subspace(twisted, tw); !c.ok)
        return {std::nullopt, "twisted product left the twisted subspace: " + c.detail};
    OperadOps twisted_ops(pi.family(), pi.in_dim(), tw.alpha, tw.beta);
    if (auto e = twisted_ops.multiplication_defect(twisted))
        return {std::nullopt, "twisted product is not a twisted multiplication at " +
                                  entry_text(ops.zero(3), *e)};
    return {twisted, ""};
}

YauResult yau_twist_check(const AlgebraSpec& untwisted, const TwistPair& tw,
                          AlgebraSpec* out_spec) {
    YauResult r = yau_twist(untwisted.pi, tw);
    if (r.twisted_pi && out_spec) {
        *out_spec = untwisted;
        out_spec->pi = *r.twisted_pi;
        out_spec->alpha = tw.alpha;
        out_spec->beta = tw.beta;
    }
    return r;
}

}  // namespace loday
