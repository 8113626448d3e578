#include "loday/deformation.hpp"

#include <sstream>

namespace loday {

namespace {

// Convolution of arity-1 series: (A o B)_n = sum_{i+j=n} A_i o_1 B_j.
std::vector<Element> series_compose1(const OperadOps& ops, const std::vector<Element>& a,
                                     const std::vector<Element>& b) {
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<Element> out;
    out.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        Element acc = ops.zero(1);
        for (int i = 0; i <= k; ++i) {
            if (a[i].is_zero() || b[k - i].is_zero()) continue;
            acc += ops.partial_compose(a[i], b[k - i], 1);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

void check_deformation_shape(const OperadOps& ops, const TruncatedDeformation& def) {
    if (static_cast<int>(def.terms.size()) != def.order + 1)
        throw std::invalid_argument("deformation: terms must run from order 0 to N");
    if (!(def.terms[0] == def.base.pi))
        throw std::invalid_argument("deformation: pi_0 must equal the base multiplication");
    for (const Element& t : def.terms)
        if (t.arity() != 2 || t.family() != ops.family() || t.in_dim() != ops.dim())
            throw std::invalid_argument("deformation: terms must be arity-2 in the base context");
}

void check_automorphism_shape(const OperadOps& ops, const FormalAutomorphism& phi) {
    if (static_cast<int>(phi.terms.size()) != phi.order + 1)
        throw std::invalid_argument("automorphism: terms must run from order 0 to N");
    if (!(phi.terms[0] == ops.identity()))
        throw std::invalid_argument("automorphism: phi_0 must be the identity");
    for (const Element& t : phi.terms)
        if (t.arity() != 1 || t.family() != ops.family() || t.in_dim() != ops.dim())
            throw std::invalid_argument("automorphism: terms must be arity-1 in the base context");
}

}  // namespace

TruncatedDeformation constant_deformation(const AlgebraSpec& base, int order) {
    TruncatedDeformation def{base, order, {}};
    def.terms.push_back(base.pi);
    for (int k = 1; k <= order; ++k) def.terms.push_back(Element(base.family, 2, base.dim, base.dim));
    return def;
}

FormalAutomorphism identity_automorphism(ShapeFamily fam, int dim, int order) {
    FormalAutomorphism phi{fam, dim, order, {}};
    phi.terms.push_back(Element::identity(fam, dim));
    for (int k = 1; k <= order; ++k) phi.terms.push_back(Element(fam, 1, dim, dim));
    return phi;
}

DeformationCheck is_deformation(const OperadOps& ops, const TruncatedDeformation& def, int upto) {
    check_deformation_shape(ops, def);
    if (upto > def.order) throw std::invalid_argument("is_deformation: order exceeds truncation");
    for (int n = 0; n <= upto; ++n) {
        Element sum = ops.zero(3);
        for (int i = 0; i <= n; ++i) {
            if (def.terms[i].is_zero() || def.terms[n - i].is_zero()) continue;
            sum += ops.circle(def.terms[i], def.terms[n - i]);
        }
        if (auto e = sum.first_nonzero()) {
            return {false, n, describe_entry(sum, *e).str()};
        }
    }
    return {};
}

MaurerCartanCheck mc_check(const OperadOps& ops, const AlgebraSpec& base,
                           const Degree0Series& gamma) {
    // Here the series carries arity-2 coefficients (gamma lives in degree 1
    // of the shifted complex).
    const int order = gamma.order;
    TruncatedDeformation def = constant_deformation(base, order);
    for (int k = 1; k <= order; ++k) def.terms[k] = gamma.terms[k - 1];

    MaurerCartanCheck out;
    out.deformation_route = is_deformation(ops, def, order).ok;

    out.mc_route = true;
    const Rational half(1, 2);
    for (int k = 1; k <= order && out.mc_route; ++k) {
        Element lhs = ops.differential(base.pi, def.terms[k]);
        Element acc = ops.zero(3);
        for (int i = 1; i <= k - 1; ++i) {
            if (def.terms[i].is_zero() || def.terms[k - i].is_zero()) continue;
            acc += ops.lie_bracket(def.terms[i], def.terms[k - i]);
        }
        acc.scale(half);
        lhs += acc;
        if (!lhs.is_zero()) out.mc_route = false;
    }
    out.agree = (out.deformation_route == out.mc_route);
    return out;
}

Infinitesimal infinitesimal(const OperadOps& ops, const TruncatedDeformation& def) {
    check_deformation_shape(ops, def);
    for (int p = 1; p <= def.order; ++p) {
        if (!def.terms[p].is_zero()) {
            Infinitesimal out{false, p, def.terms[p], false};
            out.cocycle = ops.differential(def.base.pi, def.terms[p]).is_zero();
            return out;
        }
    }
    return Infinitesimal{true, 0, ops.zero(2), true};
}

TruncatedDeformation apply_equivalence(const OperadOps& ops, const FormalAutomorphism& phi,
                                       const TruncatedDeformation& def) {
    check_deformation_shape(ops, def);
    check_automorphism_shape(ops, phi);
    if (phi.order != def.order) throw std::invalid_argument("apply_equivalence: orders differ");
    const int n = def.order;

    // A_t = {pi_t}{phi_t, phi_t}
    std::vector<Element> a;
    a.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        Element acc = ops.zero(2);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; i + j <= k; ++j) {
                const Element& pi_i = def.terms[i];
                const Element& phi_j = phi.terms[j];
                const Element& phi_k = phi.terms[k - i - j];
                if (pi_i.is_zero() || phi_j.is_zero() || phi_k.is_zero()) continue;
                acc += ops.brace(pi_i, {phi_j, phi_k});
            }
        a.push_back(std::move(acc));
    }

    // pi'_t = phi_t^{-1} o A_t
    FormalAutomorphism inv = invert_automorphism(ops, phi);
    std::vector<Element> result;
    result.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        Element acc = ops.zero(2);
        for (int i = 0; i <= k; ++i) {
            if (inv.terms[i].is_zero() || a[k - i].is_zero()) continue;
            acc += ops.partial_compose(inv.terms[i], a[k - i], 1);
        }
        result.push_back(std::move(acc));
    }

    TruncatedDeformation out{def.base, n, std::move(result)};
    if (!(out.terms[0] == def.base.pi))
        throw std::logic_error("apply_equivalence: order-0 term drifted from the base");
    return out;
}

FormalAutomorphism invert_automorphism(const OperadOps& ops, const FormalAutomorphism& phi) {
    check_automorphism_shape(ops, phi);
    FormalAutomorphism inv = identity_automorphism(phi.family, phi.dim, phi.order);
    for (int k = 1; k <= phi.order; ++k) {
        Element acc = ops.zero(1);
        for (int j = 1; j <= k; ++j) {
            if (phi.terms[j].is_zero() || inv.terms[k - j].is_zero()) continue;
            acc += ops.partial_compose(phi.terms[j], inv.terms[k - j], 1);
        }
        inv.terms[k] = -acc;
    }
    return inv;
}

FormalAutomorphism compose_automorphisms(const OperadOps& ops, const FormalAutomorphism& a,
                                         const FormalAutomorphism& b) {
    check_automorphism_shape(ops, a);
    check_automorphism_shape(ops, b);
    if (a.order != b.order) throw std::invalid_argument("compose_automorphisms: orders differ");
    FormalAutomorphism out{a.family, a.dim, a.order, series_compose1(ops, a.terms, b.terms)};
    return out;
}

Element obstruction(const OperadOps& ops, const TruncatedDeformation& def) {
    check_deformation_shape(ops, def);
    const int n = def.order;
    Element acc = ops.zero(3);
    for (int i = 1; i <= n; ++i) {
        int j = n + 1 - i;
        if (j < 1 || j > n) continue;
        if (def.terms[i].is_zero() || def.terms[j].is_zero()) continue;
        acc += ops.circle(def.terms[i], def.terms[j]);
    }
    return acc;
}

ExtendResult extend_deformation(const OperadOps& ops, const TruncatedDeformation& def) {
    DeformationCheck valid = is_deformation(ops, def, def.order);
    if (!valid.ok)
        throw std::invalid_argument("extend_deformation: input fails the deformation equations at order " +
                                    std::to_string(valid.failed_order));
    ExtendResult out{std::nullopt, obstruction(ops, def), false};
    out.obstruction_is_cocycle = ops.differential(def.base.pi, out.obstruction_sum).is_zero();

    QMatrix dmat = ops.differential_matrix(def.base.pi, 2);
    Element target = -out.obstruction_sum;
    if (auto x = solve(dmat, target.to_vector())) {
        TruncatedDeformation ext{def.base, def.order + 1, def.terms};
        ext.terms.push_back(
            Element::from_vector(ops.family(), 2, ops.dim(), ops.dim(), *x));
        out.extended = std::move(ext);
    }
    return out;
}

std::optional<FormalAutomorphism> are_equivalent(const OperadOps& ops,
                                                 const TruncatedDeformation& def1,
                                                 const TruncatedDeformation& def2, int order) {
    check_deformation_shape(ops, def1);
    check_deformation_shape(ops, def2);
    if (!(def1.terms[0] == def2.terms[0]))
        throw std::invalid_argument("are_equivalent: deformations of different multiplications");
    if (order > def1.order || order > def2.order)
        throw std::invalid_argument("are_equivalent: order exceeds the truncations");

    const Element& pi = def1.base.pi;
    QMatrix dmat = ops.differential_matrix(pi, 1);
    FormalAutomorphism phi = identity_automorphism(ops.family(), ops.dim(), order);

    // Order n: d_pi(phi_n) = sum_{i<n} phi_i o pi'_{n-i}
    //                        - sum_{i+j+k=n, j,k<n} {pi_i}{phi_j, phi_k}.
    for (int n = 1; n <= order; ++n) {
        Element target = ops.zero(2);
        for (int i = 0; i < n; ++i) {
            if (phi.terms[i].is_zero() || def2.terms[n - i].is_zero()) continue;
            target += ops.partial_compose(phi.terms[i], def2.terms[n - i], 1);
        }
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) {
                int k = n - i - j;
                if (j == n || k == n) continue;
                if (def1.terms[i].is_zero() || phi.terms[j].is_zero() || phi.terms[k].is_zero())
                    continue;
                target -= ops.brace(def1.terms[i], {phi.terms[j], phi.terms[k]});
            }
        auto x = solve(dmat, target.to_vector());
        if (!x) return std::nullopt;
        phi.terms[n] = Element::from_vector(ops.family(), 1, ops.dim(), ops.dim(), *x);
    }
    return phi;
}

TruncatedDeformation universal_deformation(const OperadOps& ops, const AlgebraSpec& base,
                                           const Element& d1, const Element& d1bar, int order) {
    if (d1.arity() != 1 || d1bar.arity() != 1)
        throw std::invalid_argument("universal_deformation: D and Dbar must have arity 1");
    const Element& pi = base.pi;
    if (auto e = ops.differential(pi, d1).first_nonzero())
        throw std::invalid_argument("universal_deformation: D is not a 1-cocycle at " +
                                    describe_entry(ops.zero(2), *e).str());
    if (auto e = ops.differential(pi, d1bar).first_nonzero())
        throw std::invalid_argument("universal_deformation: Dbar is not a 1-cocycle at " +
                                    describe_entry(ops.zero(2), *e).str());
    Element comm = ops.circle(d1, d1bar) - ops.circle(d1bar, d1);
    if (auto e = comm.first_nonzero())
        throw std::invalid_argument("universal_deformation: D o Dbar != Dbar o D at " +
                                    describe_entry(comm, *e).str());

    TruncatedDeformation def{base, order, {}};
    def.terms.push_back(pi);
    Element dp = ops.identity(), dbp = ops.identity();
    for (int k = 1; k <= order; ++k) {
        dp = ops.partial_compose(dp, d1, 1);
        dbp = ops.partial_compose(dbp, d1bar, 1);
        Element term = ops.cup(pi, dp, dbp);
        term.scale(-inverse_factorial(k));
        def.terms.push_back(std::move(term));
    }
    return def;
}

FormalAutomorphism exp_series(const OperadOps& ops, const Degree0Series& x) {
    const int n = x.order;
    if (static_cast<int>(x.terms.size()) != n)
        throw std::invalid_argument("exp_series: need exactly `order` coefficients");

    // Series with zero constant term: s[0] = 0, s[k] = x_k.
    std::vector<Element> s(n + 1, ops.zero(1));
    for (int k = 1; k <= n; ++k) s[k] = x.terms[k - 1];

    FormalAutomorphism out = identity_automorphism(x.family, x.dim, n);
    std::vector<Element> pow = s;  // x^(o 1)
    for (int j = 1; j <= n; ++j) {
        Rational c = inverse_factorial(j);
        for (int k = 1; k <= n; ++k) {
            Element t = pow[k];
            t.scale(c);
            out.terms[k] += t;
        }
        if (j < n) pow = series_compose1(ops, pow, s);
    }
    return out;
}

Degree0Series log_series(const OperadOps& ops, const FormalAutomorphism& h) {
    check_automorphism_shape(ops, h);
    const int n = h.order;
    std::vector<Element> y(n + 1, ops.zero(1));
    for (int k = 1; k <= n; ++k) y[k] = h.terms[k];

    Degree0Series out{h.family, h.dim, n, std::vector<Element>(n, ops.zero(1))};
    std::vector<Element> pow = y;
    for (int j = 1; j <= n; ++j) {
        Rational c(j % 2 == 1 ? 1 : -1, j);
        for (int k = 1; k <= n; ++k) {
            Element t = pow[k];
            t.scale(c);
            out.terms[k - 1] += t;
        }
        if (j < n) pow = series_compose1(ops, pow, y);
    }
    return out;
}

}  // namespace loday
