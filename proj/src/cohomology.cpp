#include "loday/cohomology.hpp"

#include <sstream>

namespace loday {

Element zero_cochain(const RepresentationSpec& rep, int arity) {
    return Element(rep.base.family, arity, rep.base.dim, rep.mdim);
}

Element coboundary(const RepresentationSpec& rep, const Element& f) {
    const AlgebraSpec& A = rep.base;
    const ShapeFamily fam = A.family;
    const int d = A.dim, m = rep.mdim, n = f.arity();
    if (f.family() != fam || f.in_dim() != d || f.out_dim() != m)
        throw std::invalid_argument("coboundary: cochain does not match the representation");

    Element out(fam, n + 1, d, m);
    const RouteTable& head = routes(fam, 2, n, 2);  // R_0(2;1,n), R_2(2;1,n)
    const RouteTable& tail = routes(fam, 2, n, 1);  // R_0(2;n,1), R_1(2;n,1)
    std::vector<const RouteTable*> mid(n + 1, nullptr);
    for (int i = 1; i <= n; ++i) mid[i] = &routes(fam, n, 2, i);

    const long tuples = out.tuple_count();
    for (int r = 0; r < out.shape_count(); ++r) {
        for (long t = 0; t < tuples; ++t) {
            std::vector<int> x = out.digits_of(t);  // n+1 digits, 1-based

            // theta1(R_0(2;1,n) r; a_1, f(R_2(2;1,n) r; a_2..a_{n+1}))
            {
                std::vector<int> rest(x.begin() + 1, x.end());
                long ft = f.tuple_of(rest);
                for (const auto& [s, c] : head.ri[r]) {
                    Rational rc(c);
                    for (int z = 0; z < m; ++z) {
                        const Rational& fv = f.at(s, ft, z);
                        if (fv.is_zero()) continue;
                        Rational w = rc * fv;
                        for (int o = 0; o < m; ++o)
                            out.at(r, t, o) += w * rep.theta1.at(head.r0[r], x[0] - 1, z, o);
                    }
                }
            }

            // (-1)^i f(R_0(n;..2..) r; ..., pi(R_i(n;..2..) r; a_i, a_{i+1}), ...)
            for (int i = 1; i <= n; ++i) {
                const bool neg = (i % 2 != 0);
                const long pt = static_cast<long>(x[i - 1] - 1) * d + (x[i] - 1);
                std::vector<int> inner(n);
                for (int k = 0; k < i - 1; ++k) inner[k] = x[k];
                for (int k = i; k < n; ++k) inner[k] = x[k + 1];
                for (const auto& [s, c] : mid[i]->ri[r]) {
                    Rational rc(c);
                    for (int z = 0; z < d; ++z) {
                        const Rational& pv = A.pi.at(s, pt, z);
                        if (pv.is_zero()) continue;
                        Rational w = rc * pv;
                        inner[i - 1] = z + 1;
                        long ft = f.tuple_of(inner);
                        for (int o = 0; o < m; ++o) {
                            Rational add = w * f.at(mid[i]->r0[r], ft, o);
                            if (neg)
                                out.at(r, t, o) -= add;
                            else
                                out.at(r, t, o) += add;
                        }
                    }
                }
            }

            // (-1)^{n+1} theta2(R_0(2;n,1) r; f(R_1(2;n,1) r; a_1..a_n), a_{n+1})
            {
                const bool neg = ((n + 1) % 2 != 0);
                std::vector<int> front(x.begin(), x.end() - 1);
                long ft = f.tuple_of(front);
                for (const auto& [s, c] : tail.ri[r]) {
                    Rational rc(c);
                    for (int z = 0; z < m; ++z) {
                        const Rational& fv = f.at(s, ft, z);
                        if (fv.is_zero()) continue;
                        Rational w = rc * fv;
                        for (int o = 0; o < m; ++o) {
                            Rational add = w * rep.theta2.at(tail.r0[r], z, x[n] - 1, o);
                            if (neg)
                                out.at(r, t, o) -= add;
                            else
                                out.at(r, t, o) += add;
                        }
                    }
                }
            }
        }
    }
    return out;
}

QMatrix coboundary_matrix(const RepresentationSpec& rep, int arity) {
    Element probe = zero_cochain(rep, arity);
    Element image = zero_cochain(rep, arity + 1);
    QMatrix mat(static_cast<int>(image.dimension()), static_cast<int>(probe.dimension()));
    QVector unit(probe.dimension(), Rational(0));
    for (long col = 0; col < probe.dimension(); ++col) {
        unit[col] = Rational(1);
        Element e = Element::from_vector(rep.base.family, arity, rep.base.dim, rep.mdim, unit);
        QVector v = coboundary(rep, e).to_vector();
        for (long row = 0; row < static_cast<long>(v.size()); ++row)
            if (!v[row].is_zero())
                mat.set(static_cast<int>(row), static_cast<int>(col), v[row]);
        unit[col] = Rational(0);
    }
    return mat;
}

CohomologyDims cohomology_dims(const RepresentationSpec& rep, int n) {
    if (n < 1) throw std::invalid_argument("cohomology_dims: n must be >= 1");
    const long dim_cn = zero_cochain(rep, n).dimension();
    const long z = dim_cn - rank(coboundary_matrix(rep, n));
    const long b = (n == 1) ? 0 : rank(coboundary_matrix(rep, n - 1));
    return {z, b, z - b};
}

std::vector<Element> derivation_basis(const RepresentationSpec& rep) {
    std::vector<Element> out;
    for (const QVector& v : kernel_basis(coboundary_matrix(rep, 1)))
        out.push_back(Element::from_vector(rep.base.family, 1, rep.base.dim, rep.mdim, v));
    return out;
}

std::optional<Element> solve_coboundary(const RepresentationSpec& rep, int n,
                                        const Element& target) {
    if (target.arity() != n + 1)
        throw std::invalid_argument("solve_coboundary: target must live in C^{n+1}");
    auto x = solve(coboundary_matrix(rep, n), target.to_vector());
    if (!x) return std::nullopt;
    return Element::from_vector(rep.base.family, n, rep.base.dim, rep.mdim, *x);
}

CheckResult validate_extension(const ExtensionSpec& ext) {
    const int d = ext.adim, m = ext.mdim, D = d + m;
    if (ext.total.dim != D) return {false, "total dimension != adim + mdim"};
    if (static_cast<int>(ext.section.size()) != D ||
        (D > 0 && static_cast<int>(ext.section[0].size()) != d))
        return {false, "section must be (adim+mdim) x adim"};

    // j o s = id on A
    for (int a = 0; a < d; ++a)
        for (int r = 0; r < d; ++r) {
            Rational expect = (r == a) ? Rational(1) : Rational(0);
            if (ext.section[r][a] != expect) return {false, "section is not split by j"};
        }

    // M carries the zero multiplication inside E
    const auto& u2 = enumerate(ext.total.family, 2);
    for (size_t s = 0; s < u2.size(); ++s)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                QVector ei(D, Rational(0)), ej(D, Rational(0));
                ei[d + i] = Rational(1);
                ej[d + j] = Rational(1);
                QVector v = product(ext.total, static_cast<int>(s), ei, ej);
                for (const Rational& c : v)
                    if (!c.is_zero()) return {false, "pi_E does not vanish on M x M"};
            }

    // j is an algebra morphism: the A-part of pi_E only sees A-parts
    for (size_t s = 0; s < u2.size(); ++s)
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j) {
                if (i < d && j < d) continue;
                QVector ei(D, Rational(0)), ej(D, Rational(0));
                ei[i] = Rational(1);
                ej[j] = Rational(1);
                QVector v = product(ext.total, static_cast<int>(s), ei, ej);
                for (int k = 0; k < d; ++k)
                    if (!v[k].is_zero()) return {false, "projection to A is not a morphism"};
            }
    return {};
}

ExtensionSpec extension_from_cocycle(const AlgebraSpec& spec, const RepresentationSpec& rep,
                                     const Element& f) {
    if (f.arity() != 2 || f.in_dim() != spec.dim || f.out_dim() != rep.mdim)
        throw std::invalid_argument("extension_from_cocycle: f must lie in C^2(A, M)");
    if (!coboundary(rep, f).is_zero())
        throw std::invalid_argument("extension_from_cocycle: f is not a 2-cocycle");

    AlgebraSpec total = semidirect_product(spec, rep);
    const int d = spec.dim, m = rep.mdim, D = d + m;
    for (int s = 0; s < total.pi.shape_count(); ++s)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                long t = static_cast<long>(i) * D + j;
                long tf = static_cast<long>(i) * d + j;
                for (int k = 0; k < m; ++k) total.pi.at(s, t, d + k) += f.at(s, tf, k);
            }

    DenseMatrix section = zero_matrix(D, d);
    for (int a = 0; a < d; ++a) section[a][a] = Rational(1);
    return ExtensionSpec{std::move(total), d, m, std::move(section)};
}

std::pair<Element, RepresentationSpec> cocycle_from_extension(const ExtensionSpec& ext) {
    const int d = ext.adim, m = ext.mdim, D = d + m;
    // The section must split the projection; everything else about the
    // extension is assumed validated.
    for (int a = 0; a < d; ++a)
        for (int r = 0; r < d; ++r) {
            Rational expect = (r == a) ? Rational(1) : Rational(0);
            if (ext.section[r][a] != expect)
                throw std::invalid_argument("cocycle_from_extension: section is not a splitting");
        }

    // Reconstruct pi_A(r; a, b) = j(pi_E(r; s a, s b)) and read the cocycle
    // off the M-part of pi_E(r; s a, s b) - s(pi_A(r; a, b)).
    AlgebraSpec base = make_algebra(ext.total.family, d);
    Element cocycle(ext.total.family, 2, d, m);
    for (int s = 0; s < base.pi.shape_count(); ++s)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                QVector sa(D, Rational(0)), sb(D, Rational(0));
                for (int r = 0; r < D; ++r) {
                    sa[r] = ext.section[r][a];
                    sb[r] = ext.section[r][b];
                }
                QVector v = product(ext.total, s, sa, sb);
                QVector apart(v.begin(), v.begin() + d);
                QVector lift = matrix_apply(ext.section, apart);
                long t = static_cast<long>(a) * d + b;
                for (int k = 0; k < d; ++k) base.pi.at(s, t, k) = apart[k];
                for (int k = 0; k < m; ++k) cocycle.at(s, t, k) = v[d + k] - lift[d + k];
            }

    // Induced representation theta1(r; a, n) = pi_E(r; s(a), i(n)).
    RepresentationSpec rep = trivial_representation(base, m);
    for (int s = 0; s < base.pi.shape_count(); ++s) {
        for (int a = 0; a < d; ++a)
            for (int n = 0; n < m; ++n) {
                QVector sa(D, Rational(0)), in(D, Rational(0));
                for (int r = 0; r < D; ++r) sa[r] = ext.section[r][a];
                in[d + n] = Rational(1);
                QVector v1 = product(ext.total, s, sa, in);
                QVector v2 = product(ext.total, s, in, sa);
                for (int k = 0; k < d; ++k)
                    if (!v1[k].is_zero() || !v2[k].is_zero())
                        throw std::invalid_argument(
                            "cocycle_from_extension: M is not an ideal of the total algebra");
                for (int k = 0; k < m; ++k) {
                    rep.theta1.at(s, a, n, k) = v1[d + k];
                    rep.theta2.at(s, n, a, k) = v2[d + k];
                }
            }
    }
    return {std::move(cocycle), std::move(rep)};
}

std::optional<Element> extensions_equivalent(const RepresentationSpec& rep,
                                             const ExtensionSpec& e1, const ExtensionSpec& e2) {
    auto [f1, rep1] = cocycle_from_extension(e1);
    auto [f2, rep2] = cocycle_from_extension(e2);
    Element diff = f1 - f2;
    return solve_coboundary(rep, 1, diff);
}

}  // namespace loday
