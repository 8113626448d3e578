#include "loday/morphism_deformation.hpp"

#include <sstream>

namespace loday {

namespace {

void reject_twisted(const MorphismSpec& f) {
    if (f.source.twisted() || f.target.twisted())
        throw std::invalid_argument("morphism complex: twisted specs are not supported here");
}

}  // namespace

Element morphism_postcompose(const DenseMatrix& m, const Element& phi, int out_dim) {
    Element out(phi.family(), phi.arity(), phi.in_dim(), out_dim);
    for (int s = 0; s < phi.shape_count(); ++s)
        for (long t = 0; t < phi.tuple_count(); ++t)
            for (int o = 0; o < out_dim; ++o) {
                Rational acc(0);
                for (int k = 0; k < phi.out_dim(); ++k) {
                    if (m[o][k].is_zero()) continue;
                    acc += m[o][k] * phi.at(s, t, k);
                }
                if (!acc.is_zero()) out.at(s, t, o) = acc;
            }
    return out;
}

Element morphism_precompose(const Element& psi, const DenseMatrix& m, int in_dim) {
    const int n = psi.arity();
    Element out(psi.family(), n, in_dim, psi.out_dim());
    for (int s = 0; s < psi.shape_count(); ++s)
        for (long ta = 0; ta < out.tuple_count(); ++ta) {
            std::vector<int> a = out.digits_of(ta);
            for (long tb = 0; tb < psi.tuple_count(); ++tb) {
                std::vector<int> b = psi.digits_of(tb);
                Rational w(1);
                for (int k = 0; k < n && !w.is_zero(); ++k) w *= m[b[k] - 1][a[k] - 1];
                if (w.is_zero()) continue;
                for (int o = 0; o < psi.out_dim(); ++o) {
                    const Rational& v = psi.at(s, tb, o);
                    if (!v.is_zero()) out.at(s, ta, o) += w * v;
                }
            }
        }
    return out;
}

MorphismCochain zero_morphism_cochain(const MorphismSpec& f, int degree) {
    if (degree < 1) throw std::invalid_argument("morphism cochain: degree must be >= 1");
    MorphismCochain c{degree, Element(f.source.family, degree, f.source.dim, f.source.dim),
                      Element(f.target.family, degree, f.target.dim, f.target.dim), std::nullopt};
    if (degree >= 2)
        c.zeta = Element(f.source.family, degree - 1, f.source.dim, f.target.dim);
    return c;
}

RepresentationSpec pullback_representation(const MorphismSpec& f) {
    reject_twisted(f);
    if (CheckResult c = check_morphism(f); !c.ok)
        throw std::invalid_argument("pullback_representation: not a morphism: " + c.detail);
    const int da = f.source.dim, db = f.target.dim;
    RepresentationSpec rep = trivial_representation(f.source, db);
    const auto& u2 = enumerate(f.source.family, 2);
    for (size_t s = 0; s < u2.size(); ++s)
        for (int a = 0; a < da; ++a) {
            QVector ea(da, Rational(0));
            ea[a] = Rational(1);
            QVector fa = matrix_apply(f.matrix, ea);
            for (int b = 0; b < db; ++b) {
                QVector eb(db, Rational(0));
                eb[b] = Rational(1);
                QVector v1 = product(f.target, static_cast<int>(s), fa, eb);
                QVector v2 = product(f.target, static_cast<int>(s), eb, fa);
                for (int k = 0; k < db; ++k) {
                    rep.theta1.at(s, a, b, k) = v1[k];
                    rep.theta2.at(s, b, a, k) = v2[k];
                }
            }
        }
    return rep;
}

MorphismCochain delta_f(const MorphismSpec& f, const MorphismCochain& c) {
    reject_twisted(f);
    const int n = c.degree;
    RepresentationSpec adj_a = adjoint_representation(f.source);
    RepresentationSpec adj_b = adjoint_representation(f.target);
    RepresentationSpec pull = pullback_representation(f);

    MorphismCochain out{n + 1, coboundary(adj_a, c.phi), coboundary(adj_b, c.psi), std::nullopt};
    Element third = morphism_postcompose(f.matrix, c.phi, f.target.dim);
    third -= morphism_precompose(c.psi, f.matrix, f.source.dim);
    if (c.zeta) third -= coboundary(pull, *c.zeta);
    out.zeta = std::move(third);
    return out;
}

long morphism_cochain_dim(const MorphismSpec& f, int n) {
    MorphismCochain z = zero_morphism_cochain(f, n);
    long dim = z.phi.dimension() + z.psi.dimension();
    if (z.zeta) dim += z.zeta->dimension();
    return dim;
}

QVector morphism_cochain_to_vector(const MorphismCochain& c) {
    QVector v = c.phi.to_vector();
    QVector w = c.psi.to_vector();
    v.insert(v.end(), w.begin(), w.end());
    if (c.zeta) {
        QVector z = c.zeta->to_vector();
        v.insert(v.end(), z.begin(), z.end());
    }
    return v;
}

MorphismCochain morphism_cochain_from_vector(const MorphismSpec& f, int degree, const QVector& v) {
    MorphismCochain c = zero_morphism_cochain(f, degree);
    const long na = c.phi.dimension(), nb = c.psi.dimension();
    const long nz = c.zeta ? c.zeta->dimension() : 0;
    if (static_cast<long>(v.size()) != na + nb + nz)
        throw std::invalid_argument("morphism_cochain_from_vector: wrong length");
    c.phi = Element::from_vector(f.source.family, degree, f.source.dim, f.source.dim,
                                 QVector(v.begin(), v.begin() + na));
    c.psi = Element::from_vector(f.target.family, degree, f.target.dim, f.target.dim,
                                 QVector(v.begin() + na, v.begin() + na + nb));
    if (c.zeta)
        c.zeta = Element::from_vector(f.source.family, degree - 1, f.source.dim, f.target.dim,
                                      QVector(v.begin() + na + nb, v.end()));
    return c;
}

QMatrix delta_f_matrix(const MorphismSpec& f, int n) {
    const long cols = morphism_cochain_dim(f, n);
    const long rows = morphism_cochain_dim(f, n + 1);
    QMatrix mat(static_cast<int>(rows), static_cast<int>(cols));
    QVector unit(cols, Rational(0));
    for (long col = 0; col < cols; ++col) {
        unit[col] = Rational(1);
        MorphismCochain c = morphism_cochain_from_vector(f, n, unit);
        QVector v = morphism_cochain_to_vector(delta_f(f, c));
        for (long row = 0; row < static_cast<long>(v.size()); ++row)
            if (!v[row].is_zero())
                mat.set(static_cast<int>(row), static_cast<int>(col), v[row]);
        unit[col] = Rational(0);
    }
    return mat;
}

CohomologyDims morphism_cohomology_dims(const MorphismSpec& f, int n) {
    if (n < 1) throw std::invalid_argument("morphism_cohomology_dims: n must be >= 1");
    const long dim_cn = morphism_cochain_dim(f, n);
    const long z = dim_cn - rank(delta_f_matrix(f, n));
    const long b = (n == 1) ? 0 : rank(delta_f_matrix(f, n - 1));
    return {z, b, z - b};
}

MorphismDeformation constant_morphism_deformation(const MorphismSpec& f, int order) {
    MorphismDeformation md{f, order, {}, {}, {}};
    TruncatedDeformation da = constant_deformation(f.source, order);
    TruncatedDeformation db = constant_deformation(f.target, order);
    md.terms_a = da.terms;
    md.terms_b = db.terms;
    md.f_terms.push_back(f.matrix);
    for (int k = 1; k <= order; ++k)
        md.f_terms.push_back(zero_matrix(f.target.dim, f.source.dim));
    return md;
}

DeformationCheck is_morphism_deformation(const MorphismDeformation& md, int upto) {
    reject_twisted(md.f);
    if (upto > md.order) throw std::invalid_argument("is_morphism_deformation: order too large");
    OperadOps ops_a = md.f.source.ops(), ops_b = md.f.target.ops();
    TruncatedDeformation da{md.f.source, md.order, md.terms_a};
    TruncatedDeformation db{md.f.target, md.order, md.terms_b};
    if (DeformationCheck c = is_deformation(ops_a, da, upto); !c.ok) {
        c.witness = "source: " + c.witness;
        return c;
    }
    if (DeformationCheck c = is_deformation(ops_b, db, upto); !c.ok) {
        c.witness = "target: " + c.witness;
        return c;
    }

    const int dA = md.f.source.dim;
    const auto& u2 = enumerate(md.f.source.family, 2);
    for (int q = 0; q <= upto; ++q) {
        for (size_t s = 0; s < u2.size(); ++s)
            for (int a = 0; a < dA; ++a)
                for (int b = 0; b < dA; ++b) {
                    QVector ea(dA, Rational(0)), eb(dA, Rational(0));
                    ea[a] = Rational(1);
                    eb[b] = Rational(1);
                    QVector lhs(md.f.target.dim, Rational(0));
                    for (int i = 0; i <= q; ++i) {
                        QVector inner =
                            element_product(md.terms_a[q - i], static_cast<int>(s), ea, eb);
                        QVector v = matrix_apply(md.f_terms[i], inner);
                        for (size_t k = 0; k < lhs.size(); ++k) lhs[k] += v[k];
                    }
                    QVector rhs(md.f.target.dim, Rational(0));
                    for (int i = 0; i <= q; ++i)
                        for (int j = 0; i + j <= q; ++j) {
                            int k = q - i - j;
                            QVector u = matrix_apply(md.f_terms[j], ea);
                            QVector w = matrix_apply(md.f_terms[k], eb);
                            QVector v =
                                element_product(md.terms_b[i], static_cast<int>(s), u, w);
                            for (size_t x = 0; x < rhs.size(); ++x) rhs[x] += v[x];
                        }
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "morphism condition fails at order " << q << ", r=" << u2[s].str()
                           << ", (e" << (a + 1) << ", e" << (b + 1) << ")";
                        return {false, q, os.str()};
                    }
                }
    }
    return {};
}

MorphismCochain morphism_obstruction(const MorphismDeformation& md) {
    reject_twisted(md.f);
    const int n = md.order;
    OperadOps ops_a = md.f.source.ops(), ops_b = md.f.target.ops();
    TruncatedDeformation da{md.f.source, n, md.terms_a};
    TruncatedDeformation db{md.f.target, n, md.terms_b};

    MorphismCochain ob = zero_morphism_cochain(md.f, 3);
    ob.phi = obstruction(ops_a, da);
    ob.psi = obstruction(ops_b, db);

    // theta(f)(r; a, b) = sum_{i=1..n} f_i(pi_{A,n+1-i}(r; a, b))
    //                   - sum_{i+j+k = n+1, i,j,k <= n} pi_{B,i}(r; f_j a, f_k b)
    const int dA = md.f.source.dim, dB = md.f.target.dim;
    Element theta(md.f.source.family, 2, dA, dB);
    const auto& u2 = enumerate(md.f.source.family, 2);
    for (size_t s = 0; s < u2.size(); ++s)
        for (int a = 0; a < dA; ++a)
            for (int b = 0; b < dA; ++b) {
                QVector ea(dA, Rational(0)), eb(dA, Rational(0));
                ea[a] = Rational(1);
                eb[b] = Rational(1);
                QVector acc(dB, Rational(0));
                for (int i = 1; i <= n; ++i) {
                    QVector inner =
                        element_product(md.terms_a[n + 1 - i], static_cast<int>(s), ea, eb);
                    QVector v = matrix_apply(md.f_terms[i], inner);
                    for (int k = 0; k < dB; ++k) acc[k] += v[k];
                }
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= n; ++j) {
                        int k = n + 1 - i - j;
                        if (k < 0 || k > n) continue;
                        QVector u = matrix_apply(md.f_terms[j], ea);
                        QVector w = matrix_apply(md.f_terms[k], eb);
                        QVector v = element_product(md.terms_b[i], static_cast<int>(s), u, w);
                        for (int x = 0; x < dB; ++x) acc[x] -= v[x];
                    }
                long t = static_cast<long>(a) * dA + b;
                for (int k = 0; k < dB; ++k) theta.at(s, t, k) = acc[k];
            }
    ob.zeta = std::move(theta);
    return ob;
}

MorphismExtendResult extend_morphism_deformation(const MorphismDeformation& md) {
    if (DeformationCheck c = is_morphism_deformation(md, md.order); !c.ok)
        throw std::invalid_argument("extend_morphism_deformation: invalid input: " + c.witness);

    MorphismExtendResult out{std::nullopt, morphism_obstruction(md), false};
    MorphismCochain image = delta_f(md.f, out.obstruction);
    out.obstruction_is_cocycle = image.phi.is_zero() && image.psi.is_zero() &&
                                 (!image.zeta || image.zeta->is_zero());

    QMatrix dmat = delta_f_matrix(md.f, 2);
    QVector target = morphism_cochain_to_vector(out.obstruction);
    for (Rational& v : target) v = -v;
    if (auto x = solve(dmat, target)) {
        MorphismCochain next = morphism_cochain_from_vector(md.f, 2, *x);
        MorphismDeformation ext = md;
        ext.order = md.order + 1;
        ext.terms_a.push_back(next.phi);
        ext.terms_b.push_back(next.psi);
        DenseMatrix fm = zero_matrix(md.f.target.dim, md.f.source.dim);
        // zeta is an arity-1 element of C^1(A, B); read it back as a matrix
        for (int a = 0; a < md.f.source.dim; ++a)
            for (int o = 0; o < md.f.target.dim; ++o) fm[o][a] = next.zeta->at(0, a, o);
        ext.f_terms.push_back(std::move(fm));
        out.extended = std::move(ext);
    }
    return out;
}

MorphismDeformation apply_morphism_equivalence(const FormalAutomorphism& phi_a,
                                               const FormalAutomorphism& phi_b,
                                               const MorphismDeformation& md) {
    OperadOps ops_a = md.f.source.ops(), ops_b = md.f.target.ops();
    TruncatedDeformation da{md.f.source, md.order, md.terms_a};
    TruncatedDeformation db{md.f.target, md.order, md.terms_b};
    MorphismDeformation out = md;
    out.terms_a = apply_equivalence(ops_a, phi_a, da).terms;
    out.terms_b = apply_equivalence(ops_b, phi_b, db).terms;

    // f'_t = phi_{B,t}^{-1} o f_t o phi_{A,t} as matrix series
    auto add_into = [](DenseMatrix& acc, const DenseMatrix& m) {
        for (size_t r = 0; r < acc.size(); ++r)
            for (size_t c = 0; c < acc[r].size(); ++c) acc[r][c] += m[r][c];
    };
    FormalAutomorphism inv_b = invert_automorphism(ops_b, phi_b);
    const int n = md.order;
    std::vector<DenseMatrix> fa(n + 1, zero_matrix(md.f.target.dim, md.f.source.dim));
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i)
            add_into(fa[k], matrix_multiply(md.f_terms[i], matrix_from_element(phi_a.terms[k - i])));
    for (int k = 0; k <= n; ++k) {
        DenseMatrix acc = zero_matrix(md.f.target.dim, md.f.source.dim);
        for (int i = 0; i <= k; ++i)
            add_into(acc, matrix_multiply(matrix_from_element(inv_b.terms[i]), fa[k - i]));
        out.f_terms[k] = std::move(acc);
    }
    return out;
}

}  // namespace loday
