#include "loday/algebra.hpp"

#include <sstream>

#include "loday/twist.hpp"

namespace loday {

DenseMatrix identity_matrix(int d) {
    DenseMatrix m(d, QVector(d, Rational(0)));
    for (int i = 0; i < d; ++i) m[i][i] = Rational(1);
    return m;
}

DenseMatrix zero_matrix(int rows, int cols) { return DenseMatrix(rows, QVector(cols, Rational(0))); }

QVector matrix_apply(const DenseMatrix& m, const QVector& x) {
    if (m.empty()) return {};
    if (m[0].size() != x.size()) throw std::invalid_argument("matrix_apply: dimension mismatch");
    QVector out(m.size(), Rational(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) out[i] += m[i][j] * x[j];
    return out;
}

DenseMatrix matrix_multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.empty() || b.empty()) return {};
    if (a[0].size() != b.size()) throw std::invalid_argument("matrix_multiply: dimension mismatch");
    DenseMatrix out(a.size(), QVector(b[0].size(), Rational(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

bool matrix_is_zero(const DenseMatrix& m) {
    for (const auto& row : m)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

Element element_from_matrix(ShapeFamily fam, const DenseMatrix& m) {
    const int d = static_cast<int>(m.size());
    Element e(fam, 1, d, d);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(m[i].size()) != d)
            throw std::invalid_argument("element_from_matrix: matrix must be square");
        for (int j = 0; j < d; ++j) e.at(0, j, i) = m[i][j];
    }
    return e;
}

DenseMatrix matrix_from_element(const Element& e) {
    if (e.arity() != 1 || e.in_dim() != e.out_dim())
        throw std::invalid_argument("matrix_from_element: arity-1 square elements only");
    const int d = e.in_dim();
    DenseMatrix m = zero_matrix(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) m[i][j] = e.at(0, j, i);
    return m;
}

AlgebraSpec make_algebra(ShapeFamily fam, int dim) {
    return AlgebraSpec{fam, dim, Element(fam, 2, dim, dim), std::nullopt, std::nullopt};
}

void set_product(AlgebraSpec& spec, const std::string& shape, int i, int j,
                 const QVector& coords) {
    if (static_cast<int>(coords.size()) != spec.dim)
        throw std::invalid_argument("set_product: wrong coordinate count");
    int s = shape_index(spec.family, 2, Shape::parse(spec.family, shape));
    long t = spec.pi.tuple_of({i, j});
    for (int k = 0; k < spec.dim; ++k) spec.pi.at(s, t, k) = coords[k];
}

QVector element_product(const Element& pi2, int shape, const QVector& x, const QVector& y) {
    if (pi2.arity() != 2) throw std::invalid_argument("element_product: arity-2 tensor required");
    const int d = pi2.in_dim();
    if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
        throw std::invalid_argument("element_product: dimension mismatch");
    QVector out(pi2.out_dim(), Rational(0));
    for (int i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (y[j].is_zero()) continue;
            Rational c = x[i] * y[j];
            long t = static_cast<long>(i) * d + j;
            for (int k = 0; k < pi2.out_dim(); ++k) out[k] += c * pi2.at(shape, t, k);
        }
    }
    return out;
}

QVector product(const AlgebraSpec& spec, int shape, const QVector& x, const QVector& y) {
    return element_product(spec.pi, shape, x, y);
}

CheckResult validate_algebra(const AlgebraSpec& spec) {
    OperadOps ops = spec.ops();
    if (spec.twisted()) {
        TwistPair tw{*spec.alpha, *spec.beta};
        if (CheckResult c = twist_pair_commutes(tw); !c.ok) return c;
        if (CheckResult c = in_twisted_subspace(spec.pi, tw); !c.ok) {
            c.detail = "products outside the twisted subspace: " + c.detail;
            return c;
        }
    }
    if (auto defect = ops.multiplication_defect(spec.pi)) {
        Element probe = ops.zero(3);
        std::ostringstream os;
        os << "pi o pi != 0 at " << describe_entry(probe, *defect).str();
        return {false, os.str()};
    }
    return {};
}

BilinearMap::BilinearMap(ShapeFamily fam, int xdim, int ydim, int zdim)
    : family_(fam), xdim_(xdim), ydim_(ydim), zdim_(zdim) {
    if (xdim < 1 || ydim < 1 || zdim < 1)
        throw std::invalid_argument("BilinearMap: dimensions must be >= 1");
    shapes_ = static_cast<int>(enumerate(fam, 2).size());
    v_.assign(static_cast<size_t>(shapes_) * xdim_ * ydim_ * zdim_, Rational(0));
}

QVector BilinearMap::value(int shape, int x, int y) const {
    QVector out(zdim_);
    for (int z = 0; z < zdim_; ++z) out[z] = at(shape, x, y, z);
    return out;
}

RepresentationSpec adjoint_representation(const AlgebraSpec& spec) {
    const int d = spec.dim;
    BilinearMap t1(spec.family, d, d, d), t2(spec.family, d, d, d);
    for (int s = 0; s < t1.shapes(); ++s)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    const Rational& v = spec.pi.at(s, static_cast<long>(i) * d + j, k);
                    t1.at(s, i, j, k) = v;
                    t2.at(s, i, j, k) = v;
                }
    return RepresentationSpec{spec, d, std::move(t1), std::move(t2)};
}

RepresentationSpec trivial_representation(const AlgebraSpec& spec, int mdim) {
    return RepresentationSpec{spec, mdim, BilinearMap(spec.family, spec.dim, mdim, mdim),
                              BilinearMap(spec.family, mdim, spec.dim, mdim)};
}

namespace {

QVector scaled_sum(int dim, const std::vector<std::pair<int, long>>& terms,
                   const std::function<QVector(int)>& value) {
    QVector acc(dim, Rational(0));
    for (const auto& [s, c] : terms) {
        QVector v = value(s);
        Rational rc(c);
        for (int k = 0; k < dim; ++k) acc[k] += rc * v[k];
    }
    return acc;
}

QVector contract(int out_dim, const QVector& weights, const std::function<QVector(int)>& value) {
    QVector acc(out_dim, Rational(0));
    for (size_t z = 0; z < weights.size(); ++z) {
        if (weights[z].is_zero()) continue;
        QVector v = value(static_cast<int>(z));
        for (int k = 0; k < out_dim; ++k) acc[k] += weights[z] * v[k];
    }
    return acc;
}

}  // namespace

CheckResult check_representation(const RepresentationSpec& rep) {
    const AlgebraSpec& A = rep.base;
    const int d = A.dim, m = rep.mdim;
    if (rep.theta1.xdim() != d || rep.theta1.ydim() != m || rep.theta1.zdim() != m ||
        rep.theta2.xdim() != m || rep.theta2.ydim() != d || rep.theta2.zdim() != m)
        throw std::invalid_argument("check_representation: dimension mismatch");

    const auto& in_second = routes(A.family, 2, 2, 2);  // R_0(2;1,2), R_2(2;1,2)
    const auto& in_first = routes(A.family, 2, 2, 1);   // R_0(2;2,1), R_1(2;2,1)
    const auto& u3 = enumerate(A.family, 3);

    auto pi_val = [&](int s, int a, int b) {
        QVector out(d);
        for (int k = 0; k < d; ++k) out[k] = A.pi.at(s, static_cast<long>(a) * d + b, k);
        return out;
    };

    for (size_t y = 0; y < u3.size(); ++y) {
        const int sA = in_second.r0[y], sB = in_first.r0[y];
        const auto& termsA = in_second.ri[y];
        const auto& termsB = in_first.ri[y];
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int mm = 0; mm < m; ++mm) {
                    // identity 1: theta1(sA; a, theta1(.; b, mm)) = theta1(sB; pi(.; a, b), mm)
                    QVector inner1 =
                        scaled_sum(m, termsA, [&](int s) { return rep.theta1.value(s, b, mm); });
                    QVector lhs1 =
                        contract(m, inner1, [&](int z) { return rep.theta1.value(sA, a, z); });
                    QVector innerPi =
                        scaled_sum(d, termsB, [&](int s) { return pi_val(s, a, b); });
                    QVector rhs1 =
                        contract(m, innerPi, [&](int w) { return rep.theta1.value(sB, w, mm); });

                    // identity 2: theta2(sA; mm, pi(.; a, b)) = theta2(sB; theta2(.; mm, a), b)
                    QVector innerPiA =
                        scaled_sum(d, termsA, [&](int s) { return pi_val(s, a, b); });
                    QVector lhs2 =
                        contract(m, innerPiA, [&](int w) { return rep.theta2.value(sA, mm, w); });
                    QVector inner2 =
                        scaled_sum(m, termsB, [&](int s) { return rep.theta2.value(s, mm, a); });
                    QVector rhs2 =
                        contract(m, inner2, [&](int z) { return rep.theta2.value(sB, z, b); });

                    // identity 3: theta1(sA; a, theta2(.; mm, b)) = theta2(sB; theta1(.; a, mm), b)
                    QVector inner3 =
                        scaled_sum(m, termsA, [&](int s) { return rep.theta2.value(s, mm, b); });
                    QVector lhs3 =
                        contract(m, inner3, [&](int z) { return rep.theta1.value(sA, a, z); });
                    QVector inner3b =
                        scaled_sum(m, termsB, [&](int s) { return rep.theta1.value(s, a, mm); });
                    QVector rhs3 =
                        contract(m, inner3b, [&](int z) { return rep.theta2.value(sB, z, b); });

                    for (int which = 0; which < 3; ++which) {
                        const QVector& lhs = which == 0 ? lhs1 : which == 1 ? lhs2 : lhs3;
                        const QVector& rhs = which == 0 ? rhs1 : which == 1 ? rhs2 : rhs3;
                        if (lhs != rhs) {
                            std::ostringstream os;
                            os << "representation identity " << (which + 1) << " fails at y="
                               << u3[y].str() << " a=e" << (a + 1) << " b=e" << (b + 1) << " m=f"
                               << (mm + 1);
                            return {false, os.str()};
                        }
                    }
                }
    }
    return {};
}

AlgebraSpec semidirect_product(const AlgebraSpec& spec, const RepresentationSpec& rep) {
    if (CheckResult c = check_representation(rep); !c.ok)
        throw std::invalid_argument("semidirect_product: invalid representation: " + c.detail);
    const int d = spec.dim, m = rep.mdim, D = d + m;
    AlgebraSpec out = make_algebra(spec.family, D);
    for (int s = 0; s < out.pi.shape_count(); ++s) {
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j) {
                long t = static_cast<long>(i) * D + j;
                if (i < d && j < d) {
                    for (int k = 0; k < d; ++k)
                        out.pi.at(s, t, k) = spec.pi.at(s, static_cast<long>(i) * d + j, k);
                } else if (i < d && j >= d) {
                    for (int k = 0; k < m; ++k) out.pi.at(s, t, d + k) = rep.theta1.at(s, i, j - d, k);
                } else if (i >= d && j < d) {
                    for (int k = 0; k < m; ++k) out.pi.at(s, t, d + k) = rep.theta2.at(s, i - d, j, k);
                }
            }
    }
    return out;
}

CheckResult check_morphism(const MorphismSpec& f) {
    const AlgebraSpec& A = f.source;
    const AlgebraSpec& B = f.target;
    if (A.family != B.family) return {false, "source and target families differ"};
    if (static_cast<int>(f.matrix.size()) != B.dim ||
        (B.dim > 0 && static_cast<int>(f.matrix[0].size()) != A.dim))
        throw std::invalid_argument("check_morphism: matrix must be dim(B) x dim(A)");

    const auto& u2 = enumerate(A.family, 2);
    for (size_t s = 0; s < u2.size(); ++s) {
        for (int a = 0; a < A.dim; ++a)
            for (int b = 0; b < A.dim; ++b) {
                QVector ea(A.dim, Rational(0)), eb(A.dim, Rational(0));
                ea[a] = Rational(1);
                eb[b] = Rational(1);
                QVector lhs = matrix_apply(f.matrix, product(A, static_cast<int>(s), ea, eb));
                QVector rhs = product(B, static_cast<int>(s), matrix_apply(f.matrix, ea),
                                      matrix_apply(f.matrix, eb));
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "morphism identity fails at r=" << u2[s].str() << " (e" << (a + 1)
                       << ", e" << (b + 1) << ")";
                    return {false, os.str()};
                }
            }
    }
    return {};
}

namespace {

int single_shape(const AlgebraSpec& assoc) {
    if (assoc.family != ShapeFamily::associative)
        throw std::invalid_argument("expected an associative-family spec");
    return 0;
}

}  // namespace

CheckResult rota_baxter_check(const RotaBaxterSpec& rb) {
    const AlgebraSpec& A = rb.base;
    const int s = single_shape(A);
    const int d = A.dim;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            QVector ex(d, Rational(0)), ey(d, Rational(0));
            ex[x] = Rational(1);
            ey[y] = Rational(1);
            QVector rx = matrix_apply(rb.op, ex), ry = matrix_apply(rb.op, ey);
            QVector lhs = product(A, s, rx, ry);
            QVector inner = product(A, s, ex, ry);
            QVector t2 = product(A, s, rx, ey);
            QVector t3 = product(A, s, ex, ey);
            for (int k = 0; k < d; ++k) inner[k] += t2[k] + rb.weight * t3[k];
            QVector rhs = matrix_apply(rb.op, inner);
            if (lhs != rhs) {
                std::ostringstream os;
                os << "Rota-Baxter identity fails at (e" << (x + 1) << ", e" << (y + 1) << ")";
                return {false, os.str()};
            }
        }
    return {};
}

AlgebraSpec rota_baxter_to_tridendriform(const RotaBaxterSpec& rb) {
    if (CheckResult c = rota_baxter_check(rb); !c.ok)
        throw std::invalid_argument("rota_baxter_to_tridendriform: " + c.detail);
    const AlgebraSpec& A = rb.base;
    const int s = single_shape(A);
    const int d = A.dim;
    AlgebraSpec out = make_algebra(ShapeFamily::tridendriform, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            QVector ei(d, Rational(0)), ej(d, Rational(0));
            ei[i] = Rational(1);
            ej[j] = Rational(1);
            QVector left = product(A, s, ei, matrix_apply(rb.op, ej));
            QVector right = product(A, s, matrix_apply(rb.op, ei), ej);
            QVector mid = product(A, s, ei, ej);
            for (Rational& v : mid) v *= rb.weight;
            set_product(out, "{1}", i + 1, j + 1, left);
            set_product(out, "{2}", i + 1, j + 1, right);
            set_product(out, "{1,2}", i + 1, j + 1, mid);
        }
    return out;
}

namespace {

QVector tensor_entry(const Element& pi, const std::string& shape, int i, int j) {
    int s = shape_index(pi.family(), 2, Shape::parse(pi.family(), shape));
    QVector out(pi.out_dim());
    long t = static_cast<long>(i) * pi.in_dim() + j;
    for (int k = 0; k < pi.out_dim(); ++k) out[k] = pi.at(s, t, k);
    return out;
}

}  // namespace

AlgebraSpec tridendriform_to_dendriform(const AlgebraSpec& spec) {
    if (spec.family != ShapeFamily::tridendriform)
        throw std::invalid_argument("tridendriform_to_dendriform: wrong family");
    const int d = spec.dim;
    AlgebraSpec out = make_algebra(ShapeFamily::dendriform, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            QVector left = tensor_entry(spec.pi, "{1}", i, j);
            QVector mid = tensor_entry(spec.pi, "{1,2}", i, j);
            for (int k = 0; k < d; ++k) left[k] += mid[k];
            set_product(out, "1", i + 1, j + 1, left);
            set_product(out, "2", i + 1, j + 1, tensor_entry(spec.pi, "{2}", i, j));
        }
    return out;
}

AlgebraSpec tridendriform_to_associative(const AlgebraSpec& spec) {
    if (spec.family != ShapeFamily::tridendriform)
        throw std::invalid_argument("tridendriform_to_associative: wrong family");
    const int d = spec.dim;
    AlgebraSpec out = make_algebra(ShapeFamily::associative, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            QVector sum = tensor_entry(spec.pi, "{1}", i, j);
            QVector t2 = tensor_entry(spec.pi, "{2}", i, j);
            QVector t3 = tensor_entry(spec.pi, "{1,2}", i, j);
            for (int k = 0; k < d; ++k) sum[k] += t2[k] + t3[k];
            set_product(out, "*", i + 1, j + 1, sum);
        }
    return out;
}

AlgebraSpec dendriform_to_associative(const AlgebraSpec& spec) {
    if (spec.family != ShapeFamily::dendriform)
        throw std::invalid_argument("dendriform_to_associative: wrong family");
    const int d = spec.dim;
    AlgebraSpec out = make_algebra(ShapeFamily::associative, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            QVector sum = tensor_entry(spec.pi, "1", i, j);
            QVector t2 = tensor_entry(spec.pi, "2", i, j);
            for (int k = 0; k < d; ++k) sum[k] += t2[k];
            set_product(out, "*", i + 1, j + 1, sum);
        }
    return out;
}

}  // namespace loday
