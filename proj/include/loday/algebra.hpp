#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loday/element.hpp"
#include "loday/operad.hpp"

namespace loday {

using DenseMatrix = std::vector<QVector>;  // row-major, entry [i][j]

DenseMatrix identity_matrix(int d);
DenseMatrix zero_matrix(int rows, int cols);
QVector matrix_apply(const DenseMatrix& m, const QVector& x);
DenseMatrix matrix_multiply(const DenseMatrix& a, const DenseMatrix& b);
bool matrix_is_zero(const DenseMatrix& m);

/// Arity-1 element <-> d x d matrix (column j holds the image of e_j).
Element element_from_matrix(ShapeFamily fam, const DenseMatrix& m);
DenseMatrix matrix_from_element(const Element& e);

/// A finite-dimensional Loday-type algebra given by structure constants:
/// pi(shape; e_i, e_j) for every shape of U_2. Optional commuting structure
/// maps alpha, beta switch the algebra (and everything downstream) to the
/// twisted composition rule.
struct AlgebraSpec {
    ShapeFamily family;
    int dim;
    Element pi;  // arity 2
    std::optional<Element> alpha, beta;

    bool twisted() const { return alpha.has_value(); }
    OperadOps ops() const {
        if (twisted()) return OperadOps(family, dim, *alpha, *beta);
        return OperadOps(family, dim);
    }
};

AlgebraSpec make_algebra(ShapeFamily fam, int dim);
void set_product(AlgebraSpec& spec, const std::string& shape, int i, int j,
                 const QVector& coords);

/// Evaluate an arity-2 tensor on vectors: pi2(shape; x, y).
QVector element_product(const Element& pi2, int shape, const QVector& x, const QVector& y);
QVector product(const AlgebraSpec& spec, int shape, const QVector& x, const QVector& y);

struct CheckResult {
    bool ok = true;
    std::string detail;  // witness description when !ok
};

/// pi is a multiplication on the operad (twisted operad when alpha/beta are
/// present). The witness names the first failing (shape; basis triple).
CheckResult validate_algebra(const AlgebraSpec& spec);

/// theta1 : K[U_2] (x) (A (x) M) -> M and theta2 : K[U_2] (x) (M (x) A) -> M.
class BilinearMap {
public:
    BilinearMap(ShapeFamily fam, int xdim, int ydim, int zdim);
    int shapes() const { return shapes_; }
    int xdim() const { return xdim_; }
    int ydim() const { return ydim_; }
    int zdim() const { return zdim_; }
    Rational& at(int shape, int x, int y, int z) {
        return v_[((static_cast<size_t>(shape) * xdim_ + x) * ydim_ + y) * zdim_ + z];
    }
    const Rational& at(int shape, int x, int y, int z) const {
        return v_[((static_cast<size_t>(shape) * xdim_ + x) * ydim_ + y) * zdim_ + z];
    }
    QVector value(int shape, int x, int y) const;
    bool operator==(const BilinearMap&) const = default;

private:
    ShapeFamily family_;
    int shapes_, xdim_, ydim_, zdim_;
    std::vector<Rational> v_;
};

struct RepresentationSpec {
    AlgebraSpec base;
    int mdim;
    BilinearMap theta1;  // (A, M) -> M
    BilinearMap theta2;  // (M, A) -> M
};

RepresentationSpec adjoint_representation(const AlgebraSpec& spec);
RepresentationSpec trivial_representation(const AlgebraSpec& spec, int mdim);

/// Verifies the 3 #(U_3) representation identities on basis triples.
CheckResult check_representation(const RepresentationSpec& rep);

/// Same-type algebra structure on A + M via
/// (pi(r; a, b), theta1(r; a, n) + theta2(r; m, b)).
AlgebraSpec semidirect_product(const AlgebraSpec& spec, const RepresentationSpec& rep);

struct MorphismSpec {
    AlgebraSpec source, target;  // same family
    DenseMatrix matrix;          // dim(target) x dim(source)
};

/// f(pi_A(r; a, a')) = pi_B(r; f a, f a') on all r in U_2 and basis pairs.
CheckResult check_morphism(const MorphismSpec& f);

struct RotaBaxterSpec {
    AlgebraSpec base;  // associative
    DenseMatrix op;    // R
    Rational weight;   // lambda
};

/// mu(Rx, Ry) = R(mu(x, Ry) + mu(Rx, y) + lambda mu(x, y)) on basis pairs.
CheckResult rota_baxter_check(const RotaBaxterSpec& rb);

/// x < y = mu(x, Ry), x > y = mu(Rx, y), x . y = lambda mu(x, y).
AlgebraSpec rota_baxter_to_tridendriform(const RotaBaxterSpec& rb);

/// x <' y = x < y + x . y and x >' y = x > y.
AlgebraSpec tridendriform_to_dendriform(const AlgebraSpec& spec);

/// The sum of all two-slot operations is associative.
AlgebraSpec tridendriform_to_associative(const AlgebraSpec& spec);
AlgebraSpec dendriform_to_associative(const AlgebraSpec& spec);

}  // namespace loday
