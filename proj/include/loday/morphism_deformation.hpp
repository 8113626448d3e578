#pragma once

#include <optional>

#include "loday/cohomology.hpp"
#include "loday/deformation.hpp"

namespace loday {

/// One cochain of the morphism complex C^n(f, f) =
/// C^n(A, A) x C^n(B, B) x C^{n-1}(A, B). For n = 1 the zeta slot is the
/// zero space (the complex has no degree 0).
struct MorphismCochain {
    int degree;
    Element phi;                // C^n(A, A)
    Element psi;                // C^n(B, B)
    std::optional<Element> zeta;  // C^{n-1}(A, B), absent when degree == 1
};

MorphismCochain zero_morphism_cochain(const MorphismSpec& f, int degree);

/// f o phi: postcompose every output with a matrix (rows = new out_dim).
Element morphism_postcompose(const DenseMatrix& m, const Element& phi, int out_dim);
/// psi o f^(x)n: precompose every input slot with a matrix.
Element morphism_precompose(const Element& psi, const DenseMatrix& m, int in_dim);

/// B as a representation of A through f: theta1(r; a, b) = pi_B(r; f(a), b).
RepresentationSpec pullback_representation(const MorphismSpec& f);

/// delta_f(phi, psi, zeta) = (dA phi, dB psi, f o phi - psi o f^(x)n - d zeta).
MorphismCochain delta_f(const MorphismSpec& f, const MorphismCochain& c);

/// Block matrix of delta_f : C^n(f,f) -> C^{n+1}(f,f); blocks ordered
/// (A-slot, B-slot, zeta-slot) in the canonical bases.
QMatrix delta_f_matrix(const MorphismSpec& f, int n);

CohomologyDims morphism_cohomology_dims(const MorphismSpec& f, int n);

long morphism_cochain_dim(const MorphismSpec& f, int n);
QVector morphism_cochain_to_vector(const MorphismCochain& c);
MorphismCochain morphism_cochain_from_vector(const MorphismSpec& f, int degree, const QVector& v);

/// f_t = sum f_i t^i with (pi_{A,t}, pi_{B,t}) deformations of source and
/// target; morphism condition holds mod t^(order+1).
struct MorphismDeformation {
    MorphismSpec f;
    int order;
    std::vector<Element> terms_a;       // [0..N], terms_a[0] == pi_A
    std::vector<Element> terms_b;       // [0..N]
    std::vector<DenseMatrix> f_terms;   // [0..N], f_terms[0] == f.matrix
};

MorphismDeformation constant_morphism_deformation(const MorphismSpec& f, int order);

DeformationCheck is_morphism_deformation(const MorphismDeformation& md, int upto);

/// (Ob_A, Ob_B, theta(f)) in C^3(f, f) for a deformation valid to its order.
MorphismCochain morphism_obstruction(const MorphismDeformation& md);

struct MorphismExtendResult {
    std::optional<MorphismDeformation> extended;
    MorphismCochain obstruction;
    bool obstruction_is_cocycle = false;  // delta_f applied to it vanishes
};

/// Solve delta_f(x) = -Ob; extends by one order or certifies a nonzero class
/// in H^3(f, f).
MorphismExtendResult extend_morphism_deformation(const MorphismDeformation& md);

/// (phi_A, phi_B)-gauge: defA and defB transform as algebra deformations and
/// f'_t = phi_B^{-1} o f_t o phi_A.
MorphismDeformation apply_morphism_equivalence(const FormalAutomorphism& phi_a,
                                               const FormalAutomorphism& phi_b,
                                               const MorphismDeformation& md);

}  // namespace loday
