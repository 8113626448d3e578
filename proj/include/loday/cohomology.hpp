#pragma once

#include <optional>
#include <utility>

#include "loday/algebra.hpp"

namespace loday {

/// Cochains in C^n(A, M) = Hom(K[U_n] (x) A^(x)n, M) are Elements with
/// in_dim = dim A and out_dim = mdim.
Element zero_cochain(const RepresentationSpec& rep, int arity);

/// The coboundary of the cochain complex with coefficients: a theta1 head
/// term, an alternating sum over products in adjacent slots, and a theta2
/// tail term.
Element coboundary(const RepresentationSpec& rep, const Element& f);

/// Matrix of the coboundary C^n -> C^{n+1}, columns and rows in the
/// canonical (shape order, tuple lexicographic, output index) basis.
QMatrix coboundary_matrix(const RepresentationSpec& rep, int arity);

struct CohomologyDims {
    long z, b, h;
};

/// (dim Z^n, dim B^n, dim H^n). The complex starts at C^1, so B^1 = 0.
CohomologyDims cohomology_dims(const RepresentationSpec& rep, int n);

/// Basis of the 1-cocycles (derivations with values in the representation).
std::vector<Element> derivation_basis(const RepresentationSpec& rep);

/// Some g in C^n with coboundary(g) = target, if target is a coboundary.
std::optional<Element> solve_coboundary(const RepresentationSpec& rep, int n,
                                        const Element& target);

/// Abelian extension 0 -> M -> E -> A -> 0 with canonical inclusion (last
/// mdim coordinates) and projection (first adim coordinates); the section is
/// any right inverse of the projection.
struct ExtensionSpec {
    AlgebraSpec total;
    int adim, mdim;
    DenseMatrix section;  // (adim+mdim) x adim
};

CheckResult validate_extension(const ExtensionSpec& ext);

/// Total algebra (pi(r; a, b), theta1(r; a, n) + theta2(r; m, b) + f(r; a, b))
/// with the canonical section. Throws when f is not a 2-cocycle.
ExtensionSpec extension_from_cocycle(const AlgebraSpec& spec, const RepresentationSpec& rep,
                                     const Element& f);

/// The 2-cocycle of an extension w.r.t. its section, together with the
/// induced representation theta_i(r; a, m) = pi_E(r; s(a), i(m)).
std::pair<Element, RepresentationSpec> cocycle_from_extension(const ExtensionSpec& ext);

/// g with cocycle(e1) - cocycle(e2) = coboundary(g), i.e. the linear map
/// (a, m) -> (a, m + g(a)) realizing the equivalence; absent when the
/// extensions are inequivalent.
std::optional<Element> extensions_equivalent(const RepresentationSpec& rep,
                                             const ExtensionSpec& e1, const ExtensionSpec& e2);

}  // namespace loday
