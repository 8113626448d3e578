#pragma once

#include <optional>
#include <vector>

#include "loday/algebra.hpp"

namespace loday {

/// pi_t = pi_0 + pi_1 t + ... + pi_N t^N mod t^(N+1), pi_0 = base
/// multiplication.
struct TruncatedDeformation {
    AlgebraSpec base;
    int order;                   // N
    std::vector<Element> terms;  // [0..N], terms[0] == base.pi
};

TruncatedDeformation constant_deformation(const AlgebraSpec& base, int order);

/// phi_t = id + phi_1 t + ... + phi_N t^N; invertible as a truncated series.
struct FormalAutomorphism {
    ShapeFamily family;
    int dim;
    int order;
    std::vector<Element> terms;  // [0..N], terms[0] == id
};

FormalAutomorphism identity_automorphism(ShapeFamily fam, int dim, int order);

/// x = x_1 t + ... + x_N t^N with arity-1 coefficients (no constant term).
struct Degree0Series {
    ShapeFamily family;
    int dim;
    int order;
    std::vector<Element> terms;  // terms[k] is the coefficient of t^(k+1)
};

struct DeformationCheck {
    bool ok = true;
    int failed_order = -1;
    std::string witness;
};

/// sum_{i+j = n} pi_i o pi_j = 0 for 0 <= n <= upto.
DeformationCheck is_deformation(const OperadOps& ops, const TruncatedDeformation& def, int upto);

struct MaurerCartanCheck {
    bool deformation_route = false;  // pi + gamma satisfies the deformation equations
    bool mc_route = false;           // d(gamma_k) + 1/2 sum [gamma_i, gamma_j] = 0
    bool agree = false;
};

MaurerCartanCheck mc_check(const OperadOps& ops, const AlgebraSpec& base,
                           const Degree0Series& gamma);

struct Infinitesimal {
    bool trivial = false;  // all terms beyond pi_0 vanish
    int order = 0;         // first nonzero index p
    Element term;          // pi_p
    bool cocycle = false;  // d_pi(pi_p) == 0
};

Infinitesimal infinitesimal(const OperadOps& ops, const TruncatedDeformation& def);

/// pi'_t = phi_t^{-1} o {pi_t}{phi_t, phi_t}, truncated at the common order.
TruncatedDeformation apply_equivalence(const OperadOps& ops, const FormalAutomorphism& phi,
                                       const TruncatedDeformation& def);

FormalAutomorphism invert_automorphism(const OperadOps& ops, const FormalAutomorphism& phi);

FormalAutomorphism compose_automorphisms(const OperadOps& ops, const FormalAutomorphism& a,
                                         const FormalAutomorphism& b);

/// sum_{i+j = n+1, i,j >= 1} pi_i o pi_j for a deformation valid to order n.
Element obstruction(const OperadOps& ops, const TruncatedDeformation& def);

struct ExtendResult {
    std::optional<TruncatedDeformation> extended;  // present iff the class vanishes
    Element obstruction_sum;
    bool obstruction_is_cocycle = false;  // d_pi applied to the sum vanishes
};

/// Solve -d_pi(x) = obstruction; extends by one order or certifies that the
/// obstruction class in H^3 is nonzero.
ExtendResult extend_deformation(const OperadOps& ops, const TruncatedDeformation& def);

/// phi with phi_t o pi'_t = {pi_t}{phi_t, phi_t}, i.e.
/// apply_equivalence(phi, def1) == def2 up to the requested order; solved
/// order by order, absent when some order has no solution.
std::optional<FormalAutomorphism> are_equivalent(const OperadOps& ops,
                                                 const TruncatedDeformation& def1,
                                                 const TruncatedDeformation& def2, int order);

/// pi_t = - sum t^n/n! D^n . Dbar^n for commuting 1-cocycles D, Dbar.
/// Throws (with witness text) when a precondition fails.
TruncatedDeformation universal_deformation(const OperadOps& ops, const AlgebraSpec& base,
                                           const Element& d1, const Element& d1bar, int order);

FormalAutomorphism exp_series(const OperadOps& ops, const Degree0Series& x);
Degree0Series log_series(const OperadOps& ops, const FormalAutomorphism& h);

}  // namespace loday
