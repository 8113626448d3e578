#pragma once

#include "loday/algebra.hpp"

namespace loday {

/// Commuting pair alpha, beta in O(1); the data of a twisted variation
/// O_{alpha,beta} of the shape operad.
struct TwistPair {
    Element alpha, beta;
};

/// alpha o beta == beta o alpha, exactly.
CheckResult twist_pair_commutes(const TwistPair& tw);

/// Membership in O_{alpha,beta}(n):
/// gamma(f; alpha,...,alpha) = alpha o f and the same for beta.
CheckResult in_twisted_subspace(const Element& f, const TwistPair& tw);

/// Basis of O_{alpha,beta}(arity) as the kernel of the two membership
/// constraints; used to sample twisted elements.
std::vector<Element> twisted_subspace_basis(const TwistPair& tw, ShapeFamily fam, int dim,
                                            int arity);

struct YauResult {
    std::optional<Element> twisted_pi;
    std::string error;  // precondition witness when absent
};

/// {pi}{alpha, beta}(r; a, b) = pi(r; alpha(a), beta(b)). Requires pi to be a
/// multiplication and alpha, beta commuting algebra morphisms; the result is
/// a multiplication in (O_{alpha,beta}, o') and lies in the twisted subspace.
YauResult yau_twist(const Element& pi, const TwistPair& tw);

/// Yau twist packaged as a twisted AlgebraSpec (products {pi}{alpha,beta},
/// structure maps alpha, beta).
YauResult yau_twist_check(const AlgebraSpec& untwisted, const TwistPair& tw,
                          AlgebraSpec* out_spec);

}  // namespace loday
