#pragma once

#include <random>

#include "loday/operad.hpp"

// The textual defining identities of the split families, written against the
// canonical U_2 shape order of each family, plus machinery to match them
// against the components of pi o pi and to break exactly one of them.
namespace identities {

using namespace loday;

// sign * (a op1 b) op2 c when left, sign * a op1 (b op2 c) otherwise;
// op indices follow the canonical order of enumerate(family, 2)
struct Term {
    int sign;
    int op1, op2;
    bool left;
};
using Identity = std::vector<Term>;

// dendriform U_2 order: ["1", "2"] = (<, >)
inline std::vector<Identity> dendriform_identities() {
    const int LT = 0, GT = 1;
    return {
        {{1, LT, LT, true}, {-1, LT, LT, false}, {-1, LT, GT, false}},
        {{1, GT, LT, true}, {-1, GT, LT, false}},
        {{1, LT, GT, true}, {1, GT, GT, true}, {-1, GT, GT, false}},
    };
}

// tridendriform U_2 order: ["{1,2}", "{1}", "{2}"] = (., <, >)
inline std::vector<Identity> tridendriform_identities() {
    const int M = 0, L = 1, G = 2;
    return {
        {{1, L, L, true}, {-1, L, L, false}, {-1, L, G, false}, {-1, L, M, false}},
        {{1, G, L, true}, {-1, G, L, false}},
        {{1, L, G, true}, {1, G, G, true}, {1, M, G, true}, {-1, G, G, false}},
        {{1, G, M, true}, {-1, G, M, false}},
        {{1, L, M, true}, {-1, M, G, false}},
        {{1, M, L, true}, {-1, M, L, false}},
        {{1, M, M, true}, {-1, M, M, false}},
    };
}

// dialgebra U_2 order: ["((L,L),L)", "(L,(L,L))"]; the correspondence run
// pins -| to "(L,(L,L))" and |- to "((L,L),L)"
inline std::vector<Identity> dialgebra_identities() {
    const int V = 0, D = 1;
    return {
        {{1, D, D, true}, {-1, D, D, false}},
        {{1, D, D, true}, {-1, D, V, false}},
        {{1, V, D, true}, {-1, V, D, false}},
        {{1, D, V, true}, {-1, V, V, false}},
        {{1, V, V, true}, {-1, V, V, false}},
    };
}

// trialgebra U_2 order: ["((L,L),L)", "(L,(L,L))", "(L,L,L)"] = (|-, -|, perp)
inline std::vector<Identity> trialgebra_identities() {
    const int V = 0, D = 1, P = 2;
    return {
        {{1, D, D, true}, {-1, D, D, false}},
        {{1, D, D, true}, {-1, D, V, false}},
        {{1, V, D, true}, {-1, V, D, false}},
        {{1, D, V, true}, {-1, V, V, false}},
        {{1, V, V, true}, {-1, V, V, false}},
        {{1, D, D, true}, {-1, D, P, false}},
        {{1, P, D, true}, {-1, P, D, false}},
        {{1, D, P, true}, {-1, P, V, false}},
        {{1, V, P, true}, {-1, V, P, false}},
        {{1, P, V, true}, {-1, V, V, false}},
        {{1, P, P, true}, {-1, P, P, false}},
    };
}

inline std::vector<Identity> identities_for(ShapeFamily fam) {
    switch (fam) {
        case ShapeFamily::dendriform: return dendriform_identities();
        case ShapeFamily::tridendriform: return tridendriform_identities();
        case ShapeFamily::dialgebra: return dialgebra_identities();
        case ShapeFamily::trialgebra: return trialgebra_identities();
        default: throw std::invalid_argument("no identity list for this family");
    }
}

// defect of one identity on a basis triple, for an arbitrary product tensor
inline QVector defect(const Element& pi, const Identity& id, int a, int b, int c) {
    const int d = pi.in_dim();
    QVector acc(d, Rational(0));
    QVector ea(d, Rational(0)), eb(d, Rational(0)), ec(d, Rational(0));
    ea[a] = Rational(1);
    eb[b] = Rational(1);
    ec[c] = Rational(1);
    for (const Term& t : id) {
        QVector v;
        if (t.left)
            v = element_product(pi, t.op2, element_product(pi, t.op1, ea, eb), ec);
        else
            v = element_product(pi, t.op1, ea, element_product(pi, t.op2, eb, ec));
        for (int k = 0; k < d; ++k) acc[k] += Rational(t.sign) * v[k];
    }
    return acc;
}

// shape index s -> identity index, determined by exact agreement of
// component_s(pi o pi) with the identity defect on random product tensors;
// empty when no bijection emerges
inline std::vector<int> match_components(ShapeFamily fam, const std::vector<Identity>& ids,
                                         unsigned seed) {
    const int d = 2;
    OperadOps ops(fam, d);
    std::mt19937_64 rng(seed);
    const int nshapes = static_cast<int>(enumerate(fam, 3).size());
    std::vector<std::vector<bool>> match(nshapes, std::vector<bool>(ids.size(), true));
    for (int trial = 0; trial < 12; ++trial) {
        Element pi = random_element(fam, 2, d, d, rng);
        Element sq = ops.circle(pi, pi);
        for (int s = 0; s < nshapes; ++s)
            for (size_t k = 0; k < ids.size(); ++k) {
                if (!match[s][k]) continue;
                for (int a = 0; a < d && match[s][k]; ++a)
                    for (int b = 0; b < d && match[s][k]; ++b)
                        for (int c = 0; c < d && match[s][k]; ++c) {
                            QVector dv = defect(pi, ids[k], a, b, c);
                            long t = (static_cast<long>(a) * d + b) * d + c;
                            for (int o = 0; o < d; ++o)
                                if (!(dv[o] == sq.at(s, t, o))) {
                                    match[s][k] = false;
                                    break;
                                }
                        }
            }
    }
    std::vector<int> sigma(nshapes, -1);
    std::vector<bool> used(ids.size(), false);
    for (int s = 0; s < nshapes; ++s) {
        int count = 0;
        for (size_t k = 0; k < ids.size(); ++k)
            if (match[s][k]) {
                sigma[s] = static_cast<int>(k);
                ++count;
            }
        if (count != 1) return {};
        if (used[sigma[s]]) return {};
        used[sigma[s]] = true;
    }
    return sigma;
}

// d = 3 chain products that violate exactly one parenthesization pattern:
//  left  (op1, op2): e1 op1 e1 = e2, e2 op2 e1 = e3
//  right (op1, op2): e1 op2 e1 = e2, e1 op1 e2 = e3
inline Element path_fixture(ShapeFamily fam, const Term& t) {
    Element pi(fam, 2, 3, 3);
    if (t.left) {
        pi.at(t.op1, 0 * 3 + 0, 1) = Rational(1);
        pi.at(t.op2, 1 * 3 + 0, 2) = Rational(1);
    } else {
        pi.at(t.op2, 0 * 3 + 0, 1) = Rational(1);
        pi.at(t.op1, 0 * 3 + 1, 2) = Rational(1);
    }
    return pi;
}

// a pattern appearing in identity k and nowhere else
inline const Term* unique_pattern(const std::vector<Identity>& ids, size_t k) {
    for (const Term& t : ids[k]) {
        bool unique = true;
        for (size_t j = 0; j < ids.size() && unique; ++j) {
            if (j == k) continue;
            for (const Term& u : ids[j])
                if (u.op1 == t.op1 && u.op2 == t.op2 && u.left == t.left) {
                    unique = false;
                    break;
                }
        }
        if (unique) return &t;
    }
    return nullptr;
}

}  // namespace identities
