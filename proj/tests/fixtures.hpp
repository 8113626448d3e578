#pragma once

#include <random>

#include "loday/algebra.hpp"
#include "loday/cohomology.hpp"

// Small validated algebras used across the suites. The d = 1 fixtures were
// found by the exhaustive structure-constant search exercised in
// test_algebra.cpp.
namespace fixtures {

using namespace loday;

inline AlgebraSpec zero_algebra(ShapeFamily fam, int d) { return make_algebra(fam, d); }

// dendriform, d = 1: e < e = e, e > e = 0
inline AlgebraSpec d1() {
    AlgebraSpec a = make_algebra(ShapeFamily::dendriform, 1);
    set_product(a, "1", 1, 1, {Rational(1)});
    return a;
}

// associative, d = 1: e^2 = e
inline AlgebraSpec assoc_k() {
    AlgebraSpec a = make_algebra(ShapeFamily::associative, 1);
    set_product(a, "*", 1, 1, {Rational(1)});
    return a;
}

// Q[x]/(x^3) with basis e1 = 1, e2 = x, e3 = x^2
inline AlgebraSpec qx3() {
    AlgebraSpec a = make_algebra(ShapeFamily::associative, 3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            QVector v(3, Rational(0));
            if (i + j - 1 <= 3) v[i + j - 2] = Rational(1);
            set_product(a, "*", i, j, v);
        }
    return a;
}

// the derivation x d/dx of qx3: e_i -> (i-1) e_i
inline Element qx3_euler() {
    Element d(ShapeFamily::associative, 1, 3, 3);
    d.at(0, 1, 1) = Rational(1);
    d.at(0, 2, 2) = Rational(2);
    return d;
}

// dialgebra, d = 1: both bars equal the idempotent product
inline AlgebraSpec dia1() {
    AlgebraSpec a = make_algebra(ShapeFamily::dialgebra, 1);
    set_product(a, "((L,L),L)", 1, 1, {Rational(1)});
    set_product(a, "(L,(L,L))", 1, 1, {Rational(1)});
    return a;
}

// dialgebra on K[x]/(x^2) through the projection p(1) = 1, p(x) = 0:
// a -| b = a p(b), a |- b = p(a) b; the two bars differ
inline AlgebraSpec dia2() {
    AlgebraSpec a = make_algebra(ShapeFamily::dialgebra, 2);
    set_product(a, "(L,(L,L))", 1, 1, {Rational(1), Rational(0)});
    set_product(a, "(L,(L,L))", 2, 1, {Rational(0), Rational(1)});
    set_product(a, "((L,L),L)", 1, 1, {Rational(1), Rational(0)});
    set_product(a, "((L,L),L)", 1, 2, {Rational(0), Rational(1)});
    return a;
}

// trialgebra, d = 1: all three bars idempotent
inline AlgebraSpec tria1() {
    AlgebraSpec a = make_algebra(ShapeFamily::trialgebra, 1);
    set_product(a, "((L,L),L)", 1, 1, {Rational(1)});
    set_product(a, "(L,(L,L))", 1, 1, {Rational(1)});
    set_product(a, "(L,L,L)", 1, 1, {Rational(1)});
    return a;
}

// tridendriform, d = 1: (<, >, .) = (1, 1, -1); the weight -1 Rota-Baxter
// image of e^2 = e with R = id
inline AlgebraSpec trid1() {
    AlgebraSpec a = make_algebra(ShapeFamily::tridendriform, 1);
    set_product(a, "{1}", 1, 1, {Rational(1)});
    set_product(a, "{2}", 1, 1, {Rational(1)});
    set_product(a, "{1,2}", 1, 1, {Rational(-1)});
    return a;
}

// quadri, d = 1: product of two copies of the (1, 0) dendriform structure
inline AlgebraSpec quad1() {
    AlgebraSpec a = make_algebra(ShapeFamily::quadri, 1);
    set_product(a, "(1,1)", 1, 1, {Rational(1)});
    return a;
}

// ennea, d = 1: cartesian square of trid1
inline AlgebraSpec enn1() {
    AlgebraSpec a = make_algebra(ShapeFamily::ennea, 1);
    auto coeff = [](const std::string& s) {
        return s == "{1,2}" ? Rational(-1) : Rational(1);
    };
    for (const std::string& l : {"{1}", "{2}", "{1,2}"})
        for (const std::string& r : {"{1}", "{2}", "{1,2}"})
            set_product(a, "(" + l + "," + r + ")", 1, 1, {coeff(l) * coeff(r)});
    return a;
}

// dendriform, d = 2: semidirect product of d1 with a trivial line
inline AlgebraSpec dend2() { return semidirect_product(d1(), trivial_representation(d1(), 1)); }

inline RotaBaxterSpec rb_scalar(long weight) {
    return RotaBaxterSpec{assoc_k(), identity_matrix(1), Rational(weight)};
}

// weight 0 on K[x]/(x^2) with R(1) = x, R(x) = 0
inline RotaBaxterSpec rb_nilpotent() {
    AlgebraSpec a = make_algebra(ShapeFamily::associative, 2);
    set_product(a, "*", 1, 1, {Rational(1), Rational(0)});
    set_product(a, "*", 1, 2, {Rational(0), Rational(1)});
    set_product(a, "*", 2, 1, {Rational(0), Rational(1)});
    set_product(a, "*", 2, 2, {Rational(0), Rational(0)});
    DenseMatrix r = zero_matrix(2, 2);
    r[1][0] = Rational(1);
    return RotaBaxterSpec{a, r, Rational(0)};
}

// one validated fixture with nonzero products per family
inline std::vector<AlgebraSpec> family_fixtures() {
    return {assoc_k(), dia1(), tria1(), d1(), trid1(), quad1(), enn1()};
}

inline Rational random_small(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-2, 2), den(1, 2);
    return Rational(num(rng), den(rng));
}

// random element of the span of a kernel basis
inline std::optional<Element> random_combination(const std::vector<QVector>& basis,
                                                 ShapeFamily fam, int arity, int in_dim,
                                                 int out_dim, std::mt19937_64& rng) {
    if (basis.empty()) return std::nullopt;
    QVector v(basis[0].size(), Rational(0));
    for (const QVector& b : basis) {
        Rational c = random_small(rng);
        for (size_t k = 0; k < v.size(); ++k) v[k] += c * b[k];
    }
    return Element::from_vector(fam, arity, in_dim, out_dim, v);
}

}  // namespace fixtures
