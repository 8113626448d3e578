#include <doctest.h>

#include "fixtures.hpp"
#include "loday/deformation.hpp"
#include "loday/twist.hpp"

using namespace loday;
using namespace fixtures;

namespace {

TwistPair identity_twist(ShapeFamily fam, int d) {
    return TwistPair{Element::identity(fam, d), Element::identity(fam, d)};
}

TwistPair qx3_grading() {
    DenseMatrix g = zero_matrix(3, 3);
    g[0][0] = Rational(1);
    g[1][1] = Rational(2);
    g[2][2] = Rational(4);
    Element a = element_from_matrix(ShapeFamily::associative, g);
    return TwistPair{a, a};
}

Element random_from(const std::vector<Element>& basis, std::mt19937_64& rng) {
    REQUIRE_FALSE(basis.empty());
    Element acc = basis[0];
    acc.scale(Rational(0));
    for (const Element& b : basis) {
        Element t = b;
        t.scale(random_small(rng));
        acc += t;
    }
    return acc;
}

}  // namespace

TEST_CASE("membership in the twisted subspace") {
    std::mt19937_64 rng(73);

    // alpha = beta = id admits everything
    TwistPair idtw = identity_twist(ShapeFamily::dendriform, 2);
    CHECK(twist_pair_commutes(idtw).ok);
    for (int arity = 1; arity <= 3; ++arity) {
        Element f = random_element(ShapeFamily::dendriform, arity, 2, 2, rng);
        CHECK(in_twisted_subspace(f, idtw).ok);
    }

    // the grading endomorphism keeps the multiplication of Q[x]/(x^3)
    TwistPair g = qx3_grading();
    CHECK(twist_pair_commutes(g).ok);
    CHECK(in_twisted_subspace(qx3().pi, g).ok);

    // generic elements fall outside, with a witness
    Element f = random_element(ShapeFamily::associative, 2, 3, 3, rng);
    CheckResult r = in_twisted_subspace(f, g);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.detail.empty());
}

TEST_CASE("twisted compositions degenerate correctly") {
    std::mt19937_64 rng(79);
    OperadOps plain(ShapeFamily::tridendriform, 2);
    OperadOps twisted(ShapeFamily::tridendriform, 2, plain.identity(), plain.identity());
    for (int trial = 0; trial < 5; ++trial) {
        Element f = random_element(ShapeFamily::tridendriform, 2, 2, 2, rng);
        Element g = random_element(ShapeFamily::tridendriform, 2, 2, 2, rng);
        for (int i = 1; i <= 2; ++i)
            CHECK(twisted.partial_compose(f, g, i) == plain.partial_compose(f, g, i));
        CHECK(twisted.circle(f, g) == plain.circle(f, g));
        CHECK(twisted.brace(f, {g}) == plain.brace(f, {g}));
    }

    // arity-1 arguments never see the twist powers
    TwistPair g3 = qx3_grading();
    OperadOps tq(ShapeFamily::associative, 3, g3.alpha, g3.beta);
    OperadOps pq(ShapeFamily::associative, 3);
    Element f = random_element(ShapeFamily::associative, 2, 3, 3, rng);
    Element h = random_element(ShapeFamily::associative, 1, 3, 3, rng);
    for (int i = 1; i <= 2; ++i)
        CHECK(tq.partial_compose(f, h, i) == pq.partial_compose(f, h, i));
}

TEST_CASE("twisted subspaces are closed under twisted composition") {
    TwistPair g = qx3_grading();
    auto basis2 = twisted_subspace_basis(g, ShapeFamily::associative, 3, 2);
    REQUIRE_FALSE(basis2.empty());
    OperadOps tq(ShapeFamily::associative, 3, g.alpha, g.beta);
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 4; ++trial) {
        Element f = random_from(basis2, rng);
        Element h = random_from(basis2, rng);
        for (int i = 1; i <= 2; ++i)
            CHECK(in_twisted_subspace(tq.partial_compose(f, h, i), g).ok);
    }
}

TEST_CASE("the twisted variation satisfies the operad axioms on its subspace") {
    TwistPair g = qx3_grading();
    OperadOps tq(ShapeFamily::associative, 3, g.alpha, g.beta);
    std::vector<std::vector<Element>> bases(4);
    for (int arity = 1; arity <= 3; ++arity)
        bases[arity] = twisted_subspace_basis(g, ShapeFamily::associative, 3, arity);
    auto sampler = [&](int arity, std::mt19937_64& rng) { return random_from(bases[arity], rng); };
    AxiomReport report = check_operad_axioms(tq, 3, 6, 101, sampler);
    CHECK(report.ok);
    CHECK(report.checks > 0);
}

TEST_CASE("Yau twists") {
    // identity twist reproduces pi
    AlgebraSpec a = qx3();
    TwistPair idtw = identity_twist(ShapeFamily::associative, 3);
    YauResult rid = yau_twist(a.pi, idtw);
    REQUIRE(rid.twisted_pi.has_value());
    CHECK(*rid.twisted_pi == a.pi);

    // grading twist validates in the twisted operad
    TwistPair g = qx3_grading();
    AlgebraSpec twisted_spec = a;
    YauResult r = yau_twist_check(a, g, &twisted_spec);
    REQUIRE(r.twisted_pi.has_value());
    CHECK(twisted_spec.twisted());
    CHECK(validate_algebra(twisted_spec).ok);
    CHECK_FALSE(*r.twisted_pi == a.pi);

    // {pi}{alpha, beta}(r; a, b) = pi(r; alpha a, beta b) literally
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            QVector ei(3, Rational(0)), ej(3, Rational(0));
            ei[i] = Rational(1);
            ej[j] = Rational(1);
            QVector lhs(3);
            for (int k = 0; k < 3; ++k)
                lhs[k] = r.twisted_pi->at(0, static_cast<long>(i) * 3 + j, k);
            QVector rhs = product(a, 0, matrix_apply(matrix_from_element(g.alpha), ei),
                                  matrix_apply(matrix_from_element(g.beta), ej));
            CHECK(lhs == rhs);
        }

    // a non-morphism alpha is rejected with a witness
    DenseMatrix shift = zero_matrix(3, 3);
    shift[1][0] = Rational(1);
    TwistPair bad{element_from_matrix(ShapeFamily::associative, shift),
                  element_from_matrix(ShapeFamily::associative, shift)};
    YauResult rb = yau_twist(a.pi, bad);
    CHECK_FALSE(rb.twisted_pi.has_value());
    CHECK(rb.error.find("morphism") != std::string::npos);

    // the endomorphisms of D1 are 0 and id; both give degenerate twists
    AlgebraSpec b = d1();
    YauResult r0 = yau_twist(b.pi, TwistPair{b.ops().zero(1), b.ops().zero(1)});
    REQUIRE(r0.twisted_pi.has_value());
    CHECK(r0.twisted_pi->is_zero());
    DenseMatrix two = identity_matrix(1);
    two[0][0] = Rational(2);
    TwistPair tw2{element_from_matrix(ShapeFamily::dendriform, two),
                  element_from_matrix(ShapeFamily::dendriform, two)};
    CHECK_FALSE(yau_twist(b.pi, tw2).twisted_pi.has_value());
}

TEST_CASE("deformation machinery runs over twisted operads") {
    AlgebraSpec a = qx3();
    TwistPair g = qx3_grading();
    AlgebraSpec twisted_spec = a;
    REQUIRE(yau_twist_check(a, g, &twisted_spec).twisted_pi.has_value());

    OperadOps tops = twisted_spec.ops();
    CHECK_FALSE(tops.multiplication_defect(twisted_spec.pi).has_value());

    // d_pi' squares to zero for the twisted differential
    std::mt19937_64 rng(89);
    Element f = random_element(ShapeFamily::associative, 1, 3, 3, rng);
    CHECK(tops.differential(twisted_spec.pi, tops.differential(twisted_spec.pi, f)).is_zero());

    // the constant twisted deformation passes and extends
    TruncatedDeformation def = constant_deformation(twisted_spec, 1);
    CHECK(is_deformation(tops, def, 1).ok);
    ExtendResult res = extend_deformation(tops, def);
    CHECK(res.obstruction_is_cocycle);
    CHECK(res.extended.has_value());
}
