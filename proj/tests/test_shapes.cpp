#include <doctest.h>

#include <set>

#include "loday/shapes.hpp"

using namespace loday;

namespace {
const ShapeFamily kAll[] = {ShapeFamily::associative,   ShapeFamily::dialgebra,
                            ShapeFamily::trialgebra,    ShapeFamily::dendriform,
                            ShapeFamily::tridendriform, ShapeFamily::quadri,
                            ShapeFamily::ennea};
}

TEST_CASE("family names round trip") {
    for (ShapeFamily f : kAll) {
        auto back = family_from_name(family_name(f));
        REQUIRE(back.has_value());
        CHECK(*back == f);
    }
    CHECK_FALSE(family_from_name("octonion").has_value());
}

TEST_CASE("cardinalities of the index sets") {
    const long catalan[] = {1, 2, 5, 14, 42, 132};
    for (int n = 1; n <= 6; ++n) {
        CHECK(family_count(ShapeFamily::dialgebra, n) == catalan[n - 1]);
        CHECK(family_count(ShapeFamily::associative, n) == 1);
        CHECK(family_count(ShapeFamily::dendriform, n) == n);
        CHECK(family_count(ShapeFamily::tridendriform, n) == (1L << n) - 1);
        CHECK(family_count(ShapeFamily::quadri, n) == static_cast<long>(n) * n);
        CHECK(family_count(ShapeFamily::ennea, n) == ((1L << n) - 1) * ((1L << n) - 1));
    }
    CHECK(family_count(ShapeFamily::trialgebra, 1) == 1);
    CHECK(family_count(ShapeFamily::trialgebra, 2) == 3);
    CHECK(family_count(ShapeFamily::trialgebra, 3) == 11);
    CHECK(family_count(ShapeFamily::trialgebra, 4) == 45);
    CHECK(family_count(ShapeFamily::trialgebra, 5) == 197);

    // enumerate agrees with the closed forms
    for (ShapeFamily f : kAll)
        for (int n = 1; n <= 4; ++n)
            CHECK(static_cast<long>(enumerate(f, n).size()) == family_count(f, n));
}

TEST_CASE("canonical order is sorted and duplicate-free") {
    for (ShapeFamily f : kAll) {
        for (int n = 1; n <= 4; ++n) {
            const auto& shapes = enumerate(f, n);
            std::set<std::string> seen;
            std::string prev;
            for (const Shape& s : shapes) {
                CHECK(seen.insert(s.str()).second);
                CHECK(prev < s.str());
                prev = s.str();
                CHECK(shape_index(f, n, s) == static_cast<int>(seen.size()) - 1);
            }
        }
    }
}

TEST_CASE("parse and format are inverse bijections") {
    for (ShapeFamily f : kAll)
        for (int n = 1; n <= 3; ++n)
            for (const Shape& s : enumerate(f, n)) CHECK(Shape::parse(f, s.str()) == s);

    CHECK(Shape::parse(ShapeFamily::dialgebra, "(L,(L,L))").str() == "(L,(L,L))");
    CHECK(Shape::parse(ShapeFamily::tridendriform, "{1,3}").str() == "{1,3}");
    CHECK(Shape::parse(ShapeFamily::ennea, "({1},{1,2})").str() == "({1},{1,2})");

    CHECK_THROWS_AS(Shape::parse(ShapeFamily::dialgebra, "(L,L"), ParseError);
    CHECK_THROWS_AS(Shape::parse(ShapeFamily::tridendriform, "{}"), ParseError);
    CHECK_THROWS_AS(Shape::parse(ShapeFamily::quadri, "(1,2)x"), ParseError);
    CHECK_THROWS_AS(Shape::parse(ShapeFamily::dendriform, "abc"), ParseError);
    try {
        Shape::parse(ShapeFamily::dialgebra, "(L,L,L)");  // ternary vertex is not binary
        CHECK(false);
    } catch (const std::invalid_argument&) {
        CHECK(true);
    }
}

TEST_CASE("face maps on the stated examples") {
    CHECK(face(Shape::parse(ShapeFamily::dialgebra, "((L,L),L)"), 0).str() == "(L,L)");
    CHECK(face(Shape::parse(ShapeFamily::trialgebra, "(L,L,L)"), 1).str() == "(L,L)");
    CHECK(face(Shape::parse(ShapeFamily::dialgebra, "(L,(L,L))"), 2).str() == "(L,L)");
    // contraction only when the vertex becomes unary
    CHECK(face(Shape::parse(ShapeFamily::trialgebra, "((L,L),L,L)"), 3).str() == "((L,L),L)");
    CHECK(face(Shape::parse(ShapeFamily::dialgebra, "(L,L)"), 0).str() == "L");

    CHECK_THROWS_AS(face(Shape::parse(ShapeFamily::dialgebra, "(L,L)"), 2), std::out_of_range);
    CHECK_THROWS_AS(face(Shape::label(1), 0), std::invalid_argument);
}

TEST_CASE("simplicial identity d_i d_j = d_{j-1} d_i for i < j") {
    for (ShapeFamily f : {ShapeFamily::dialgebra, ShapeFamily::trialgebra}) {
        for (int n = 2; n <= 4; ++n) {
            for (const Shape& t : enumerate(f, n)) {
                for (int j = 1; j <= n; ++j)
                    for (int i = 0; i < j; ++i)
                        CHECK(face(face(t, j), i) == face(face(t, i), j - 1));
            }
        }
    }
}

TEST_CASE("structure functions on the stated examples") {
    CHECK(r0(ShapeFamily::dendriform, 2, 2, 1, Shape::label(3)) == Shape::label(2));
    auto s1 = ri(ShapeFamily::dendriform, 2, 2, 1, Shape::label(3));
    REQUIRE(s1.size() == 2);
    CHECK(s1[0].shape == Shape::label(1));
    CHECK(s1[1].shape == Shape::label(2));

    auto s2 = ri(ShapeFamily::dendriform, 2, 2, 1, Shape::label(2));
    REQUIRE(s2.size() == 1);
    CHECK(s2[0].shape == Shape::label(2));

    CHECK(r0(ShapeFamily::quadri, 2, 2, 1, Shape::label_pair(3, 3)) == Shape::label_pair(2, 2));

    auto s3 = ri(ShapeFamily::tridendriform, 2, 2, 1, Shape::subset({3}));
    CHECK(s3.size() == 3);  // all of P_2

    // tree composites: R_0 equals the composite of interior face maps
    for (const Shape& t : enumerate(ShapeFamily::dialgebra, 3)) {
        Shape direct = face(t, 1);  // m=2, n=2, i=1: d_1
        CHECK(r0(ShapeFamily::dialgebra, 2, 2, 1, t) == direct);
    }
}

TEST_CASE("tree structure functions return single terms") {
    for (ShapeFamily f : {ShapeFamily::dialgebra, ShapeFamily::trialgebra})
        for (const Shape& t : enumerate(f, 4))
            for (int i = 1; i <= 2; ++i) {
                auto sum = ri(f, 2, 3, i, t);
                CHECK(sum.size() == 1);
                CHECK(sum[0].coeff == 1);
            }
}

TEST_CASE("quadri and ennea structure functions are componentwise") {
    for (const Shape& r : enumerate(ShapeFamily::quadri, 3)) {
        auto [a, b] = r.as_label_pair();
        for (int i = 1; i <= 2; ++i) {
            Shape q = r0(ShapeFamily::quadri, 2, 2, i, r);
            Shape da = r0(ShapeFamily::dendriform, 2, 2, i, Shape::label(a));
            Shape db = r0(ShapeFamily::dendriform, 2, 2, i, Shape::label(b));
            CHECK(q == Shape::label_pair(da.as_label(), db.as_label()));

            auto qs = ri(ShapeFamily::quadri, 2, 2, i, r);
            auto sa = ri(ShapeFamily::dendriform, 2, 2, i, Shape::label(a));
            auto sb = ri(ShapeFamily::dendriform, 2, 2, i, Shape::label(b));
            CHECK(qs.size() == sa.size() * sb.size());
        }
    }
    for (const Shape& r : enumerate(ShapeFamily::ennea, 2)) {
        const auto& [a, b] = r.as_subset_pair();
        auto es = ri(ShapeFamily::ennea, 1, 2, 1, r);
        auto sa = ri(ShapeFamily::tridendriform, 1, 2, 1, Shape::subset(a));
        auto sb = ri(ShapeFamily::tridendriform, 1, 2, 1, Shape::subset(b));
        CHECK(es.size() == sa.size() * sb.size());
    }
}

TEST_CASE("malformed shapes are rejected by the structure functions") {
    CHECK_THROWS_AS(r0(ShapeFamily::dendriform, 2, 2, 1, Shape::label(7)),
                    std::invalid_argument);
    CHECK_THROWS_AS(ri(ShapeFamily::tridendriform, 2, 2, 1, Shape::subset({5})),
                    std::invalid_argument);
    CHECK_THROWS_AS(r0(ShapeFamily::dendriform, 2, 2, 3, Shape::label(1)),
                    std::invalid_argument);
    Shape wrong_arity = Shape::parse(ShapeFamily::dialgebra, "(L,L)");
    CHECK_THROWS_AS(r0(ShapeFamily::dialgebra, 2, 2, 1, wrong_arity), std::invalid_argument);
}
