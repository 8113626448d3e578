#include <doctest.h>

#include <random>

#include "loday/qmatrix.hpp"
#include "oracles.hpp"

using namespace loday;

namespace {

QMatrix from_rows(const std::vector<std::vector<long>>& rows, int cols) {
    QMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols; ++c) m.set(static_cast<int>(r), c, Rational(rows[r][c]));
    return m;
}

QMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
    QMatrix m(rows, cols);
    std::uniform_int_distribution<int> die(0, 3), num(-3, 3), den(1, 2);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (die(rng) == 0) m.set(r, c, Rational(num(rng), den(rng)));
    return m;
}

bool is_zero_vector(const QVector& v) {
    for (const Rational& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("rank on the stated examples") {
    CHECK(rank(from_rows({{1, 0}, {0, 1}}, 2)) == 2);
    CHECK(rank(from_rows({{1, 2}, {2, 4}}, 2)) == 1);
    CHECK(rank(QMatrix(3, 5)) == 0);
}

TEST_CASE("kernel_basis on the stated examples") {
    CHECK(kernel_basis(from_rows({{1, 0}, {0, 1}}, 2)).empty());

    auto basis = kernel_basis(from_rows({{1, 2}, {2, 4}}, 2));
    REQUIRE(basis.size() == 1);
    // proportional to (-2, 1)
    CHECK(basis[0][0] * Rational(1) == basis[0][1] * Rational(-2));
    CHECK_FALSE(is_zero_vector(basis[0]));

    CHECK(kernel_basis(QMatrix(2, 2)).size() == 2);
}

TEST_CASE("solve on the stated examples") {
    QMatrix id2 = from_rows({{1, 0}, {0, 1}}, 2);
    QVector b{Rational(3), Rational(-5, 2)};
    auto x = solve(id2, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    QMatrix sing = from_rows({{1, 2}, {2, 4}}, 2);
    CHECK_FALSE(solve(sing, {Rational(1), Rational(3)}).has_value());

    auto y = solve(sing, {Rational(1), Rational(2)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] + Rational(2) * (*y)[1] == Rational(1));

    CHECK_THROWS_AS(solve(sing, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("bounds checking") {
    QMatrix m(2, 3);
    CHECK_THROWS_AS(m.set(2, 0, Rational(1)), std::out_of_range);
    CHECK_THROWS_AS(m.get(0, 3), std::out_of_range);
    m.set(1, 2, Rational(1));
    m.set(1, 2, Rational(0));  // zero entries are not stored
    CHECK(m.nonzero_count() == 0);
}

TEST_CASE("rank-nullity, exact kernels and solve certificates on random matrices") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 7);
        int cols = 1 + static_cast<int>(rng() % 7);
        QMatrix m = random_matrix(rows, cols, rng);

        int r = rank(m);
        CHECK(r == oracles::dense_rank(oracles::to_dense(m)));

        auto basis = kernel_basis(m);
        CHECK(r + static_cast<int>(basis.size()) == cols);
        for (const QVector& v : basis) CHECK(is_zero_vector(m.apply(v)));

        // b in the image: solve must reproduce it exactly
        QVector x0(cols);
        for (Rational& v : x0) v = Rational(static_cast<long>(rng() % 5) - 2);
        QVector b = m.apply(x0);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);

        // random b: absence must match a rank jump of the augmented matrix
        QVector b2(rows);
        for (Rational& v : b2) v = Rational(static_cast<long>(rng() % 5) - 2);
        auto x2 = solve(m, b2);
        auto dense = oracles::to_dense(m);
        for (int row = 0; row < rows; ++row) dense[row].push_back(b2[row]);
        int augmented = oracles::dense_rank(dense);
        if (x2) {
            CHECK(m.apply(*x2) == b2);
            CHECK(augmented == r);
        } else {
            CHECK(augmented == r + 1);
        }
    }
}
