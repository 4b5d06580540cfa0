#include <doctest.h>

#include <random>

#include "deforma/errors.hpp"
#include "deforma/matrix.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace deforma;

namespace {

RatMatrix from_rows(std::size_t rows, std::size_t cols, std::vector<std::vector<long>> data) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(data[i][j]);
    return m;
}

} // namespace

TEST_CASE("rref on rank-one, identity and permutation matrices") {
    auto [r1, p1] = rref(from_rows(2, 2, {{1, 2}, {2, 4}}));
    CHECK(p1 == std::vector<std::size_t>{0});
    CHECK(r1(0, 0) == Rational(1));
    CHECK(r1(0, 1) == Rational(2));
    CHECK(r1(1, 0) == Rational(0));
    CHECK(r1(1, 1) == Rational(0));

    auto id = RatMatrix::identity(3);
    auto [r2, p2] = rref(id);
    CHECK(r2 == id);
    CHECK(p2 == std::vector<std::size_t>{0, 1, 2});

    auto [r3, p3] = rref(from_rows(2, 2, {{0, 1}, {1, 0}}));
    CHECK(r3 == RatMatrix::identity(2));
    CHECK(p3 == std::vector<std::size_t>{0, 1});
}

TEST_CASE("kernel examples") {
    auto k1 = kernel(from_rows(2, 2, {{1, 2}, {2, 4}}));
    REQUIRE(k1.dim() == 1);
    // echelonized representative of span{(-2, 1)}
    CHECK(k1.vectors[0] == Vec{Rational(1), Rational(-1, 2)});
    CHECK(k1.contains(Vec{Rational(-2), Rational(1)}));

    CHECK(kernel(RatMatrix::identity(4)).dim() == 0);
    CHECK(kernel(RatMatrix(2, 3)).dim() == 3);
}

TEST_CASE("image examples") {
    CHECK(image(RatMatrix(3, 2)).dim() == 0);
    auto im = image(RatMatrix::identity(3));
    CHECK(im.dim() == 3);
    CHECK(im.vectors[0] == Vec{Rational(1), Rational(0), Rational(0)});

    auto single = image(from_rows(2, 1, {{1}, {2}}));
    REQUIRE(single.dim() == 1);
    CHECK(single.contains(Vec{Rational(1), Rational(2)}));
}

TEST_CASE("solve_particular: identity, inconsistent, zero") {
    Vec b{Rational(3), Rational(-7, 2)};
    auto x = solve_particular(RatMatrix::identity(2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    CHECK_FALSE(solve_particular(from_rows(2, 2, {{1, 2}, {2, 4}}), {Rational(1), Rational(3)})
                    .has_value());

    auto z = solve_particular(RatMatrix(2, 2), {Rational(0), Rational(0)});
    REQUIRE(z.has_value());
    CHECK(is_zero(*z));
}

TEST_CASE("solve_particular returns the canonical solution (non-pivot coords zero)") {
    // x + 2y = 5 has pivot x; canonical solution sets y = 0
    auto x = solve_particular(from_rows(1, 2, {{1, 2}}), {Rational(5)});
    REQUIRE(x.has_value());
    CHECK(*x == Vec{Rational(5), Rational(0)});
}

TEST_CASE("quotient_basis examples") {
    auto line = make_subspace(2, {{Rational(1), Rational(0)}});
    auto q0 = quotient_basis(line, line);
    CHECK(q0.dim() == 0);

    SubspaceBasis empty;
    empty.ambient_dim = 2;
    auto q1 = quotient_basis(empty, line);
    REQUIRE(q1.dim() == 1);
    CHECK(q1.representatives[0] == Vec{Rational(1), Rational(0)});
    CHECK(q1.coords_of(Vec{Rational(5), Rational(0)}) == Vec{Rational(5)});

    auto plane = make_subspace(3, {{Rational(1), Rational(1), Rational(0)}});
    std::vector<Vec> full;
    for (int i = 0; i < 3; ++i) {
        Vec v(3);
        v[i] = Rational(1);
        full.push_back(v);
    }
    auto q2 = quotient_basis(plane, make_subspace(3, full));
    CHECK(q2.dim() == 2);

    // sub vectors map to zero coordinates
    CHECK(is_zero(q2.coords_of(Vec{Rational(2), Rational(2), Rational(0)})));

    CHECK_THROWS_AS(quotient_basis(make_subspace(2, {{Rational(0), Rational(1)}}), line),
                    SubspaceNotContained);
}

TEST_CASE("rank-nullity and exact kernel membership on random matrices") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> dims(1, 6);
        std::size_t rows = dims(rng), cols = dims(rng);
        RatMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = testutil::random_rational(rng);
        auto ker = kernel(m);
        CHECK(rank(m) + ker.dim() == cols);
        CHECK(rank(m) == oracle::rank_bareiss(m));
        for (const auto& v : ker.vectors) CHECK(is_zero(m.apply(v)));

        // a consistent system solved exactly
        Vec x0 = testutil::random_vec(rng, cols);
        Vec b = m.apply(x0);
        auto x = solve_particular(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("quotient coordinates are zero exactly on the subspace") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 5;
        std::vector<Vec> super_span, sub_span;
        for (int i = 0; i < 4; ++i) super_span.push_back(testutil::random_vec(rng, n));
        auto super = make_subspace(n, super_span);
        // sub spanned by combinations of super vectors
        for (int i = 0; i < 2; ++i) {
            Vec combo(n);
            for (const auto& v : super.vectors)
                add_scaled(combo, testutil::random_rational(rng), v);
            sub_span.push_back(combo);
        }
        auto sub = make_subspace(n, sub_span);
        auto q = quotient_basis(sub, super);
        CHECK(q.dim() == super.dim() - sub.dim());
        for (const auto& v : sub.vectors) CHECK(is_zero(q.coords_of(v)));
    }
}

TEST_CASE("rational arithmetic round-trip") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Rational a = testutil::random_rational(rng, 20, 20);
        Rational b = testutil::random_rational(rng, 20, 20);
        if (b.is_zero()) continue;
        CHECK((a / b) * b == a);
    }
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(3, -6).str() == "-1/2"); // denominator kept positive
    CHECK_FALSE(Rational::parse("1/0").has_value());
    CHECK_FALSE(Rational::parse("x").has_value());
    CHECK_FALSE(Rational::parse("1/ 2").has_value());
    CHECK(Rational::parse("-3/7")->str() == "-3/7");
}
