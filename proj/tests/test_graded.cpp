#include <doctest.h>

#include <algorithm>
#include <random>

#include "deforma/errors.hpp"
#include "deforma/graded.hpp"

using namespace deforma;

namespace {

Permutation perm(std::vector<std::size_t> images) {
    Permutation p;
    p.images = std::move(images);
    return p;
}

std::vector<Permutation> all_perms(std::size_t n) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<Permutation> out;
    do {
        out.push_back(perm(idx));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    // (a b)(i) = a(b(i))
    Permutation c;
    c.images.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c.images[i] = a.images[b.images[i]];
    return c;
}

} // namespace

TEST_CASE("koszul sign basics") {
    CHECK(koszul_sign(Permutation::identity(3), {5, -2, 1}) == 1);
    CHECK(koszul_sign(perm({1, 0}), {1, 1}) == -1);
    CHECK(koszul_sign(perm({1, 0}), {0, 1}) == 1);
    CHECK_THROWS_AS(koszul_sign(perm({1, 0}), {1}), LengthMismatch);
}

TEST_CASE("antisymmetric koszul sign basics") {
    CHECK(antisym_koszul_sign(Permutation::identity(2), {3, 4}) == 1);
    CHECK(antisym_koszul_sign(perm({1, 0}), {1, 1}) == 1);  // (-1) * (-1)
    CHECK(antisym_koszul_sign(perm({1, 0}), {0, 0}) == -1); // sgn alone
}

TEST_CASE("eps is multiplicative on S3 with random degrees") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> deg(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<int> degrees{deg(rng), deg(rng), deg(rng)};
        for (const auto& a : all_perms(3))
            for (const auto& b : all_perms(3)) {
                // degrees seen by b are those of the a-permuted word
                std::vector<int> degrees_b(3);
                for (std::size_t i = 0; i < 3; ++i) degrees_b[i] = degrees[a.images[i]];
                int lhs = koszul_sign(compose(a, b), degrees);
                int rhs = koszul_sign(a, degrees) * koszul_sign(b, degrees_b);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("chi = sgn * eps for all permutations up to n = 5") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> deg(-2, 2);
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<int> degrees(n);
        for (auto& d : degrees) d = deg(rng);
        for (const auto& p : all_perms(n))
            CHECK(antisym_koszul_sign(p, degrees) ==
                  p.parity_sign() * koszul_sign(p, degrees));
    }
}

TEST_CASE("unshuffle enumeration") {
    auto u11 = unshuffles(1, 1);
    REQUIRE(u11.size() == 1);
    CHECK(u11[0].images == std::vector<std::size_t>{0});

    auto u12 = unshuffles(1, 2);
    REQUIRE(u12.size() == 2);
    CHECK(u12[0].images == std::vector<std::size_t>{0, 1});
    CHECK(u12[1].images == std::vector<std::size_t>{1, 0});

    auto u24 = unshuffles(2, 4);
    CHECK(u24.size() == 6);
    for (const auto& s : u24) {
        for (std::size_t i = 0; i + 1 < 2; ++i) CHECK(s.images[i] < s.images[i + 1]);
        for (std::size_t i = 2; i + 1 < 4; ++i) CHECK(s.images[i] < s.images[i + 1]);
    }
    // no duplicates
    for (std::size_t i = 0; i < u24.size(); ++i)
        for (std::size_t j = i + 1; j < u24.size(); ++j)
            CHECK(u24[i].images != u24[j].images);

    CHECK_THROWS_AS(unshuffles(0, 3), BadRange);
    CHECK_THROWS_AS(unshuffles(4, 3), BadRange);
}

TEST_CASE("suspension power sign") {
    CHECK(suspension_power_sign(1) == 1);
    CHECK(suspension_power_sign(2) == -1);
    CHECK(suspension_power_sign(3) == -1);
    CHECK(suspension_power_sign(4) == 1);
}

TEST_CASE("suspension shifts components") {
    GradedSpace v(std::map<int, std::size_t>{{0, 2}, {3, 1}});
    auto up = suspend(v, SuspensionDirection::up);
    CHECK(up.dim(1) == 2);
    CHECK(up.dim(4) == 1);
    auto down = suspend(v, SuspensionDirection::down);
    CHECK(down.dim(-1) == 2);
    CHECK(down.dim(2) == 1);
}

namespace {

GradedSpace two_odd_generators() {
    // two odd generators plus a degree-2 slot to receive their products
    return GradedSpace(std::map<int, std::size_t>{{1, 2}, {2, 1}});
}

} // namespace

TEST_CASE("evaluate: zeros, identity, bilinearity") {
    GradedSpace v(std::map<int, std::size_t>{{0, 3}});
    GradedMultilinearMap idmap(1, 0, v, v);
    for (std::size_t i = 0; i < 3; ++i) {
        Vec e(3);
        e[i] = Rational(1);
        idmap.set({BasisRef{0, i}}, e);
    }
    GradedElement e0 = GradedElement::basis(v, {0, 0});
    CHECK(idmap.evaluate({e0}) == e0);
    CHECK(idmap.evaluate({GradedElement::zero(v, 0)}).is_zero());

    GradedMultilinearMap f(2, 0, v, v);
    Vec e3(3);
    e3[2] = Rational(1);
    f.set({BasisRef{0, 0}, BasisRef{0, 1}}, e3);
    GradedElement a = GradedElement::zero(v, 0), b = GradedElement::zero(v, 0);
    a.coords[0] = Rational(2);
    b.coords[1] = Rational(3);
    GradedElement r = f.evaluate({a, b});
    CHECK(r.coords[2] == Rational(6));

    CHECK_THROWS_AS(f.evaluate({a}), ArityMismatch);
}

TEST_CASE("antisymmetrize: idempotent, fixes antisymmetric maps, matches direct sum") {
    GradedSpace v = two_odd_generators();
    // symmetric bilinear map on two odd generators
    GradedMultilinearMap f(2, 0, v, v);
    Vec out(1);
    out[0] = Rational(1);
    f.set({BasisRef{1, 0}, BasisRef{1, 1}}, out);
    f.set({BasisRef{1, 1}, BasisRef{1, 0}}, out);

    auto a = antisymmetrize(f);
    // direct chi-sum: for two odd generators chi(swap) = +1, so the projection
    // keeps the symmetric part intact
    CHECK(a == f);
    CHECK(is_chi_antisymmetric(a));
    CHECK(antisymmetrize(a) == a);

    // arity 1 is untouched
    GradedMultilinearMap g(1, 0, v, v);
    Vec e(2);
    e[1] = Rational(1);
    g.set({BasisRef{1, 0}}, e);
    CHECK(antisymmetrize(g) == g);
}

TEST_CASE("antisymmetrize projects even-degree symmetric input to zero") {
    GradedSpace v(std::map<int, std::size_t>{{0, 2}});
    GradedMultilinearMap f(2, 0, v, v);
    Vec out(2);
    out[0] = Rational(1);
    f.set({BasisRef{0, 0}, BasisRef{0, 1}}, out);
    f.set({BasisRef{0, 1}, BasisRef{0, 0}}, out);
    // chi(swap) = -1 in even degrees, so the symmetric part dies
    CHECK(antisymmetrize(f).is_zero());
}

TEST_CASE("evaluate is multilinear in every slot") {
    std::mt19937_64 rng(14);
    GradedSpace v(std::map<int, std::size_t>{{0, 2}, {1, 2}});
    GradedMultilinearMap f(3, 0, v, v);
    for (const auto& tuple : basis_tuples(v, 3)) {
        int out_deg = f.output_degree(tuple);
        if (v.dim(out_deg) == 0) continue;
        Vec out(v.dim(out_deg));
        for (auto& x : out) x = Rational(std::uniform_int_distribution<long>(-2, 2)(rng));
        f.set(tuple, out);
    }
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<int> degs(0, 1);
        std::uniform_int_distribution<long> coef(-3, 3);
        int d0 = degs(rng), d1 = degs(rng), d2 = degs(rng);
        auto rand_elt = [&](int deg) {
            GradedElement e = GradedElement::zero(v, deg);
            for (auto& c : e.coords) c = Rational(coef(rng));
            return e;
        };
        GradedElement a = rand_elt(d0), b = rand_elt(d1), c = rand_elt(d2);
        GradedElement x = rand_elt(d1), y = rand_elt(d1);
        Rational s(coef(rng)), t(coef(rng));
        // middle slot: f(a, s x + t y, c) = s f(a,x,c) + t f(a,y,c)
        GradedElement combo = GradedElement::zero(v, d1);
        combo.add_scaled(s, x);
        combo.add_scaled(t, y);
        GradedElement lhs = f.evaluate({a, combo, c});
        GradedElement rhs = GradedElement::zero(v, lhs.degree);
        rhs.add_scaled(s, f.evaluate({a, x, c}));
        rhs.add_scaled(t, f.evaluate({a, y, c}));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("antisymmetrize output satisfies the sign rule exhaustively up to arity 4") {
    std::mt19937_64 rng(13);
    GradedSpace v(std::map<int, std::size_t>{{0, 1}, {1, 2}});
    for (std::size_t k = 2; k <= 4; ++k) {
        GradedMultilinearMap f(k, 0, v, v);
        // a few random entries
        auto tuples = basis_tuples(v, k);
        std::uniform_int_distribution<std::size_t> pick(0, tuples.size() - 1);
        for (int t = 0; t < 5; ++t) {
            const auto& tuple = tuples[pick(rng)];
            int out_deg = f.output_degree(tuple);
            if (v.dim(out_deg) == 0) continue;
            Vec out(v.dim(out_deg));
            out[0] = Rational(1 + t);
            f.set(tuple, out);
        }
        auto a = antisymmetrize(f);
        CHECK(is_chi_antisymmetric(a));
        CHECK(antisymmetrize(a) == a);
    }
}
