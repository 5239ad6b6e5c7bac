#include <algorithm>

#include "doctest.h"

#include "fcx/errors.hpp"
#include "fcx/fixtures.hpp"
#include "fcx/hodge_newton.hpp"

using namespace fcx;
using fixtures::Rng;

namespace {

ConvexPolygon poly(std::vector<Rational> s) { return ConvexPolygon::from_slopes(std::move(s)); }

}  // namespace

TEST_CASE("hn_reducible") {
    ConvexPolygon two = poly({Rational(0), Rational(1, 2)});
    CHECK(hn_reducible(two, two, LeviPartition{{1, 1}}));

    CHECK_FALSE(hn_reducible(poly({Rational(1, 2), Rational(1, 2)}),
                             poly({Rational(0), Rational(1)}), LeviPartition{{1, 1}}));

    // a cut inside an isoclinic stretch fails the strict-break condition
    ConvexPolygon iso = poly({Rational(1), Rational(1), Rational(2)});
    CHECK_FALSE(hn_reducible(iso, iso, LeviPartition{{1, 2}}));
    CHECK(hn_reducible(iso, iso, LeviPartition{{2, 1}}));

    CHECK_THROWS_AS(hn_reducible(two, poly({Rational(0)}), LeviPartition{{1, 1}}), DomainError);
}

TEST_CASE("hn_levis returns the finest admissible partition") {
    ConvexPolygon two = poly({Rational(0), Rational(1, 2)});
    auto P = hn_levis(two, two);
    REQUIRE(P.has_value());
    CHECK(P->sizes == std::vector<int>{1, 1});

    CHECK_FALSE(hn_levis(poly({Rational(1, 2), Rational(1, 2)}), poly({Rational(0), Rational(1)}))
                    .has_value());

    // mu-ordinary: every break is a contact point
    ConvexPolygon three = poly({Rational(0), Rational(1, 2), Rational(1)});
    auto P3 = hn_levis(three, three);
    REQUIRE(P3.has_value());
    CHECK(P3->sizes == std::vector<int>{1, 1, 1});
}

TEST_CASE("hn_decompose on the rank-4 two-slope fixture") {
    ELStructure S = fixtures::f5_rank4_two_slope();
    HNReport rep = hn_decompose(S, LeviPartition{{1, 1}});
    REQUIRE(rep.factors.size() == 2);
    CHECK(rep.factors[0].nu == poly({Rational(0)}));
    CHECK(rep.factors[0].mu_bar == poly({Rational(0)}));
    CHECK(rep.factors[1].nu == poly({Rational(1, 2)}));
    CHECK(rep.factors[1].mu_bar == poly({Rational(1, 2)}));
    CHECK(rep.factors[0].type == ELType{1, {0, 0}});
    CHECK(rep.factors[1].type == ELType{1, {1, 0}});
    CHECK(rep.isogeny_denominator == 0);
    for (const auto& f : rep.factors) CHECK(is_mu_ordinary(f.structure));
}

TEST_CASE("hn_decompose is invariant under graded scrambling") {
    Rng rng(307);
    ELStructure S0 = fixtures::f5_rank4_two_slope();
    for (int t = 0; t < 15; ++t) {
        WittMatrix g =
            fixtures::random_graded_unimodular(rng, S0.crystal.ring, S0.grading, S0.m);
        ELStructure S = el_validate(sigma_conjugate(S0.crystal, g), S0.m, S0.grading);
        HNReport rep = hn_decompose(S, LeviPartition{{1, 1}});
        REQUIRE(rep.factors.size() == 2);
        CHECK(rep.factors[0].nu == poly({Rational(0)}));
        CHECK(rep.factors[1].nu == poly({Rational(1, 2)}));
        CHECK(rep.factors[0].type == ELType{1, {0, 0}});
        CHECK(rep.factors[1].type == ELType{1, {1, 0}});
    }
}

TEST_CASE("hn_decompose rejects non-reducible data") {
    ELStructure ss = el_validate(fixtures::f3_supersingular(), 1, {0, 0});
    CHECK_THROWS_AS(hn_decompose(ss, LeviPartition{{1, 1}}), DomainError);
}

TEST_CASE("mu-ordinary slope decomposition has mu-ordinary isoclinic factors") {
    Rng rng(311);
    WittRing R = WittRing::create(3, 2, 18);
    // slopes 0, 1/2 and 1, every block minuscule stepwise
    std::vector<fixtures::BlockPlan> plans = {{2, std::vector<int>{0, 0}},
                                              {2, std::vector<int>{1, 0}},
                                              {2, std::vector<int>{1, 1}}};
    auto pc = fixtures::planned_multislope(R, plans, 2);
    ELStructure S = el_validate(
        sigma_conjugate(pc.X, fixtures::random_graded_unimodular(rng, R, pc.grading, 2)), 2,
        pc.grading);
    ConvexPolygon nu = el_newton(S);
    ConvexPolygon mb = el_sigma_hodge_of(S);
    REQUIRE(nu == mb);  // the planned structure is mu-ordinary
    auto P = hn_levis(nu, mb);
    REQUIRE(P.has_value());
    CHECK(P->sizes == std::vector<int>{1, 1, 1});
    HNReport rep = hn_decompose(S, *P);
    REQUIRE(rep.factors.size() == 3);
    for (const auto& f : rep.factors) {
        CHECK(f.nu.is_isoclinic());
        CHECK(is_mu_ordinary(f.structure));
    }
}

TEST_CASE("coarser partitions produce multi-slope factors") {
    WittRing R = WittRing::create(3, 1, 18);
    auto pc = fixtures::planned_multislope(R, {{1, 0}, {2, 1}, {1, 1}}, 1);
    // nu = (0, 1/2, 1/2, 1); cut only at l = 1
    ELStructure S = el_validate(pc.X, 1, pc.grading);
    HNReport rep = hn_decompose(S, LeviPartition{{1, 3}});
    REQUIRE(rep.factors.size() == 2);
    CHECK(rep.factors[0].nu == poly({Rational(0)}));
    CHECK(rep.factors[1].nu == poly({Rational(1, 2), Rational(1, 2), Rational(1)}));
}

TEST_CASE("el_realization") {
    // one orbit of size 2, fiber dimension 3
    auto f = el_realization({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}, {1, 0});
    REQUIRE(f.size() == 1);
    CHECK(f[0] == ELRealizationFactor{2, 3});

    // split case: sigma fixes every label
    auto g = el_realization({{0, 0}, {1, 0}, {1, 1}, {2, 0}}, {0, 1, 2});
    REQUIRE(g.size() == 3);
    CHECK(g[0] == ELRealizationFactor{1, 1});
    CHECK(g[1] == ELRealizationFactor{1, 1});
    CHECK(g[2] == ELRealizationFactor{1, 2});

    // inconsistent dimensions along an orbit
    CHECK_THROWS_AS(el_realization({{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}}, {1, 0}),
                    DomainError);
}

TEST_CASE("el_realization is sigma-equivariant under relabeling") {
    Rng rng(313);
    for (int t = 0; t < 20; ++t) {
        const int k = 2 + (int)rng.below(4);
        // random permutation sigma and random dims constant on sigma-orbits
        std::vector<int> sigma(k);
        for (int i = 0; i < k; ++i) sigma[i] = i;
        for (int i = k - 1; i > 0; --i) std::swap(sigma[i], sigma[rng.below(i + 1)]);
        std::vector<int> dim(k, 0);
        for (int i = 0; i < k; ++i) {
            if (dim[i]) continue;
            int d = 1 + (int)rng.below(3);
            int cur = i;
            while (dim[cur] == 0) {
                dim[cur] = d;
                cur = sigma[cur];
            }
        }
        std::vector<std::pair<int, int>> weights;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < dim[i]; ++j) weights.emplace_back(i, j);
        auto base = el_realization(weights, sigma);

        // relabel by a permutation tau commuting with sigma: conjugate both
        // (use a power of sigma, which always commutes)
        int pw = 1 + (int)rng.below(3);
        std::vector<int> tau(k);
        for (int i = 0; i < k; ++i) {
            int cur = i;
            for (int q = 0; q < pw; ++q) cur = sigma[cur];
            tau[i] = cur;
        }
        std::vector<std::pair<int, int>> relabeled;
        for (auto& [l, pos] : weights) relabeled.emplace_back(tau[l], pos);
        std::vector<int> sigma_conj(k);
        for (int i = 0; i < k; ++i) sigma_conj[tau[i]] = tau[sigma[i]];
        auto moved = el_realization(relabeled, sigma_conj);
        CHECK(base == moved);  // same multiset (both sorted)
    }
}
