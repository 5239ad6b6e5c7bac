#include "doctest.h"

#include "fcx/errors.hpp"
#include "fcx/fixtures.hpp"
#include "fcx/witt.hpp"

using namespace fcx;

namespace {

// independent irreducibility scan over monic quadratics mod p: no roots
std::vector<std::uint64_t> smallest_irreducible_quadratic(std::uint64_t p) {
    for (std::uint64_t a1 = 0; a1 < p; ++a1)
        for (std::uint64_t a0 = 0; a0 < p; ++a0) {
            bool has_root = false;
            for (std::uint64_t x = 0; x < p && !has_root; ++x)
                if ((x * x + a1 * x + a0) % p == 0) has_root = true;
            if (!has_root) return {a0, a1};
        }
    return {};
}

}  // namespace

TEST_CASE("ring creation") {
    WittRing r1 = WittRing::create(3, 1, 8);
    CHECK(r1.modulus_low() == std::vector<std::uint64_t>{0});  // plain Z/3^8

    WittRing r2 = WittRing::create(3, 2, 8);
    CHECK(r2.modulus_low() == smallest_irreducible_quadratic(3));  // x^2 + 1
    CHECK(r2.modulus_low() == std::vector<std::uint64_t>{1, 0});

    CHECK_THROWS_AS(WittRing::create(4, 2, 8), DomainError);
    CHECK_THROWS_AS(WittRing::create(1, 1, 1), DomainError);

    // determinism: same parameters, interchangeable rings
    WittRing r2b = WittRing::create(3, 2, 8);
    CHECK(r2.same_ring(r2b));
    CHECK(r2.sigma_powers() == r2b.sigma_powers());

    // p^N must fit the residue representation
    CHECK_THROWS_AS(WittRing::create(5, 1, 40), DomainError);
}

TEST_CASE("frobenius") {
    WittRing R = WittRing::create(3, 2, 8);
    WittElem five = WittElem::from_integer(R, 5);
    CHECK(five.sigma() == five);  // sigma fixes Z_p

    WittRing R1 = WittRing::create(3, 1, 8);
    fixtures::Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        WittElem x = fixtures::random_elem(rng, R1);
        CHECK(x.sigma() == x);  // s = 1: identity
    }

    WittElem th = WittElem::generator(R);
    WittElem st = th.sigma();
    CHECK(st != th);
    CHECK(st.sigma() == th);  // sigma^2 = id is the oracle for the Newton iteration
    // sigma(theta) must be a root of the modulus congruent to theta^3 mod 3
    WittElem mod_at_st = st * st + WittElem::one(R);  // x^2 + 1
    CHECK(mod_at_st.is_zero());
    WittElem th_cubed = th * th * th;
    CHECK((st - th_cubed).val() >= 1);
}

TEST_CASE("sigma is a ring automorphism with sigma^s = id") {
    for (int s : {1, 2, 3}) {
        WittRing R = WittRing::create(3, s, 6);
        fixtures::Rng rng(17 + s);
        for (int t = 0; t < 20; ++t) {
            WittElem x = fixtures::random_elem(rng, R);
            WittElem y = fixtures::random_elem(rng, R);
            CHECK((x + y).sigma() == x.sigma() + y.sigma());
            CHECK((x * y).sigma() == x.sigma() * y.sigma());
            CHECK(x.sigma_iter(s) == x);
        }
    }
}

TEST_CASE("valuation") {
    WittRing R1 = WittRing::create(3, 1, 8);
    CHECK(WittElem::from_integer(R1, 9).val() == 2);
    CHECK(WittElem::zero(R1).val() == 8);  // the AtLeastN sentinel

    WittRing R = WittRing::create(3, 2, 8);
    WittElem p_theta = WittElem::from_integer(R, 3) * WittElem::generator(R);
    CHECK(p_theta.val() == 1);  // theta is a unit (unit constant term in the modulus)

    fixtures::Rng rng(23);
    for (int t = 0; t < 40; ++t) {
        WittElem x = fixtures::random_elem(rng, R);
        WittElem y = fixtures::random_elem(rng, R);
        int vx = x.val(), vy = y.val();
        if (vx < 8 && vy < 8 && vx + vy < 8) CHECK((x * y).val() == vx + vy);
    }
}

TEST_CASE("unit inverse and exact p-power division") {
    WittRing R = WittRing::create(5, 2, 6);
    fixtures::Rng rng(29);
    for (int t = 0; t < 20; ++t) {
        WittElem u = fixtures::random_unit(rng, R);
        CHECK(u * u.inverse() == WittElem::one(R));
    }
    WittElem x = fixtures::random_elem(rng, R).times_p_pow(2);
    CHECK(x.divide_p_pow(2).times_p_pow(2) == x);
    WittElem unit = fixtures::random_unit(rng, R);
    CHECK_THROWS_AS(unit.divide_p_pow(1), DomainError);
    CHECK_THROWS_AS((unit.times_p_pow(1)).inverse(), DomainError);
}
