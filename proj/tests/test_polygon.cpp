#include "doctest.h"

#include "fcx/errors.hpp"
#include "fcx/fixtures.hpp"
#include "fcx/polygon.hpp"

using namespace fcx;

namespace {

ConvexPolygon poly(std::vector<Rational> s) { return ConvexPolygon::from_slopes(std::move(s)); }

}  // namespace

TEST_CASE("from_slopes sorts and keeps multiplicity") {
    CHECK(poly({Rational(1), Rational(0)}) == poly({Rational(0), Rational(1)}));
    CHECK(poly({}).height() == 0);
    ConvexPolygon half = poly({Rational(1, 2), Rational(1, 2)});
    CHECK(half.height() == 2);
    CHECK(half.slope(0) == Rational(1, 2));
    CHECK(half.is_isoclinic());
}

TEST_CASE("lies_above matches the partial-sum order") {
    ConvexPolygon ss = poly({Rational(1, 2), Rational(1, 2)});
    ConvexPolygon ord = poly({Rational(0), Rational(1)});
    CHECK(lies_above(ss, ord));        // supersingular above ordinary
    CHECK(lies_above(ord, ord));       // reflexive
    CHECK_FALSE(lies_above(ord, ss));  // l = 1 partial sum 0 - 1/2 < 0
    CHECK_THROWS_AS(lies_above(ord, poly({Rational(0)})), DomainError);
}

TEST_CASE("break points") {
    auto bp = break_points(poly({Rational(0), Rational(1)}));
    REQUIRE(bp.size() == 3);
    CHECK(bp[0] == std::make_pair(0, Rational(0)));
    CHECK(bp[1] == std::make_pair(1, Rational(0)));
    CHECK(bp[2] == std::make_pair(2, Rational(1)));

    auto iso = break_points(poly({Rational(1, 2), Rational(1, 2)}));
    REQUIRE(iso.size() == 2);
    CHECK(iso[0] == std::make_pair(0, Rational(0)));
    CHECK(iso[1] == std::make_pair(2, Rational(1)));

    // partial sums 0, 1/2, 1, 2
    auto four = break_points(poly({Rational(0), Rational(1, 2), Rational(1, 2), Rational(1)}));
    REQUIRE(four.size() == 4);
    CHECK(four[1] == std::make_pair(1, Rational(0)));
    CHECK(four[2] == std::make_pair(3, Rational(1)));
    CHECK(four[3] == std::make_pair(4, Rational(2)));
}

TEST_CASE("contact break points") {
    ConvexPolygon ord = poly({Rational(0), Rational(1)});
    CHECK(contact_break_points(ord, ord) == std::vector<int>{1});
    CHECK(contact_break_points(poly({Rational(1, 2), Rational(1, 2)}), ord).empty());
    // compare partial sums at l = 1, 2, 3
    ConvexPolygon P = poly({Rational(0), Rational(1, 2), Rational(1, 2), Rational(1)});
    ConvexPolygon Q = poly({Rational(0), Rational(0), Rational(1), Rational(1)});
    CHECK(contact_break_points(P, Q) == std::vector<int>{1, 3});
}

TEST_CASE("contact of a polygon with itself is its interior break set") {
    fixtures::Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        std::vector<Rational> slopes;
        int n = 2 + (int)rng.below(5);
        for (int i = 0; i < n; ++i) slopes.emplace_back((int)rng.below(4), 1 + (int)rng.below(3));
        ConvexPolygon P = poly(slopes);
        std::vector<int> interior;
        for (auto& [x, y] : break_points(P))
            if (x > 0 && x < (int)P.height()) interior.push_back(x);
        CHECK(contact_break_points(P, P) == interior);
    }
}

TEST_CASE("break points are strictly increasing in x and convex in y") {
    fixtures::Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        std::vector<Rational> slopes;
        int n = 1 + (int)rng.below(6);
        for (int i = 0; i < n; ++i) slopes.emplace_back((int)rng.below(5), 1 + (int)rng.below(4));
        auto bp = break_points(poly(slopes));
        for (std::size_t i = 1; i < bp.size(); ++i) {
            CHECK(bp[i].first > bp[i - 1].first);
        }
        // segment slopes must increase strictly across interior vertices
        for (std::size_t i = 2; i < bp.size(); ++i) {
            Rational s1 = (bp[i - 1].second - bp[i - 2].second) /
                          Rational(bp[i - 1].first - bp[i - 2].first);
            Rational s2 =
                (bp[i].second - bp[i - 1].second) / Rational(bp[i].first - bp[i - 1].first);
            CHECK(s1 < s2);
        }
    }
}

TEST_CASE("lies_above is a partial order at fixed height and rise") {
    fixtures::Rng rng(13);
    // random height-4 polygons with total rise 4
    auto random_poly = [&rng]() {
        for (;;) {
            std::vector<Rational> s;
            Rational rise(0);
            for (int i = 0; i < 4; ++i) {
                Rational r((int)rng.below(9), 1 + (int)rng.below(3));
                s.push_back(r);
                rise += r;
            }
            if (rise == Rational(4)) return ConvexPolygon::from_slopes(std::move(s));
        }
    };
    for (int t = 0; t < 40; ++t) {
        ConvexPolygon A = random_poly(), B = random_poly(), C = random_poly();
        CHECK(lies_above(A, A));
        if (lies_above(A, B) && lies_above(B, A)) CHECK(A == B);
        if (lies_above(A, B) && lies_above(B, C)) CHECK(lies_above(A, C));
    }
}
