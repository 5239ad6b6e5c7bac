#include "fcx/selftest.hpp"

#include <functional>

#include "fcx/adlv.hpp"
#include "fcx/deform.hpp"
#include "fcx/errors.hpp"
#include "fcx/fixtures.hpp"
#include "fcx/hodge_newton.hpp"

namespace fcx::selftest {

namespace {

using fixtures::Rng;

ConvexPolygon poly(std::vector<Rational> s) { return ConvexPolygon::from_slopes(std::move(s)); }

struct Runner {
    io::Json cases = io::Json::array();
    bool pass = true;

    void check(const std::string& name, const std::function<bool()>& fn) {
        io::Json c = io::Json::object();
        c["name"] = name;
        bool ok = false;
        std::string detail;
        try {
            ok = fn();
        } catch (const Error& e) {
            detail = std::string(e.name()) + ": " + e.what();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        c["status"] = ok ? "pass" : "fail";
        if (!ok && !detail.empty()) c["detail"] = detail;
        pass = pass && ok;
        cases.push_back(std::move(c));
    }
};

}  // namespace

Result run(std::uint64_t seed) {
    Runner r;

    r.check("fixture_f1_identity", [] {
        FCrystal X = fixtures::f1_identity();
        ConvexPolygon zz = poly({Rational(0), Rational(0)});
        return newton_polygon(X) == zz && hodge_polygon(X) == zz;
    });
    r.check("fixture_f2_ordinary", [] {
        FCrystal X = fixtures::f2_ordinary();
        ConvexPolygon want = poly({Rational(0), Rational(1)});
        return newton_polygon(X) == want && hodge_polygon(X) == want;
    });
    r.check("fixture_f3_supersingular", [] {
        FCrystal X = fixtures::f3_supersingular();
        bool polys = newton_polygon(X) == poly({Rational(1, 2), Rational(1, 2)}) &&
                     hodge_polygon(X) == poly({Rational(0), Rational(1)});
        bool no_levi = !hn_levis(newton_polygon(X), hodge_polygon(X)).has_value();
        return polys && no_levi;
    });
    r.check("fixture_f4_mu_ordinary", [] {
        ELStructure S = fixtures::f4_mu_ordinary();
        return el_newton(S) == poly({Rational(1, 2)}) &&
               el_sigma_hodge_of(S) == poly({Rational(1, 2)}) && is_mu_ordinary(S);
    });
    r.check("fixture_f5_two_slope", [] {
        ELStructure S = fixtures::f5_rank4_two_slope();
        ConvexPolygon want = poly({Rational(0), Rational(1, 2)});
        if (!(el_newton(S) == want && el_sigma_hodge_of(S) == want)) return false;
        LeviPartition P{{1, 1}};
        return hn_reducible(el_newton(S), el_sigma_hodge_of(S), P);
    });

    r.check("mazur_random", [&] {
        Rng rng(seed ^ 0x6d617a7572ull);
        const std::uint64_t primes[3] = {2, 3, 5};
        for (int t = 0; t < 60; ++t) {
            WittRing R = WittRing::create(primes[rng.below(3)], 1 + (int)rng.below(2), 16);
            int n = 2 + (int)rng.below(3);
            FCrystal X = fixtures::random_crystal(rng, R, n, 2, 12);
            ConvexPolygon nu = newton_polygon(X), h = hodge_polygon(X);
            if (!lies_above(nu, h)) return false;
            if (!(nu.total_rise() == h.total_rise())) return false;
        }
        return true;
    });

    r.check("sigma_conjugation_invariance", [&] {
        Rng rng(seed ^ 0x7369676d61ull);
        const std::uint64_t primes[3] = {2, 3, 5};
        for (int t = 0; t < 30; ++t) {
            WittRing R = WittRing::create(primes[rng.below(3)], 1 + (int)rng.below(2), 16);
            int n = 2 + (int)rng.below(2);
            FCrystal X = fixtures::random_crystal(rng, R, n, 1, 8);
            WittMatrix g = fixtures::random_unimodular(rng, R, n);
            FCrystal Y = sigma_conjugate(X, g);
            if (!(newton_polygon(X) == newton_polygon(Y))) return false;
            if (!(kottwitz_point(X) == kottwitz_point(Y))) return false;
        }
        return true;
    });

    r.check("decomposition_round_trip", [&] {
        Rng rng(seed ^ 0x6465636f6dull);
        for (int t = 0; t < 12; ++t) {
            WittRing R = WittRing::create(3, 1, 18);
            std::vector<fixtures::BlockPlan> blocks;
            int kinds = 2 + (int)rng.below(2);
            std::vector<std::pair<int, int>> menu = {{1, 0}, {1, 1}, {2, 1}, {1, 2}};
            for (int k = 0; k < kinds; ++k) {
                auto [h, a] = menu[rng.below(menu.size())];
                blocks.emplace_back(h, a);
            }
            auto pc = fixtures::planned_multislope(R, blocks, 1);
            WittMatrix g = fixtures::random_unimodular(rng, R, pc.X.n);
            FCrystal Y = sigma_conjugate(pc.X, g);
            Decomposition d = slope_decomposition(Y);
            ConvexPolygon cat;
            for (const auto& comp : d.components) {
                if (!comp.newton.is_isoclinic()) return false;
                cat = cat.concat(comp.newton);
            }
            if (!(cat == pc.expected_newton)) return false;
            if (d.isogeny_denominator != 0) return false;
        }
        return true;
    });

    r.check("el_multiplicity_relation", [&] {
        Rng rng(seed ^ 0x656c6d756cull);
        for (int t = 0; t < 12; ++t) {
            WittRing R = WittRing::create(t % 2 ? 3 : 2, 2, 16);
            ELStructure S = fixtures::random_el_structure(rng, R, 2, 1 + (int)rng.below(2));
            ConvexPolygon el = el_newton(S), plain = newton_polygon(S.crystal);
            ConvexPolygon doubled = el.concat(el);
            if (!(doubled == plain)) return false;
            if (!lies_above(el, el_sigma_hodge_of(S))) return false;
        }
        return true;
    });

    r.check("b_set_ordinary_gl2", [] {
        ELType t{2, {1}};
        auto bs = b_set(t);
        return bs.size() == 2 && bs[0] == poly({Rational(0), Rational(1)}) &&
               bs[1] == poly({Rational(1, 2), Rational(1, 2)});
    });

    r.check("adlv_identity_membership", [] {
        FCrystal X = fixtures::f2_ordinary();
        ConvexPolygon mu = poly({Rational(0), Rational(1)});
        ADLVWindowResult res = adlv_enumerate(X, mu, 1);
        // the trivial class g = Lambda must be a member
        for (const auto& cls : res.classes) {
            if (cls.denom_exp == 0 && cls.H == WittMatrix::identity(X.ring, 2)) return true;
        }
        return false;
    });

    r.check("adlv_hn_window_comparison", [] {
        ELStructure S = el_validate(fixtures::f2_ordinary(), 1, {0, 0});
        LeviPartition P{{1, 1}};
        ConvexPolygon mu = poly({Rational(0), Rational(1)});
        HNCompareResult cmp = adlv_hn_compare(S, P, mu, 1);
        return cmp.equal;
    });

    r.check("hn_decompose_f5", [] {
        ELStructure S = fixtures::f5_rank4_two_slope();
        HNReport rep = hn_decompose(S, LeviPartition{{1, 1}});
        if (rep.factors.size() != 2) return false;
        const auto& f0 = rep.factors[0];
        const auto& f1 = rep.factors[1];
        return f0.nu == poly({Rational(0)}) && f1.nu == poly({Rational(1, 2)}) &&
               f0.type == ELType{1, {0, 0}} && f1.type == ELType{1, {1, 0}} &&
               rep.isogeny_denominator == 0;
    });

    r.check("deform_serre_tate", [] {
        // classical ordinary GL_2: one formal parameter
        if (unipotent_dim(ELType{2, {1}}) != 1) return false;
        ELStructure S = fixtures::f5_rank4_two_slope();
        HNReport rep = hn_decompose(S, LeviPartition{{1, 1}});
        TwoSlopeDeformation d = two_slope_report(rep.factors[0].type, rep.factors[1].type);
        int sum = 0;
        for (int v : d.f_prime) sum += v;
        return sum == 1 && d.d_prime_max == 1 && d.defspace_dim == 1;
    });

    Result out;
    out.pass = r.pass;
    io::Json j = io::Json::object();
    j["seed"] = seed;
    j["cases"] = std::move(r.cases);
    j["selftest"] = out.pass ? "pass" : "fail";
    out.report = std::move(j);
    return out;
}

}  // namespace fcx::selftest
