// Acceptance suite: exercises every acceptance criterion at full scale and
// prints one pass/fail line per criterion. Exact arithmetic throughout; no
// tolerances anywhere.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fcrystal.h"

#include "fcx/adlv.hpp"
#include "fcx/deform.hpp"
#include "fcx/errors.hpp"
#include "fcx/fixtures.hpp"
#include "fcx/hodge_newton.hpp"
#include "fcx/jobs.hpp"

using namespace fcx;
using fixtures::Rng;

namespace {

ConvexPolygon poly(std::vector<Rational> s) { return ConvexPolygon::from_slopes(std::move(s)); }

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
        ok = body();
    } catch (const Error& e) {
        detail = std::string(" (") + e.name() + ": " + e.what() + ")";
    } catch (const std::exception& e) {
        detail = std::string(" (") + e.what() + ")";
    }
    std::printf("[%s] criterion %d: %s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

// ---- criterion 2/3 generator parameters ------------------------------------

const std::uint64_t kPrimes[3] = {2, 3, 5};

// ---- criterion 6 oracle -----------------------------------------------------

std::vector<ConvexPolygon> b_set_oracle(const ELType& t) {
    const int d = t.d, m = t.m();
    ConvexPolygon mu_bar = el_sigma_hodge(t);
    std::vector<Rational> all;
    for (int q = 1; q <= d * m; ++q)
        for (int a = 0; a <= q; ++a) all.emplace_back(a, q);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<ConvexPolygon> out;
    std::vector<int> idx(d, 0);
    for (;;) {
        bool nondec = true;
        for (int i = 1; i < d; ++i)
            if (all[idx[i]] < all[idx[i - 1]]) nondec = false;
        if (nondec) {
            std::vector<Rational> slopes;
            for (int i = 0; i < d; ++i) slopes.push_back(all[idx[i]]);
            ConvexPolygon nu = poly(slopes);
            bool ok = nu.total_rise() == mu_bar.total_rise() && lies_above(nu, mu_bar);
            std::size_t i = 0;
            while (ok && i < nu.height()) {
                std::size_t j = i;
                while (j < nu.height() && nu.slope(j) == nu.slope(i)) ++j;
                if ((std::int64_t)(j - i) * m % nu.slope(i).den() != 0) ok = false;
                i = j;
            }
            if (ok) out.push_back(std::move(nu));
        }
        int pos = d - 1;
        while (pos >= 0 && idx[pos] + 1 == (int)all.size()) idx[pos--] = 0;
        if (pos < 0) break;
        idx[pos]++;
    }
    std::sort(out.begin(), out.end(), [](const ConvexPolygon& a, const ConvexPolygon& b) {
        for (std::size_t l = 1; l <= a.height(); ++l)
            if (a.partial_sum(l) != b.partial_sum(l)) return a.partial_sum(l) < b.partial_sum(l);
        return false;
    });
    return out;
}

}  // namespace

int main() {
    criterion(1, "fixture exactness (F1..F5, ten polygon values)", [] {
        bool ok = true;
        ok = ok && newton_polygon(fixtures::f1_identity()) == poly({Rational(0), Rational(0)});
        ok = ok && hodge_polygon(fixtures::f1_identity()) == poly({Rational(0), Rational(0)});
        ok = ok && newton_polygon(fixtures::f2_ordinary()) == poly({Rational(0), Rational(1)});
        ok = ok && hodge_polygon(fixtures::f2_ordinary()) == poly({Rational(0), Rational(1)});
        ok = ok &&
             newton_polygon(fixtures::f3_supersingular()) == poly({Rational(1, 2), Rational(1, 2)});
        ok = ok && hodge_polygon(fixtures::f3_supersingular()) == poly({Rational(0), Rational(1)});
        ok = ok && !hn_levis(newton_polygon(fixtures::f3_supersingular()),
                             hodge_polygon(fixtures::f3_supersingular()))
                        .has_value();
        ELStructure f4 = fixtures::f4_mu_ordinary();
        ok = ok && el_newton(f4) == poly({Rational(1, 2)});
        ok = ok && el_sigma_hodge_of(f4) == poly({Rational(1, 2)});
        ok = ok && is_mu_ordinary(f4);
        ELStructure f5 = fixtures::f5_rank4_two_slope();
        ok = ok && el_newton(f5) == poly({Rational(0), Rational(1, 2)});
        ok = ok && el_sigma_hodge_of(f5) == poly({Rational(0), Rational(1, 2)});
        ok = ok && is_mu_ordinary(f5);
        ok = ok && hn_reducible(el_newton(f5), el_sigma_hodge_of(f5), LeviPartition{{1, 1}});
        return ok;
    });

    criterion(2, "Mazur suite: 520 random crystals, exact dominance, no precision errors", [] {
        Rng rng(20240501);
        for (int t = 0; t < 520; ++t) {
            WittRing R = WittRing::create(kPrimes[rng.below(3)], 1 + (int)rng.below(2), 16);
            int n = 2 + (int)rng.below(3);  // n <= 4
            FCrystal X = fixtures::random_crystal(rng, R, n, 2, 12);
            ConvexPolygon nu = newton_polygon(X);  // any throw fails the criterion
            ConvexPolygon h = hodge_polygon(X);
            if (!lies_above(nu, h)) return false;
            if (!(nu.total_rise() == h.total_rise())) return false;
        }
        return true;
    });

    criterion(3, "sigma-conjugation invariance: 200 random (b, g) pairs", [] {
        Rng rng(20240502);
        for (int t = 0; t < 200; ++t) {
            WittRing R = WittRing::create(kPrimes[rng.below(3)], 1 + (int)rng.below(2), 16);
            int n = 2 + (int)rng.below(3);
            FCrystal X = fixtures::random_crystal(rng, R, n, 1, 8);
            WittMatrix g = fixtures::random_unimodular(rng, R, n);
            FCrystal Y = sigma_conjugate(X, g);
            if (!(newton_polygon(X) == newton_polygon(Y))) return false;
            if (!(kottwitz_point(X) == kottwitz_point(Y))) return false;
        }
        return true;
    });

    criterion(4, "decomposition round-trip: 100 scrambled block sums, exact recovery", [] {
        Rng rng(20240503);
        const std::vector<std::vector<std::pair<int, int>>> plain_menus = {
            {{1, 0}, {1, 1}},          {{2, 1}, {1, 0}},          {{1, 0}, {1, 1}, {1, 2}},
            {{2, 1}, {2, 3}},          {{1, 0}, {2, 1}, {1, 2}},  {{3, 1}, {1, 0}},
            {{1, 1}, {1, 2}},          {{2, 1}, {1, 1}},
        };
        int graded_trials = 0;
        for (int t = 0; t < 100; ++t) {
            if (t % 3 == 2) {
                // graded (EL) trial over W(F_{p^2}): j etale blocks plus k
                // slope-1/2 blocks, a mu-ordinary plan in every case
                WittRing R = WittRing::create(t % 2 ? 3 : 2, 2, 18);
                int j = 1 + (int)rng.below(2), k = 1 + (int)rng.below(2);
                std::vector<fixtures::BlockPlan> blocks;
                for (int q = 0; q < j; ++q) blocks.emplace_back(2, 0);
                for (int q = 0; q < k; ++q) blocks.emplace_back(2, 1);
                auto pc = fixtures::planned_multislope(R, blocks, 2);
                WittMatrix g = fixtures::random_graded_unimodular(rng, R, pc.grading, 2);
                ELStructure S = el_validate(sigma_conjugate(pc.X, g), 2, pc.grading);
                ConvexPolygon nu = el_newton(S);
                auto P = hn_levis(nu, nu);  // cut at every break
                if (!P) {
                    if (!nu.is_isoclinic()) return false;
                    continue;
                }
                HNReport rep = hn_decompose(S, *P);
                ConvexPolygon cat;
                for (const auto& f : rep.factors) cat = cat.concat(f.nu);
                if (!(cat == nu)) return false;
                if (rep.isogeny_denominator != 0) return false;
                ++graded_trials;
            } else {
                WittRing R = WittRing::create(kPrimes[rng.below(3)], 1, 18);
                std::vector<fixtures::BlockPlan> blocks;
                for (auto [h, a] : plain_menus[rng.below(plain_menus.size())])
                    blocks.emplace_back(h, a);
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
        }
        return graded_trials >= 30;
    });

    criterion(5, "EL consistency: multiplicity relation and denominator law, 100 structures", [] {
        Rng rng(20240504);
        // fixtures first
        for (const ELStructure& S :
             {fixtures::f4_mu_ordinary(), fixtures::f5_rank4_two_slope()}) {
            ConvexPolygon el = el_newton(S);
            ConvexPolygon doubled = el.concat(el);
            if (!(doubled == newton_polygon(S.crystal))) return false;
        }
        for (int t = 0; t < 100; ++t) {
            WittRing R = WittRing::create(kPrimes[rng.below(2) + 1], 2, 16);
            ELStructure S = fixtures::random_el_structure(rng, R, 2, 1 + (int)rng.below(2));
            ConvexPolygon el = el_newton(S);
            ConvexPolygon plain = newton_polygon(S.crystal);
            if (!(el.concat(el) == plain)) return false;
            // denominator law on the EL polygon: m * mult divisible by q
            std::size_t i = 0;
            while (i < el.height()) {
                std::size_t j = i;
                while (j < el.height() && el.slope(j) == el.slope(i)) ++j;
                if ((std::int64_t)(j - i) * S.m % el.slope(i).den() != 0) return false;
                i = j;
            }
            if (!lies_above(el, el_sigma_hodge_of(S))) return false;
        }
        return true;
    });

    criterion(6, "b_set equals the exhaustive oracle for d*m <= 4; mu-bar maximal", [] {
        std::vector<ELType> types;
        for (int d = 1; d <= 4; ++d)
            for (int f0 = 0; f0 <= d; ++f0) types.push_back(ELType{d, {f0}});
        for (int d = 1; d <= 2; ++d)
            for (int f0 = 0; f0 <= d; ++f0)
                for (int f1 = 0; f1 <= d; ++f1) types.push_back(ELType{d, {f0, f1}});
        for (int f0 = 0; f0 <= 1; ++f0)
            for (int f1 = 0; f1 <= 1; ++f1)
                for (int f2 = 0; f2 <= 1; ++f2)
                    for (int f3 = 0; f3 <= 1; ++f3)
                        types.push_back(ELType{1, {f0, f1, f2, f3}});
        for (const auto& t : types) {
            if (t.d * t.m() > 4) continue;
            auto got = b_set(t);
            auto want = b_set_oracle(t);
            if (got.size() != want.size()) return false;
            for (std::size_t i = 0; i < got.size(); ++i)
                if (!(got[i] == want[i])) return false;
            if (got.empty()) return false;
            ConvexPolygon mu_bar = el_sigma_hodge(t);
            if (!(got[0] == mu_bar)) return false;
            for (const auto& nu : got)
                if (!lies_above(nu, mu_bar)) return false;
        }
        return true;
    });

    criterion(7, "ADLV windows: product counts multiply; X^G = X^M for ordinary GL_2; "
                 "canonical forms idempotent", [] {
        WittRing R = WittRing::create(3, 1, 16);
        ConvexPolygon mu01 = poly({Rational(0), Rational(1)});

        // product functoriality (two GL_1 factors)
        WittMatrix b(R, 2, 2);
        b.set(0, 0, WittElem::one(R));
        b.set(1, 1, WittElem::from_integer(R, 3));
        FCrystal X(R, b);
        WittMatrix m1(R, 1, 1), m2(R, 1, 1);
        m1.set(0, 0, WittElem::one(R));
        m2.set(0, 0, WittElem::from_integer(R, 3));
        ADLVWindowResult r1 = adlv_enumerate(FCrystal(R, m1), poly({Rational(0)}), 1);
        ADLVWindowResult r2 = adlv_enumerate(FCrystal(R, m2), poly({Rational(1)}), 1);
        ADLVOptions opts;
        opts.colors = {0, 1};
        opts.per_block_mu = {poly({Rational(0)}), poly({Rational(1)})};
        ADLVWindowResult prod = adlv_enumerate(X, mu01, 1, opts);
        if (prod.classes.size() != r1.classes.size() * r2.classes.size()) return false;

        // another product: GL_1 x GL_1 with both slopes 0 and mu = (0,0)
        WittMatrix b2(R, 2, 2);
        b2.set(0, 0, WittElem::one(R));
        b2.set(1, 1, WittElem::from_integer(R, 2));
        ADLVOptions o2;
        o2.colors = {0, 1};
        o2.per_block_mu = {poly({Rational(0)}), poly({Rational(0)})};
        ADLVWindowResult both = adlv_enumerate(FCrystal(R, b2), poly({Rational(0), Rational(0)}), 1, o2);
        ADLVWindowResult u1 = adlv_enumerate(FCrystal(R, m1), poly({Rational(0)}), 1);
        WittMatrix m3(R, 1, 1);
        m3.set(0, 0, WittElem::from_integer(R, 2));
        ADLVWindowResult u2 = adlv_enumerate(FCrystal(R, m3), poly({Rational(0)}), 1);
        if (both.classes.size() != u1.classes.size() * u2.classes.size()) return false;

        // Mantovan-Viehmann comparison at window scale for the ordinary fixture
        ELStructure S = el_validate(fixtures::f2_ordinary(), 1, {0, 0});
        HNCompareResult cmp = adlv_hn_compare(S, LeviPartition{{1, 1}}, mu01, 1);
        if (!cmp.equal || cmp.count_G == 0) return false;

        // canonicalization idempotent on every enumerated coset
        ADLVWindowResult full = adlv_enumerate(fixtures::f2_ordinary(), mu01, 1);
        for (const auto& cls : full.classes) {
            LatticeClass again = canonicalize_lattice(cls.H, cls.denom_exp, 16);
            if (!(again == cls)) return false;
        }
        return true;
    });

    criterion(8, "deformation numerics: Serre-Tate disk, rigid types, F5 factors", [] {
        if (unipotent_dim(ELType{2, {1}}) != 1) return false;
        // rigid exactly when f is 0 or d characterwise
        for (int d = 1; d <= 4; ++d) {
            std::vector<int> zero(2, 0), full(2, d);
            if (unipotent_dim(ELType{d, zero}) != 0) return false;
            if (unipotent_dim(ELType{d, full}) != 0) return false;
        }
        ELStructure S = fixtures::f5_rank4_two_slope();
        HNReport rep = hn_decompose(S, LeviPartition{{1, 1}});
        if (rep.factors.size() != 2) return false;
        TwoSlopeDeformation d = two_slope_report(rep.factors[0].type, rep.factors[1].type);
        int sum = 0;
        for (int v : d.f_prime) sum += v;
        if (sum != 1 || d.d_prime_max != 1 || d.defspace_dim != 1) return false;
        if (d.defspace_dim != unipotent_dim(el_type(S))) return false;
        return true;
    });

    criterion(9, "determinism: selftest twice with one seed, byte-identical reports", [] {
        jobs::JobOptions opts;
        opts.seed = 20240505;
        jobs::JobResult a = jobs::run_job("selftest", "{}", opts);
        jobs::JobResult b = jobs::run_job("selftest", "{}", opts);
        if (a.exit_code != 0 || b.exit_code != 0) return false;
        if (a.report_json != b.report_json) return false;
        // and through the shared C API
        auto capi_run = [] {
            fcx_job* job = fcx_job_new("selftest");
            fcx_job_set_option(job, "seed", 20240505);
            fcx_job_run(job);
            std::string rep = fcx_job_report(job);
            int code = fcx_job_exit_code(job);
            fcx_job_free(job);
            return std::make_pair(code, rep);
        };
        auto [c1, r1] = capi_run();
        auto [c2, r2] = capi_run();
        return c1 == 0 && c2 == 0 && r1 == r2 && r1 == a.report_json;
    });

    if (g_failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
