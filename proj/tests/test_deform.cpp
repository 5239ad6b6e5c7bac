#include "doctest.h"

#include "fcx/deform.hpp"
#include "fcx/errors.hpp"
#include "fcx/fixtures.hpp"
#include "fcx/hodge_newton.hpp"

using namespace fcx;

namespace {

// root-pairing oracle: for each character, count the roots e_a - e_b of
// GL_d with pairing 1 against the minuscule cocharacter with f(i) ones
int unipotent_dim_oracle(const ELType& t) {
    int total = 0;
    for (int i = 0; i < t.m(); ++i) {
        std::vector<int> mu(t.d, 0);
        for (int k = 0; k < t.f[i]; ++k) mu[k] = 1;
        for (int a = 0; a < t.d; ++a)
            for (int b = 0; b < t.d; ++b)
                if (a != b && mu[a] - mu[b] == 1) ++total;
    }
    return total;
}

}  // namespace

TEST_CASE("unipotent_dim") {
    // the classical one-parameter Serre-Tate disk
    CHECK(unipotent_dim(ELType{2, {1}}) == 1);
    CHECK(unipotent_dim(ELType{2, {1}}) == unipotent_dim_oracle(ELType{2, {1}}));

    // rank one over O_E: no roots at all
    for (int m = 1; m <= 4; ++m) {
        std::vector<int> f(m);
        for (int i = 0; i < m; ++i) f[i] = i % 2;
        CHECK(unipotent_dim(ELType{1, f}) == 0);
    }

    CHECK(unipotent_dim(ELType{2, {1, 0}}) == 1);  // 1*1 + 0*2

    // oracle agreement across a small grid
    for (int d = 1; d <= 4; ++d)
        for (int f0 = 0; f0 <= d; ++f0)
            for (int f1 = 0; f1 <= d; ++f1) {
                ELType t{d, {f0, f1}};
                CHECK(unipotent_dim(t) == unipotent_dim_oracle(t));
            }
}

TEST_CASE("unipotent_dim vanishes exactly on rigid types") {
    // rigid means every character is trivial or full: the sigma-invariant
    // Hodge polygon is isoclinic
    for (int d = 1; d <= 3; ++d)
        for (int f0 = 0; f0 <= d; ++f0)
            for (int f1 = 0; f1 <= d; ++f1) {
                ELType t{d, {f0, f1}};
                bool rigid = is_rigid_type(t);
                bool per_char = (f0 == 0 || f0 == d) && (f1 == 0 || f1 == d);
                CHECK(rigid == per_char);
                CHECK(rigid == el_sigma_hodge(t).is_isoclinic());
            }
}

TEST_CASE("two_slope_report cases") {
    // F5's slope factors: etale then slope 1/2
    TwoSlopeDeformation d = two_slope_report(ELType{1, {0, 0}}, ELType{1, {1, 0}});
    CHECK(d.f_prime == std::vector<int>{1, 0});
    CHECK(d.d_prime_max == 1);
    CHECK(d.defspace_dim == 1);

    // first case everywhere
    TwoSlopeDeformation z = two_slope_report(ELType{2, {0, 0}}, ELType{3, {0, 0}});
    CHECK(z.f_prime == std::vector<int>{0, 0});
    CHECK(z.d_prime_max == 6);
    CHECK(z.defspace_dim == 0);

    // second case everywhere
    TwoSlopeDeformation full = two_slope_report(ELType{1, {1, 1}}, ELType{1, {1, 1}});
    CHECK(full.f_prime == std::vector<int>{0, 0});
    CHECK(full.defspace_dim == 0);

    // combinations off the case table: (d1, 0), or interior f values
    CHECK_THROWS_AS(two_slope_report(ELType{1, {1, 0}}, ELType{1, {0, 0}}), DomainError);
    CHECK_THROWS_AS(two_slope_report(ELType{2, {1, 0}}, ELType{1, {1, 0}}), DomainError);
    // factors over different degrees
    CHECK_THROWS_AS(two_slope_report(ELType{1, {0}}, ELType{1, {0, 0}}), DomainError);
}

TEST_CASE("defspace_dim equals the Lubin-Tate power dimension") {
    // whenever the case table applies, dim = d'_max * sum(f')
    for (int d1 = 1; d1 <= 3; ++d1)
        for (int d2 = 1; d2 <= 3; ++d2)
            for (int mask = 0; mask < 9; ++mask) {
                std::vector<int> f1(2), f2(2);
                bool valid = true;
                for (int i = 0; i < 2; ++i) {
                    switch ((mask >> i) % 3) {
                        case 0: f1[i] = 0; f2[i] = 0; break;
                        case 1: f1[i] = d1; f2[i] = d2; break;
                        default: f1[i] = 0; f2[i] = d2; break;
                    }
                    (void)valid;
                }
                TwoSlopeDeformation d = two_slope_report(ELType{d1, f1}, ELType{d2, f2});
                int sum = 0;
                for (int v : d.f_prime) sum += v;
                CHECK(d.defspace_dim == d.d_prime_max * sum);
                CHECK(d.defspace_dim <= d.d_prime_max * sum);
            }
}

TEST_CASE("two_slope_report is monotone under unramified extension") {
    ELType t1{1, {0, 0}}, t2{1, {1, 0}};
    TwoSlopeDeformation base = two_slope_report(t1, t2);
    for (int ext = 2; ext <= 3; ++ext) {
        std::vector<int> f1, f2;
        for (int rep = 0; rep < ext; ++rep) {
            f1.insert(f1.end(), t1.f.begin(), t1.f.end());
            f2.insert(f2.end(), t2.f.begin(), t2.f.end());
        }
        TwoSlopeDeformation lifted = two_slope_report(ELType{1, f1}, ELType{1, f2});
        int sum_base = 0, sum_lifted = 0;
        for (int v : base.f_prime) sum_base += v;
        for (int v : lifted.f_prime) sum_lifted += v;
        CHECK(sum_lifted == ext * sum_base);
        CHECK(lifted.defspace_dim == ext * base.defspace_dim);
    }
}

TEST_CASE("factor types from the F5 decomposition feed the deformation report") {
    ELStructure S = fixtures::f5_rank4_two_slope();
    HNReport rep = hn_decompose(S, LeviPartition{{1, 1}});
    REQUIRE(rep.factors.size() == 2);
    TwoSlopeDeformation d = two_slope_report(rep.factors[0].type, rep.factors[1].type);
    int sum = 0;
    for (int v : d.f_prime) sum += v;
    CHECK(sum == 1);
    CHECK(d.d_prime_max == 1);
    CHECK(d.defspace_dim == 1);
    CHECK(is_rigid_type(rep.factors[0].type));
    CHECK(is_rigid_type(rep.factors[1].type));
    // consistency with the combined type of the full structure
    CHECK(d.defspace_dim == unipotent_dim(el_type(S)));
}
