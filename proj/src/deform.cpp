#include "fcx/deform.hpp"

#include "fcx/errors.hpp"

namespace fcx {

int unipotent_dim(const ELType& t) {
    int dim = 0;
    for (int fi : t.f) dim += fi * (t.d - fi);
    return dim;
}

bool is_rigid_type(const ELType& t) { return unipotent_dim(t) == 0; }

TwoSlopeDeformation two_slope_report(const ELType& t1, const ELType& t2) {
    if (t1.m() != t2.m())
        throw degree_mismatch("two_slope_report: factor types live over different degrees");
    const int m = t1.m();
    TwoSlopeDeformation out;
    out.type1 = t1;
    out.type2 = t2;
    out.f_prime.resize(m);
    for (int i = 0; i < m; ++i) {
        const int a = t1.f[i], b = t2.f[i];
        if (a == 0 && b == 0)
            out.f_prime[i] = 0;
        else if (a == t1.d && b == t2.d)
            out.f_prime[i] = 0;
        else if (a == 0 && b == t2.d)
            out.f_prime[i] = 1;
        else
            throw uncovered_case("character " + std::to_string(i) + " has (f1, f2) = (" +
                                 std::to_string(a) + ", " + std::to_string(b) +
                                 "), outside the two-slope case table");
    }
    out.d_prime_max = t1.d * t2.d;
    ELType combined;
    combined.d = t1.d + t2.d;
    combined.f.resize(m);
    for (int i = 0; i < m; ++i) combined.f[i] = t1.f[i] + t2.f[i];
    out.defspace_dim = unipotent_dim(combined);
    return out;
}

}  // namespace fcx
