#include "fcx/witt.hpp"

#include <algorithm>
#include <cassert>

#include "fcx/errors.hpp"

namespace fcx {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }
u64 addmod(u64 a, u64 b, u64 m) { u64 r = a + b; return r >= m ? r - m : r; }
u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

bool is_prime_u64(u64 p) {
    if (p < 2) return false;
    for (u64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ---- dense polynomial arithmetic over F_p (for the irreducibility scan) ----

using FpPoly = std::vector<u64>;  // coefficients, ascending degree, reduced mod p

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    fp_trim(r);
    return r;
}

// a mod f, f monic
FpPoly fp_mod(FpPoly a, const FpPoly& f, u64 p) {
    fp_trim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        u64 lead = a.back();
        std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i < df; ++i)
            a[shift + i] = submod(a[shift + i], mulmod(lead, f[i], p), p);
        a.pop_back();
        fp_trim(a);
    }
    return a;
}

FpPoly fp_powmod_x(u64 exp_p, int times, const FpPoly& f, u64 p) {
    // x^(p^times) mod f via repeated p-th powering
    FpPoly x = fp_mod({0, 1}, f, p);
    for (int t = 0; t < times; ++t) {
        FpPoly acc = {1};
        FpPoly base = x;
        u64 e = exp_p;
        while (e) {
            if (e & 1) acc = fp_mod(fp_mul(acc, base, p), f, p);
            base = fp_mod(fp_mul(base, base, p), f, p);
            e >>= 1;
        }
        x = acc;
    }
    return x;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    fp_trim(a); fp_trim(b);
    while (!b.empty()) {
        // make b monic, then reduce
        u64 inv = 1;
        { // inverse of b.back() mod p by Fermat
            u64 base = b.back(), e = p - 2, acc = 1;
            while (e) { if (e & 1) acc = mulmod(acc, base, p); base = mulmod(base, base, p); e >>= 1; }
            inv = acc;
        }
        FpPoly bm = b;
        for (auto& c : bm) c = mulmod(c, inv, p);
        FpPoly r = fp_mod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool fp_is_irreducible(const FpPoly& f, u64 p) {
    const int s = (int)f.size() - 1;
    if (s < 1) return false;
    if (s == 1) return true;
    // x^(p^s) == x mod f
    FpPoly xps = fp_powmod_x(p, s, f, p);
    FpPoly x = fp_mod({0, 1}, f, p);
    if (xps != x) return false;
    // gcd(x^(p^(s/q)) - x, f) == 1 for every prime q | s
    for (int q = 2; q <= s; ++q) {
        if (s % q != 0) continue;
        bool qprime = true;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) { qprime = false; break; }
        if (!qprime) continue;
        FpPoly g = fp_powmod_x(p, s / q, f, p);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = submod(g[1], 1, p);
        fp_trim(g);
        FpPoly gg = fp_gcd(f, g, p);
        if (gg.size() != 1) return false;
    }
    return true;
}

}  // namespace

struct WittRing::Data {
    u64 p = 0;
    int s = 0;
    int N = 0;
    std::vector<u64> p_pow;                    // p^0..p^N
    std::vector<u64> mod_low;                  // m_0..m_{s-1}, lifted (< p)
    std::vector<std::vector<u64>> sigma_pow;   // sigma(theta^k) coords, k < s
};

namespace {

// coordinate vectors mod p^N, length s — raw element arithmetic used during
// ring construction (before WittElem exists for this ring)
struct RawCtx {
    const WittRing::Data* d;
    u64 pN() const { return d->p_pow[d->N]; }
};

std::vector<u64> raw_add(const RawCtx& R, const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = addmod(a[i], b[i], R.pN());
    return r;
}

std::vector<u64> raw_sub(const RawCtx& R, const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = submod(a[i], b[i], R.pN());
    return r;
}

std::vector<u64> raw_mul(const RawCtx& R, const std::vector<u64>& a, const std::vector<u64>& b) {
    const int s = R.d->s;
    const u64 m = R.pN();
    // convolution
    std::vector<u64> conv(2 * s - 1, 0);
    for (int i = 0; i < s; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < s; ++j) {
            if (b[j] == 0) continue;
            conv[i + j] = addmod(conv[i + j], mulmod(a[i], b[j], m), m);
        }
    }
    // reduce by monic modulus: theta^s = -sum m_i theta^i
    for (int k = 2 * s - 2; k >= s; --k) {
        u64 lead = conv[k];
        if (lead == 0) continue;
        conv[k] = 0;
        for (int i = 0; i < s; ++i)
            conv[k - s + i] = submod(conv[k - s + i], mulmod(lead, R.d->mod_low[i], m), m);
    }
    conv.resize(s);
    return conv;
}

int raw_val(const RawCtx& R, const std::vector<u64>& a) {
    int best = R.d->N;
    for (u64 c : a) {
        if (c == 0) continue;
        int e = 0;
        u64 v = c;
        while (v % R.d->p == 0) { v /= R.d->p; ++e; }
        best = std::min(best, e);
        if (best == 0) break;
    }
    return best;
}

// inverse of a unit via residue-field inverse + quadratic lifting
std::vector<u64> raw_inverse(const RawCtx& R, const std::vector<u64>& u) {
    const u64 p = R.d->p;
    const int s = R.d->s;
    // residue field inverse by extended Euclid over F_p[x]
    FpPoly ubar(s);
    for (int i = 0; i < s; ++i) ubar[i] = u[i] % p;
    fp_trim(ubar);
    if (ubar.empty()) throw DomainError("NotInvertible", "inverse of non-unit Witt element");
    FpPoly f(s + 1);
    for (int i = 0; i < s; ++i) f[i] = R.d->mod_low[i] % p;
    f[s] = 1;
    // extended Euclid: find t with t*ubar = 1 mod f
    FpPoly r0 = f, r1 = ubar, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // monic-divide r0 by r1
        u64 lc = r1.back();
        u64 lcinv; { u64 b = lc, e = p - 2, acc = 1; while (e) { if (e & 1) acc = mulmod(acc, b, p); b = mulmod(b, b, p); e >>= 1; } lcinv = acc; }
        FpPoly q;
        FpPoly rem = r0;
        fp_trim(rem);
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::size_t shift = rem.size() - r1.size();
            u64 coef = mulmod(rem.back(), lcinv, p);
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = addmod(q[shift], coef, p);
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = submod(rem[shift + i], mulmod(coef, r1[i], p), p);
            fp_trim(rem);
        }
        FpPoly t2 = t0;  // t0 - q*t1
        {
            FpPoly qt = fp_mul(q, t1, p);
            if (t2.size() < qt.size()) t2.resize(qt.size(), 0);
            for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = submod(t2[i], qt[i], p);
            fp_trim(t2);
        }
        r0 = std::move(r1); r1 = std::move(rem);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    // r0 = gcd (a nonzero constant since ubar is a unit)
    if (r0.size() != 1) throw DomainError("NotInvertible", "inverse of non-unit Witt element");
    u64 c = r0[0];
    u64 cinv; { u64 b = c, e = p - 2, acc = 1; while (e) { if (e & 1) acc = mulmod(acc, b, p); b = mulmod(b, b, p); e >>= 1; } cinv = acc; }
    std::vector<u64> y(s, 0);
    for (std::size_t i = 0; i < t0.size(); ++i) y[i] = mulmod(t0[i] % p, cinv, p);
    // quadratic lift: y <- y(2 - u y)
    std::vector<u64> two(s, 0);
    two[0] = 2 % R.pN();
    for (int it = 0; it < 2 * R.d->N + 4; ++it) {
        std::vector<u64> uy = raw_mul(R, u, y);
        std::vector<u64> corr = raw_sub(R, two, uy);
        y = raw_mul(R, y, corr);
        // converged?
        std::vector<u64> check = raw_mul(R, u, y);
        bool ok = check[0] == 1 % R.pN();
        for (int i = 1; i < s; ++i) ok = ok && check[i] == 0;
        if (ok) return y;
    }
    throw Error(ErrorClass::Domain, "InternalError", "unit inverse iteration failed to converge");
}

}  // namespace

WittRing WittRing::create(u64 p, int s, int N) {
    if (!is_prime_u64(p)) throw not_prime("p = " + std::to_string(p) + " is not prime");
    if (s < 1) throw DomainError("InvalidParameter", "s must be >= 1");
    if (N < 1) throw DomainError("InvalidParameter", "precision must be >= 1");
    // p^N must fit the residue representation
    u128 pn = 1;
    for (int i = 0; i < N; ++i) {
        pn *= p;
        if (pn >= ((u128)1 << 62))
            throw DomainError("UnsupportedPrecision",
                              "p^N exceeds the 64-bit residue representation (need p^N < 2^62)");
    }

    auto d = std::make_shared<Data>();
    d->p = p;
    d->s = s;
    d->N = N;
    d->p_pow.resize(N + 1);
    d->p_pow[0] = 1;
    for (int i = 1; i <= N; ++i) d->p_pow[i] = d->p_pow[i - 1] * p;

    // lexicographically smallest monic irreducible of degree s over F_p,
    // ordered by the coefficient tuple (a_{s-1}, ..., a_0)
    {
        std::vector<u64> low(s, 0);
        bool found = false;
        u64 total = 1;
        for (int i = 0; i < s; ++i) total *= p;
        for (u64 code = 0; code < total; ++code) {
            // (a_{s-1}, ..., a_0) in ascending lexicographic order: the most
            // significant base-p digit of `code` is the top coefficient
            u64 rem = code;
            for (int i = s - 1; i >= 0; --i) {
                u64 div = 1;
                for (int k = 0; k < i; ++k) div *= p;
                low[i] = rem / div;
                rem %= div;
            }
            FpPoly f(s + 1);
            for (int i = 0; i < s; ++i) f[i] = low[i];
            f[s] = 1;
            if (fp_is_irreducible(f, p)) {
                d->mod_low.assign(low.begin(), low.end());
                found = true;
                break;
            }
        }
        if (!found)
            throw Error(ErrorClass::Domain, "InternalError", "no irreducible modulus found");
    }

    // sigma(theta): Newton iteration on the modulus from theta^p mod p
    RawCtx R{d.get()};
    std::vector<u64> sigma_theta(s, 0);
    if (s == 1) {
        sigma_theta[0] = 0;  // theta == 0 in the degenerate ring
    } else {
        // f(y) and f'(y) evaluation helpers in the ring
        auto eval_f = [&](const std::vector<u64>& x) {
            std::vector<u64> acc(s, 0);
            acc[0] = 1 % R.pN();  // start from leading coefficient
            for (int i = s - 1; i >= 0; --i) {
                acc = raw_mul(R, acc, x);
                acc[0] = addmod(acc[0], d->mod_low[i] % R.pN(), R.pN());
            }
            return acc;
        };
        auto eval_fprime = [&](const std::vector<u64>& x) {
            std::vector<u64> acc(s, 0);
            acc[0] = (u64)s % R.pN();
            for (int i = s - 1; i >= 1; --i) {
                acc = raw_mul(R, acc, x);
                acc[0] = addmod(acc[0], mulmod((u64)i % R.pN(), d->mod_low[i] % R.pN(), R.pN()), R.pN());
            }
            return acc;
        };
        // x0 = theta^p reduced mod p
        std::vector<u64> x(s, 0);
        {
            std::vector<u64> theta(s, 0);
            theta[1] = 1;
            std::vector<u64> acc(s, 0);
            acc[0] = 1;
            u64 e = p;
            std::vector<u64> base = theta;
            while (e) {
                if (e & 1) acc = raw_mul(R, acc, base);
                base = raw_mul(R, base, base);
                e >>= 1;
            }
            for (int i = 0; i < s; ++i) acc[i] %= p;
            x = acc;
        }
        bool converged = false;
        for (int it = 0; it < 2 * N + 8; ++it) {
            std::vector<u64> fx = eval_f(x);
            if (raw_val(R, fx) >= N) { converged = true; break; }
            std::vector<u64> fpx = eval_fprime(x);
            std::vector<u64> g = raw_inverse(R, fpx);
            x = raw_sub(R, x, raw_mul(R, fx, g));
        }
        if (!converged)
            throw Error(ErrorClass::Domain, "InternalError", "sigma Newton iteration diverged");
        sigma_theta = x;
    }

    // cache sigma(theta^k) = sigma(theta)^k
    d->sigma_pow.resize(s);
    {
        std::vector<u64> acc(s, 0);
        acc[0] = 1 % R.pN();
        for (int k = 0; k < s; ++k) {
            d->sigma_pow[k] = acc;
            if (k + 1 < s) acc = raw_mul(R, acc, sigma_theta);
        }
    }

    return WittRing(std::move(d));
}

u64 WittRing::p() const { return d_->p; }
int WittRing::s() const { return d_->s; }
int WittRing::precision() const { return d_->N; }
u64 WittRing::p_pow(int e) const { return d_->p_pow[e]; }
const std::vector<u64>& WittRing::modulus_low() const { return d_->mod_low; }
const std::vector<std::vector<u64>>& WittRing::sigma_powers() const { return d_->sigma_pow; }

bool WittRing::same_ring(const WittRing& o) const {
    return d_ == o.d_ || (d_->p == o.d_->p && d_->s == o.d_->s && d_->N == o.d_->N);
}

// ---------------------------------------------------------------------------

WittElem::WittElem(const WittRing& ring, std::vector<u64> coords) : ring_(ring), c_(std::move(coords)) {
    if ((int)c_.size() != ring_.s())
        throw DomainError("InvalidCoords", "coordinate vector has wrong length");
    const u64 m = ring_.p_pow(ring_.precision());
    for (auto& c : c_) c %= m;
}

WittElem WittElem::zero(const WittRing& ring) {
    return WittElem(ring, std::vector<u64>(ring.s(), 0));
}

WittElem WittElem::one(const WittRing& ring) { return from_integer(ring, 1); }

WittElem WittElem::from_integer(const WittRing& ring, u64 v) {
    std::vector<u64> c(ring.s(), 0);
    c[0] = v % ring.p_pow(ring.precision());
    return WittElem(ring, std::move(c));
}

WittElem WittElem::generator(const WittRing& ring) {
    std::vector<u64> c(ring.s(), 0);
    if (ring.s() > 1) c[1] = 1;
    return WittElem(ring, std::move(c));
}

bool WittElem::is_zero() const {
    for (u64 c : c_)
        if (c != 0) return false;
    return true;
}

int WittElem::val() const {
    RawCtx R{ring_.d_.get()};
    return raw_val(R, c_);
}

WittElem WittElem::operator+(const WittElem& o) const {
    RawCtx R{ring_.d_.get()};
    return WittElem(ring_, raw_add(R, c_, o.c_));
}

WittElem WittElem::operator-(const WittElem& o) const {
    RawCtx R{ring_.d_.get()};
    return WittElem(ring_, raw_sub(R, c_, o.c_));
}

WittElem WittElem::operator*(const WittElem& o) const {
    RawCtx R{ring_.d_.get()};
    return WittElem(ring_, raw_mul(R, c_, o.c_));
}

WittElem WittElem::operator-() const {
    RawCtx R{ring_.d_.get()};
    return WittElem(ring_, raw_sub(R, std::vector<u64>(c_.size(), 0), c_));
}

bool WittElem::operator==(const WittElem& o) const { return c_ == o.c_; }

WittElem WittElem::sigma() const {
    const auto& spow = ring_.sigma_powers();
    const u64 m = ring_.p_pow(ring_.precision());
    std::vector<u64> r(c_.size(), 0);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[i] = addmod(r[i], mulmod(c_[k], spow[k][i], m), m);
    }
    return WittElem(ring_, std::move(r));
}

WittElem WittElem::sigma_iter(int k) const {
    k %= ring_.s();
    if (k < 0) k += ring_.s();
    WittElem r = *this;
    for (int i = 0; i < k; ++i) r = r.sigma();
    return r;
}

WittElem WittElem::inverse() const {
    RawCtx R{ring_.d_.get()};
    return WittElem(ring_, raw_inverse(R, c_));
}

WittElem WittElem::divide_p_pow(int e) const {
    if (e == 0) return *this;
    const u64 pe = ring_.p_pow(e);
    std::vector<u64> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] % pe != 0)
            throw DomainError("InexactDivision", "divide_p_pow on element of smaller valuation");
        r[i] = c_[i] / pe;
    }
    return WittElem(ring_, std::move(r));
}

WittElem WittElem::times_p_pow(int e) const {
    const u64 m = ring_.p_pow(ring_.precision());
    const u64 pe = e >= ring_.precision() ? 0 : ring_.p_pow(e);
    std::vector<u64> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mulmod(c_[i], pe, m);
    return WittElem(ring_, std::move(r));
}

WittElem WittElem::truncate(int e) const {
    const u64 pe = ring_.p_pow(std::min(e, ring_.precision()));
    std::vector<u64> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] % pe;
    return WittElem(ring_, std::move(r));
}

std::string WittElem::str() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c_[i]);
    }
    return out;
}

}  // namespace fcx
