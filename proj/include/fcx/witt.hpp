#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fcx {

// Truncated unramified Witt ring W(F_{p^s}) mod p^N, realized as
// (Z/p^N)[x]/(modulus) where the modulus is the integer lift of the
// lexicographically smallest monic irreducible polynomial of degree s
// over F_p. Construction is a pure function of (p, s, N): two rings
// built from the same parameters are interchangeable.
//
// The lift of Frobenius sends the residue generator theta to the unique
// root of the modulus congruent to theta^p mod p; it is computed once by
// Newton iteration and cached. sigma fixes Z/p^N and satisfies sigma^s = id.
//
// Residues are stored as uint64, so p^N must stay below 2^62. Precision is
// a hard budget: nothing ever extends N, and quantities that vanish mod p^N
// surface as the sentinel valuation N ("at least N"), never as exact zero.
class WittRing {
public:
    static WittRing create(std::uint64_t p, int s, int N);

    std::uint64_t p() const;
    int s() const;
    int precision() const;       // N
    std::uint64_t p_pow(int e) const;  // p^e for 0 <= e <= N

    // Low coefficients m_0..m_{s-1} of the monic modulus x^s + sum m_i x^i.
    const std::vector<std::uint64_t>& modulus_low() const;

    // Coordinates of sigma(theta^k), k = 0..s-1.
    const std::vector<std::vector<std::uint64_t>>& sigma_powers() const;

    bool same_ring(const WittRing& o) const;

    bool operator==(const WittRing& o) const { return same_ring(o); }

    struct Data;  // defined in witt.cpp

private:
    std::shared_ptr<const Data> d_;
    explicit WittRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    friend class WittElem;
};

// An element of a WittRing: s coordinates in [0, p^N), little-endian in
// powers of the residue generator. Immutable value type.
class WittElem {
public:
    WittElem(const WittRing& ring, std::vector<std::uint64_t> coords);

    static WittElem zero(const WittRing& ring);
    static WittElem one(const WittRing& ring);
    static WittElem from_integer(const WittRing& ring, std::uint64_t v);
    // theta, the residue generator (zero when s = 1).
    static WittElem generator(const WittRing& ring);

    const WittRing& ring() const { return ring_; }
    const std::vector<std::uint64_t>& coords() const { return c_; }

    bool is_zero() const;                 // congruent to 0 mod p^N
    // p-adic valuation, clamped to N: the return value N means "at least N".
    int val() const;
    bool is_unit() const { return val() == 0; }

    WittElem operator+(const WittElem& o) const;
    WittElem operator-(const WittElem& o) const;
    WittElem operator*(const WittElem& o) const;
    WittElem operator-() const;
    bool operator==(const WittElem& o) const;
    bool operator!=(const WittElem& o) const { return !(*this == o); }

    WittElem sigma() const;        // the Frobenius lift
    WittElem sigma_iter(int k) const;

    // Multiplicative inverse; requires val() == 0.
    WittElem inverse() const;

    // Exact division by p^e; requires val() >= e. The result is only
    // determined mod p^{N-e}; its high digits are canonically zero.
    WittElem divide_p_pow(int e) const;
    WittElem times_p_pow(int e) const;

    // Reduce every coordinate mod p^e (view at lower precision).
    WittElem truncate(int e) const;

    std::string str() const;  // decimal coords, comma separated (debugging)

private:
    WittRing ring_;
    std::vector<std::uint64_t> c_;
};

}  // namespace fcx
