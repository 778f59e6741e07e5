#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "forge/rational.hpp"

namespace forge {

class Rng;
class Fq;

inline constexpr int kMaxExtDegree = 6;
inline constexpr std::uint64_t kMaxPrime = (1ULL << 61);
inline constexpr std::uint64_t kDefaultFieldSeed = 0x5eed;

/// Finite field F_{p^k} for an odd prime p < 2^61 and 1 <= k <= 6.
///
/// Contexts are interned for the lifetime of the program and never mutated, so
/// elements may hold a plain pointer to their field and contexts can be shared
/// freely across threads. Extension elements are residues modulo a monic
/// irreducible polynomial chosen deterministically from a seed.
class FiniteField {
public:
    using u64 = std::uint64_t;

    static const FiniteField& prime(u64 p);
    /// Throws InvalidDegree unless 1 <= k <= kMaxExtDegree. k = 1 yields prime(p).
    static const FiniteField& extension(u64 p, int k, u64 seed = kDefaultFieldSeed);

    FiniteField(const FiniteField&) = delete;
    FiniteField& operator=(const FiniteField&) = delete;

    u64 characteristic() const noexcept { return p_; }
    int degree() const noexcept { return k_; }
    bool is_prime_field() const noexcept { return k_ == 1; }
    Integer order() const;
    /// Monic modulus, coefficients low to high (length degree()+1).
    std::span<const u64> modulus() const noexcept { return {modulus_.data(), static_cast<std::size_t>(k_) + 1}; }
    const FiniteField& prime_field() const { return prime(p_); }
    std::string name() const;

    Fq zero() const;
    Fq one() const;
    Fq from_int(std::int64_t n) const;
    Fq from_u64(u64 n) const;
    Fq from_integer(const Integer& n) const;
    /// Throws DivisionByZero when the denominator vanishes mod p.
    Fq from_rational(const Rational& r) const;
    Fq from_coeffs(std::span<const u64> coeffs) const;
    /// The class of t in F_p[t]/(modulus).
    Fq generator() const;
    Fq random(Rng& rng) const;
    /// Enumeration order: index = sum c_i p^i. Requires order() to fit in 64 bits.
    Fq element_at(u64 index) const;
    u64 index_of(const Fq& a) const;

    // Prime-field scalar arithmetic on canonical residues.
    u64 add_p(u64 a, u64 b) const noexcept {
        const u64 t = p_ - b;
        return a >= t ? a - t : a + b;
    }
    u64 sub_p(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    u64 neg_p(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
    u64 mul_p(u64 a, u64 b) const noexcept {
        if (small_) return (a * b) % p_;
        return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    u64 pow_p(u64 a, u64 e) const noexcept;
    u64 inv_p(u64 a) const;  // throws ZeroInverse
    int legendre(u64 a) const noexcept;

private:
    FiniteField(u64 p, int k, const std::array<u64, kMaxExtDegree + 1>& modulus, u64 seed);

    friend class Fq;
    void mul(const u64* a, const u64* b, u64* out) const noexcept;
    void inv(const u64* a, u64* out) const;

    u64 p_;
    int k_;
    bool small_;
    u64 seed_;
    std::array<u64, kMaxExtDegree + 1> modulus_{};
};

/// Element of a FiniteField. Value type; the field context outlives it.
class Fq {
public:
    using u64 = std::uint64_t;

    Fq() = default;

    const FiniteField& field() const noexcept { return *field_; }
    bool bound() const noexcept { return field_ != nullptr; }
    u64 coeff(int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
    std::span<const u64> coeffs() const noexcept {
        return {c_.data(), static_cast<std::size_t>(field_ ? field_->degree() : 0)};
    }
    bool in_prime_field() const noexcept;
    /// Residue in [0, p); requires in_prime_field().
    u64 to_u64() const;

    Fq zero() const { return field_->zero(); }
    Fq one() const { return field_->one(); }
    Fq from_int(std::int64_t n) const { return field_->from_int(n); }
    u64 characteristic() const noexcept { return field_->characteristic(); }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    Fq inv() const;  // throws ZeroInverse
    Fq pow(const Integer& e) const;
    Fq pow(u64 e) const;
    Fq frobenius() const { return pow(field_->characteristic()); }
    /// Norm down to F_p.
    u64 norm() const;
    /// Quadratic character: 0, 1 or -1.
    int chi() const;
    bool is_square() const { return chi() >= 0; }

    std::string to_string() const;

    Fq& operator+=(const Fq& o);
    Fq& operator-=(const Fq& o);
    Fq& operator*=(const Fq& o);
    Fq& operator/=(const Fq& o) { return *this *= o.inv(); }

    friend Fq operator+(Fq a, const Fq& b) { return a += b; }
    friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
    friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
    friend Fq operator/(Fq a, const Fq& b) { return a /= b; }
    Fq operator-() const;

    friend bool operator==(const Fq& a, const Fq& b) noexcept { return a.field_ == b.field_ && a.c_ == b.c_; }
    /// Arbitrary but fixed total order (for sorting multisets).
    friend bool operator<(const Fq& a, const Fq& b) noexcept {
        for (int i = kMaxExtDegree - 1; i >= 0; --i) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return false;
    }

    friend std::ostream& operator<<(std::ostream& os, const Fq& a) { return os << a.to_string(); }

private:
    friend class FiniteField;
    explicit Fq(const FiniteField* f) : field_(f) {}
    void check_same(const Fq& o) const;

    const FiniteField* field_ = nullptr;
    std::array<u64, kMaxExtDegree> c_{};
};

/// field_inv: a^{-1}; throws ZeroInverse for a = 0.
inline Fq field_inv(const Fq& a) { return a.inv(); }

/// Square roots of a: {} when a is a non-square, {0} for a = 0, otherwise {r, -r}.
/// r is produced by Tonelli-Shanks whose non-residue search is driven by `seed`,
/// so the root listed first is a deterministic function of (a, field, seed).
std::vector<Fq> field_sqrt(const Fq& a, std::uint64_t seed = kDefaultFieldSeed);

/// ext_build: deterministic irreducible extension of degree k.
inline const FiniteField& ext_build(std::uint64_t p, int k, std::uint64_t seed = kDefaultFieldSeed) {
    return FiniteField::extension(p, k, seed);
}

bool is_prime_u64(std::uint64_t n);

}  // namespace forge
