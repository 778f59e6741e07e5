#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <string>
#include <string_view>

namespace forge {

using Integer = mpz_class;

// Element of Q, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);

    // Accepts "n" or "n/d" in decimal.
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept { return q_; }
    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_int(std::int64_t n) const { return Rational(static_cast<long>(n)); }
    static constexpr std::uint64_t characteristic() noexcept { return 0; }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_one() const noexcept { return q_ == 1; }
    Rational inv() const;
    Rational pow(long e) const;

    std::string to_string() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this *= o.inv(); }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.q_ = -q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_.get_str(); }

private:
    mpq_class q_;
};

}  // namespace forge
