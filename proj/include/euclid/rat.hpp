#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include "euclid/errors.hpp"

namespace euclid {

using Int = boost::multiprecision::cpp_int;

// Exact rational number. Canonical form is enforced on construction:
// denominator > 0 and gcd(|numerator|, denominator) == 1, so equality is a
// structural check. Arithmetic never rounds.
class Rat {
public:
    Rat() : v_(0) {}
    template <std::integral T>
    Rat(T n) : v_(n) {}
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den);

    // Accepts "7", "-3/4", "2.5" and "1e-9" / "2.5e3" forms, all converted
    // exactly (decimal and exponent notation denote exact rationals).
    static Rat from_string(std::string_view text);

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rat operator-() const;
    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rat abs() const { return v_.sign() < 0 ? -*this : *this; }
    Rat reciprocal() const;

    Int floor() const;
    Int ceil() const;

    // Largest multiple of 2^-bits that is <= *this (resp. smallest >=).
    // Used to keep interval endpoints at bounded size; rounding an endpoint
    // outward never violates an enclosure.
    Rat round_down_pow2(unsigned bits) const;
    Rat round_up_pow2(unsigned bits) const;

    // Exact square root if *this is the square of a rational, else nullopt.
    std::optional<Rat> sqrt_exact() const;
    bool is_perfect_square() const { return sqrt_exact().has_value(); }

    std::string str() const;

private:
    explicit Rat(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

enum class RoundDir { down, up };

// Decimal rendering of an exact rational, rounded toward -inf (down) or
// +inf (up). Presentation-layer only; the kernel never consumes decimals.
std::string decimal_string(const Rat& value, int digits, RoundDir dir);

// Floor of the integer square root; n must be >= 0.
Int isqrt(const Int& n);

// Smallest k >= 0 with 2^k >= n (n >= 1).
unsigned ceil_log2(const Int& n);

inline Rat pow2(int k) {
    if (k >= 0) return Rat(Int(1) << k);
    return Rat(Int(1), Int(1) << (-k));
}

} // namespace euclid
