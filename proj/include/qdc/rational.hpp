// rational.hpp — Exact rational arithmetic for pulse-sequence durations,
// so decoupling checks need no floating-point tolerance.

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace qdc::pauli {

class Rational {
  public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}   // NOLINT: implicit by design
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num_, den_); }
    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    // "a" or "a/b", reduced
    std::string str() const;
    static Rational parse(const std::string& text);

  private:
    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace qdc::pauli
