#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace symdyn {

// Exact fraction with 64-bit parts; arithmetic throws Error on overflow.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  static Rational parse(const std::string& text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  std::string str() const;
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

 private:
  static Rational from_wide(__int128 n, __int128 d);
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

// Last continued-fraction convergent p/q of sqrt(m) with q <= max_denominator.
// m must not be a perfect square.
Rational sqrt_convergent(std::int64_t m, std::int64_t max_denominator);

}  // namespace symdyn
