#include "symdyn/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

__int128 gcd_wide(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 0) throw Error("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const __int128 g = gcd_wide(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (!fits(n) || !fits(d)) throw Error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

Rational Rational::parse(const std::string& text) {
  try {
    std::size_t pos = 0;
    const auto slash = text.find('/');
    std::int64_t n = std::stoll(text.substr(0, slash), &pos);
    if (pos != (slash == std::string::npos ? text.size() : slash)) throw Error("");
    std::int64_t d = 1;
    if (slash != std::string::npos) {
      const std::string rest = text.substr(slash + 1);
      d = std::stoll(rest, &pos);
      if (pos != rest.size()) throw Error("");
    }
    return Rational(n, d);
  } catch (const std::exception&) {
    throw Error("malformed rational '" + text + "'");
  }
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& o) const {
  return from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  const __int128 l = static_cast<__int128>(num_) * o.den_;
  const __int128 r = static_cast<__int128>(o.num_) * den_;
  return l < r ? std::strong_ordering::less
               : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  const __int128 l = static_cast<__int128>(a / std::gcd(a, b)) * b;
  if (!fits(l)) throw Error("common denominator overflow");
  return static_cast<std::int64_t>(l);
}

Rational sqrt_convergent(std::int64_t m, std::int64_t max_denominator) {
  if (m <= 0) throw Error("sqrt_convergent needs a positive radicand");
  std::int64_t a0 = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
  while (a0 * a0 > m) --a0;
  while ((a0 + 1) * (a0 + 1) <= m) ++a0;
  if (a0 * a0 == m) throw Error("perfect square radicand");
  // Exact periodic expansion: (sqrt(m) + mm) / dd.
  __int128 mm = 0, dd = 1, a = a0;
  __int128 p_prev = 1, p = a0, q_prev = 0, q = 1;
  for (;;) {
    mm = dd * a - mm;
    dd = (m - mm * mm) / dd;
    a = (a0 + mm) / dd;
    const __int128 p_next = a * p + p_prev, q_next = a * q + q_prev;
    if (q_next > max_denominator) break;
    p_prev = p;
    p = p_next;
    q_prev = q;
    q = q_next;
  }
  return Rational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
}

}  // namespace symdyn
