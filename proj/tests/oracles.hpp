#pragma once

// Brute-force references built on plain strings, independent of the library.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::set<std::string> factors(const std::string& x, std::size_t n) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + n <= x.size(); ++i) out.insert(x.substr(i, n));
  return out;
}

inline std::string fibonacci(std::size_t n) {
  std::string a = "a", b = "ab";
  while (b.size() < n) {
    std::string c = b + a;
    a = b;
    b = c;
  }
  return b.substr(0, n);
}

inline std::string thue_morse(std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += (__builtin_popcountll(i) % 2) ? '1' : '0';
  return out;
}

// All binary strings of length n.
inline std::vector<std::string> binary_words(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
    std::string w;
    for (std::size_t i = 0; i < n; ++i) w += ((m >> (n - 1 - i)) & 1) ? '1' : '0';
    out.push_back(w);
  }
  return out;
}

inline bool has_period(const std::string& w, std::size_t q) {
  for (std::size_t i = q; i < w.size(); ++i)
    if (w[i] != w[i - q]) return false;
  return true;
}

// Length-(n+q) continuation of w with period q.
inline std::string square_step(const std::string& w, std::size_t q) {
  std::string out = w;
  for (std::size_t i = 0; i < q; ++i) out += out[out.size() - q];
  return out;
}

}  // namespace oracle

namespace oracle {

struct Rep {
  std::string p;
  std::size_t r;
  std::string s;
  bool operator==(const Rep&) const = default;
};

// w^{q*r} spelled out letter by letter.
inline std::string qpower(const std::string& w, std::size_t q, std::size_t r) {
  std::string out = w;
  for (std::size_t i = 1; i < r; ++i)
    for (std::size_t t = 0; t < q; ++t) out += out[out.size() - q];
  return out;
}

inline bool ends_with(const std::string& a, const std::string& suf) {
  return a.size() >= suf.size() && a.compare(a.size() - suf.size(), suf.size(), suf) == 0;
}

inline bool starts_with(const std::string& a, const std::string& pre) {
  return a.size() >= pre.size() && a.compare(0, pre.size(), pre) == 0;
}

// Every split z = p + qpower(w,q,r) + s meeting the exit-word conditions.
inline std::vector<Rep> exit_reps(const std::string& z, const std::string& w, std::size_t q) {
  std::vector<Rep> out;
  for (std::size_t i = 1; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const std::string p = z.substr(0, i), mid = z.substr(i, j - i), s = z.substr(j);
      if (p.size() > q || s.size() > q) continue;
      for (std::size_t r = 1; w.size() + (r - 1) * q <= mid.size(); ++r) {
        if (qpower(w, q, r) != mid) continue;
        const std::string next = qpower(w, q, r + 1);
        const bool i2 = !ends_with(next, p + mid) && ends_with(next, p.substr(1) + mid);
        const bool i3 = !starts_with(next, mid + s) && starts_with(next, mid + s.substr(0, s.size() - 1));
        if (i2 && i3) out.push_back({p, r, s});
      }
    }
  return out;
}

}  // namespace oracle
