#include "symdyn/exit_words.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symdyn/error.hpp"
#include "symdyn/steps.hpp"

namespace symdyn {

bool is_exit_representation(const Word& w, std::size_t q, const Word& p, std::size_t r,
                            const Word& s) {
  if (p.empty() || s.empty() || p.size() > q || s.size() > q || r < 1) return false;
  const Word block = power(w, q, r);
  const Word next = power(w, q, r + 1);
  const bool item2 = !(p + block).is_suffix_of(next) && (p.sub(2, p.size()) + block).is_suffix_of(next);
  const bool item3 = !(block + s).is_prefix_of(next) && (block + s.sub(1, s.size() - 1)).is_prefix_of(next);
  return item2 && item3;
}

std::vector<ExitRepresentation> decompose(const Word& z, const Word& w, std::size_t q) {
  const std::size_t n = w.size();
  if (n == 0) throw Error("empty word");
  if (q < 1 || q >= n) throw Error("step too large");
  if (!shift_matches(w, q)) throw Error("invalid step");
  std::vector<ExitRepresentation> out;
  for (std::size_t a = 1; a <= q && a < z.size(); ++a)
    for (std::size_t b = 1; b <= q && a + b < z.size(); ++b) {
      const std::size_t m = z.size() - a - b;
      if (m < n || (m - n) % q != 0) continue;
      const std::size_t r = (m - n) / q + 1;
      if (z.sub(a + 1, a + m) != power(w, q, r)) continue;
      const Word p = z.sub(1, a), s = z.sub(a + m + 1, z.size());
      if (is_exit_representation(w, q, p, r, s)) out.push_back({q, p, r, s, false});
    }
  return out;
}

std::vector<ExitRepresentation> representations(const Word& z, const Word& w,
                                                const LanguageOracle& oracle) {
  if (!oracle.contains(z)) throw Error("not a factor");
  const auto q0 = minimal_step(w, oracle);
  std::vector<ExitRepresentation> out;
  for (std::size_t q = 1; q < w.size(); ++q) {
    if (!shift_matches(w, q)) continue;
    for (auto rep : decompose(z, w, q)) {
      rep.canonical = q0 && q == *q0;
      out.push_back(std::move(rep));
    }
  }
  return out;
}

ExitEnumeration enumerate_exit_words(const Word& w, std::size_t q, const LanguageOracle& oracle,
                                     std::optional<long long> K) {
  const std::size_t n = w.size();
  oracle.check_alphabet(w);
  if (q < 1 || q >= n || !shift_matches(w, q)) throw Error("q is not a valid step");
  if (n + q > oracle.horizon()) throw HorizonExceeded("exit-word enumeration", n + q);
  if (!oracle.contains(power(w, q, 2))) throw Error("q is not a valid step");
  const std::size_t H = oracle.horizon();
  const long long ln = static_cast<long long>(n);
  const Symbol k = static_cast<Symbol>(oracle.alphabet().size());
  ExitEnumeration e;
  e.w = w;
  e.q = q;

  // Entering edges c.u with u a window of the periodic word; |p| = a.
  std::vector<std::pair<std::size_t, Symbol>> entries, exits;
  for (std::size_t a = 1; a <= q; ++a) {
    const long long from = 2 - static_cast<long long>(a);
    const Word u = periodic_segment(w, q, from, from + ln - 1);
    for (Symbol c = 0; c < k; ++c)
      if (c != periodic_letter(w, q, from - 1) && oracle.contains(c + u)) entries.emplace_back(a, c);
  }
  for (std::size_t b = 1; b <= q; ++b) {
    const long long to = ln + static_cast<long long>(b) - 1;
    const Word v = periodic_segment(w, q, to - ln + 1, to);
    for (Symbol d = 0; d < k; ++d)
      if (d != periodic_letter(w, q, to + 1) && oracle.contains(v + d)) exits.emplace_back(b, d);
  }
  e.entries = entries.size();
  e.exits = exits.size();

  std::map<Word, ExitRepresentation> found;
  for (std::size_t r = 1;; ++r) {
    const std::size_t block = n + (r - 1) * q;
    if (block > H) {
      e.partial = true;
      break;
    }
    if (r >= 2 && !oracle.contains(power(w, q, r))) break;
    for (auto [a, c] : entries)
      for (auto [b, d] : exits) {
        if (a + b + block > H) {
          e.partial = true;
          continue;
        }
        const long long from = 2 - static_cast<long long>(a);
        const long long to = static_cast<long long>(block + b) - 1;
        const Word z = c + periodic_segment(w, q, from, to) + d;
        if (!oracle.contains(z)) continue;
        ExitRepresentation rep{q, z.sub(1, a), r, z.sub(z.size() - b + 1, z.size()), true};
        auto it = found.find(z);
        if (it == found.end()) {
          found.emplace(z, rep);
        } else {
          auto& cur = it->second;
          if (rep.r > cur.r || (rep.r == cur.r && rep.p.size() < cur.p.size())) cur = rep;
        }
      }
  }
  std::map<std::pair<Word, Word>, std::set<std::size_t>> r_by_ends;
  for (auto& [z, rep] : found) {
    r_by_ends[{rep.p, rep.s}].insert(rep.r);
    e.words.push_back({z, rep});
  }
  for (const auto& [ends, rs] : r_by_ends)
    if (rs.size() > 2 || (rs.size() == 2 && *rs.rbegin() != *rs.begin() + 1)) e.r_values_ok = false;
  if (K) {
    e.bound = static_cast<std::size_t>(2 * *K * *K);
    e.within_bound = e.words.size() <= *e.bound;
  }
  return e;
}

OccurrenceClass classify_occurrence(std::span<const Symbol> x, const Word& w, std::size_t j,
                                    std::size_t q) {
  const std::size_t n = w.size(), N = x.size();
  if (j < 1 || j + n - 1 > N || !std::equal(w.begin(), w.end(), x.begin() + (j - 1)))
    throw Error("w does not occur at the given position");
  if (q < 1 || 2 * q > n || !shift_matches(w, q)) throw Error("invalid step");
  // Letter expected at position t when w sits at j.
  auto expected = [&](std::size_t t) {
    return periodic_letter(w, q, static_cast<long long>(t) - static_cast<long long>(j) + 1);
  };
  std::size_t j1 = j;
  while (j1 > 1 && x[j1 - 2] == expected(j1 - 1)) --j1;
  OccurrenceClass out;
  out.j = j;
  if (j1 == 1) {
    out.kind = OccurrenceCase::suffix_of_power;
    out.r = (j - 1 + q - 1) / q + 1;
    return out;
  }
  std::size_t e = j + n - 1;
  while (e < N && x[e] == expected(e + 1)) ++e;
  if (e == N) throw HorizonExceeded("periodic run reaches the end of the prefix", N + 1);
  const std::size_t k = j1 - 1;
  const Word z(x.subspan(k - 1, e + 2 - k));
  const auto reps = decompose(z, w, q);
  // The representation whose copies of w are aligned with position j.
  for (const auto& rep : reps) {
    const std::size_t block_start = k + rep.p.size();
    if (block_start <= j && (j - block_start) % q == 0) {
      out.kind = OccurrenceCase::inside_exit_word;
      out.k = k;
      out.exit = ExitWord{z, rep};
      out.slot = (j - block_start) / q + 1;
      return out;
    }
  }
  throw std::logic_error("maximal periodic run does not yield an exit word");
}

OverlapReport check_overlap_bound(std::span<const Symbol> x, const Word& w, std::size_t q) {
  OverlapReport report;
  std::map<std::size_t, ExitWord> by_start;
  for (std::size_t j : occurrences(x, w)) {
    try {
      const auto c = classify_occurrence(x, w, j, q);
      if (c.kind == OccurrenceCase::inside_exit_word) by_start.emplace(*c.k, *c.exit);
    } catch (const HorizonExceeded&) {
    }
  }
  for (auto& [start, ex] : by_start) report.exits.push_back({start, ex});
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 1 < report.exits.size(); ++i) {
    const auto& a = report.exits[i];
    const auto& b = report.exits[i + 1];
    OverlapRecord rec{a, b};
    rec.overlap = static_cast<long long>(a.start + a.exit.z.size()) - static_cast<long long>(b.start);
    rec.start_bound_ok = b.start + n >= a.start + a.exit.z.size();
    const std::size_t end = b.start + b.exit.z.size() - 1;
    rec.w_count = occurrences(x.subspan(a.start - 1, end - a.start + 1), w).size();
    rec.count_bound_ok = rec.w_count >= a.exit.rep.r + b.exit.rep.r;
    report.all_ok = report.all_ok && rec.start_bound_ok && rec.count_bound_ok;
    report.pairs.push_back(std::move(rec));
  }
  return report;
}

}  // namespace symdyn
