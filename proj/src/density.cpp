#include "symdyn/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

constexpr const char* kFiniteSize = "finite-size artifact - rerun with longer prefix";

std::size_t block_length(const Word& w, long long K) {
  if (w.empty()) throw Error("empty word");
  if (K < 0) throw Error("growth constant must be nonnegative");
  return static_cast<std::size_t>(K + 1) * w.size();
}

// Complete blocks: the last start j*B must leave room for n-1 more letters.
std::size_t complete_blocks(std::size_t N, std::size_t B, std::size_t n) {
  return N + 1 < n ? 0 : (N + 1 - n) / B;
}

}  // namespace

bool block_indicator(const Word& w, std::span<const Symbol> x, std::size_t j, long long K) {
  const std::size_t B = block_length(w, K), n = w.size();
  if (j < 1 || j * B + n - 1 > x.size()) throw Error("block out of range");
  for (std::size_t k = (j - 1) * B + 1; k <= j * B; ++k)
    if (std::equal(w.begin(), w.end(), x.begin() + (k - 1))) return true;
  return false;
}

BlockDensity density_estimate(const Word& w, std::span<const Symbol> x, long long K) {
  BlockDensity d;
  d.w = w;
  d.K = K;
  d.block = block_length(w, K);
  d.N_max = complete_blocks(x.size(), d.block, w.size());
  if (d.N_max < 4) throw Error("prefix too short");
  std::vector<char> hit(d.N_max, 0);
  for (std::size_t k : occurrences(x, w)) {
    const std::size_t j = (k - 1) / d.block;
    if (j < d.N_max) hit[j] = 1;
  }
  std::size_t s = 0;
  for (std::size_t N = 1; N <= d.N_max; ++N) {
    s += hit[N - 1];
    d.S.push_back(s);
    d.D.push_back(static_cast<double>(s) / static_cast<double>(N));
  }
  const std::size_t from = (d.N_max + 1) / 2;
  d.D_est = *std::max_element(d.D.begin() + (from - 1), d.D.end());
  return d;
}

FloorReport special_density_floor(const LanguageOracle& oracle, std::span<const Symbol> x,
                                  std::size_t n, Side side, long long K, double theta_tol) {
  const auto g = growth_profile(oracle);
  if (!g.constant_tail || g.K < 1) throw Error("growth constant undefined: no constant positive tail");
  if (g.K != K) throw Error("growth constant mismatch: profile reports " + std::to_string(g.K));
  if (n < g.N0) throw Error("length below the constant-growth tail");
  const std::size_t B = static_cast<std::size_t>(K + 1) * n;
  if (complete_blocks(x.size(), B, n) < 32) throw Error("prefix too short for 32 blocks");
  FloorReport r;
  r.n = n;
  r.side = side;
  r.K = K;
  r.theta_tol = theta_tol;
  r.floor = 1.0 / static_cast<double>(K) - theta_tol;
  const auto words =
      special_words(oracle, n, side == Side::left ? SpecialKind::left : SpecialKind::right);
  for (const auto& w : words) {
    const double d = density_estimate(w, x, K).D_est;
    r.estimates.emplace_back(w, d);
    if (r.best.empty() || d > r.best_density) {
      r.best = w;
      r.best_density = d;
    }
  }
  r.pass = !r.best.empty() && r.best_density >= r.floor;
  return r;
}

WindowCheck special_window_check(const LanguageOracle& oracle, std::span<const Symbol> x,
                                 std::size_t n, Side side, long long K) {
  const auto specials =
      special_words(oracle, n, side == Side::left ? SpecialKind::left : SpecialKind::right);
  const std::size_t span = static_cast<std::size_t>(K + 2) * n - 1;
  if (x.size() < span) throw Error("prefix shorter than one window");
  // starts[t] = 1 iff a special word begins at 0-based t.
  std::vector<std::size_t> prefix(x.size() + 1, 0);
  std::vector<char> starts(x.size(), 0);
  for (const auto& w : specials)
    for (std::size_t k : occurrences(x, w)) starts[k - 1] = 1;
  for (std::size_t t = 0; t < x.size(); ++t) prefix[t + 1] = prefix[t] + starts[t];
  WindowCheck c;
  // Window [j, j+span-1] holds a length-n factor starting in [j, j+span-n].
  for (std::size_t j = 1; j + span - 1 <= x.size(); ++j) {
    ++c.windows;
    const std::size_t lo = j - 1, hi = j - 1 + span - n + 1;
    if (prefix[hi] == prefix[lo]) {
      c.pass = false;
      if (!c.first_failure) c.first_failure = j;
    }
  }
  return c;
}

InequalityCase subword_case(std::span<const Symbol> x, const Word& w, const Word& w_sub, long long K) {
  InequalityCase c;
  c.name = "subword";
  c.hypothesis_ok = !w_sub.empty() && w_sub.is_factor_of(w);
  if (!c.hypothesis_ok) {
    c.witness = "w' is not a subword of w";
    return c;
  }
  c.lhs = density_estimate(w_sub, x, K).D_est;
  c.rhs = static_cast<double>(w_sub.size()) / (2.0 * static_cast<double>(w.size())) *
          density_estimate(w, x, K).D_est;
  c.margin = c.lhs - c.rhs;
  c.pass = c.margin >= 0;
  if (!c.pass) c.note = kFiniteSize;
  return c;
}

InequalityCase loop_words_case(std::span<const Symbol> x, const Word& w,
                               const std::vector<Word>& family, long long K) {
  InequalityCase c;
  c.name = "loop-words";
  if (family.empty()) throw Error("empty word family");
  const std::size_t m = family.front().size(), n = w.size();
  for (const auto& z : family)
    if (z.size() != m) throw Error("family words must share one length");
  // A family member must start in [j, j') for consecutive occurrences j < j'.
  std::vector<std::size_t> member_starts;
  for (const auto& z : family)
    for (std::size_t k : occurrences(x, z)) member_starts.push_back(k);
  std::sort(member_starts.begin(), member_starts.end());
  const auto occ = occurrences(x, w);
  const std::size_t limit = x.size() - std::max(m, n);
  c.hypothesis_ok = true;
  for (std::size_t i = 0; i + 1 < occ.size() && occ[i + 1] <= limit; ++i) {
    auto it = std::lower_bound(member_starts.begin(), member_starts.end(), occ[i]);
    if (it == member_starts.end() || *it >= occ[i + 1]) {
      c.hypothesis_ok = false;
      c.witness = "no family member starts between occurrences at " + std::to_string(occ[i]) +
                  " and " + std::to_string(occ[i + 1]);
      return c;
    }
  }
  double best = 0;
  for (const auto& z : family) best = std::max(best, density_estimate(z, x, K).D_est);
  const double p = static_cast<double>(family.size());
  const double coeff = m >= n ? 1.0 / (4.0 * p)
                              : 1.0 / (p * (1.0 + 3.0 * static_cast<double>(n) / static_cast<double>(m)));
  c.lhs = best;
  c.rhs = coeff * density_estimate(w, x, K).D_est;
  c.margin = c.lhs - c.rhs;
  c.pass = c.margin >= 0;
  if (!c.pass) c.note = kFiniteSize;
  return c;
}

std::vector<InequalityCase> exit_density_cases(std::span<const Symbol> x, const Word& w,
                                               const std::vector<Word>& exits, long long K) {
  if (exits.empty()) throw Error("empty exit-word set");
  std::vector<InequalityCase> out;
  const double dw = density_estimate(w, x, K).D_est;
  double best = 0;
  for (const auto& z : exits) {
    InequalityCase c;
    c.name = "exit-word bound for z of length " + std::to_string(z.size());
    c.hypothesis_ok = w.is_factor_of(z);
    if (!c.hypothesis_ok) {
      c.witness = "w is not a subword of the exit word";
      out.push_back(c);
      continue;
    }
    const double dz = density_estimate(z, x, K).D_est;
    best = std::max(best, dz);
    c.lhs = dw;
    c.rhs = dz / (3.0 * static_cast<double>(K) + 9.0);
    c.margin = c.lhs - c.rhs;
    c.pass = c.margin >= 0;
    if (!c.pass) c.note = kFiniteSize;
    out.push_back(c);
  }
  InequalityCase c;
  c.name = "exit-word family bound";
  c.hypothesis_ok = true;
  c.lhs = best;
  c.rhs = dw / ((2.0 * static_cast<double>(K) + 3.0) * static_cast<double>(exits.size()));
  c.margin = c.lhs - c.rhs;
  c.pass = c.margin >= 0;
  if (!c.pass) c.note = kFiniteSize;
  out.push_back(c);
  return out;
}

ColorEstimate color_estimate(const std::vector<Word>& ladder,
                             const std::vector<std::span<const Symbol>>& candidates, long long K,
                             std::optional<double> theta) {
  if (ladder.empty()) throw Error("empty ladder");
  if (K < 1) throw Error("growth constant must be positive");
  ColorEstimate e;
  e.theta = theta.value_or(1.0 / (4.0 * static_cast<double>(K)));
  if (!(e.theta > 0 && e.theta < 1.0 / (2.0 * static_cast<double>(K))))
    throw Error("theta must lie in (0, 1/(2K))");
  const std::size_t from = ladder.size() / 2;
  std::size_t above = 0;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    double best = 0;
    for (std::size_t i = from; i < ladder.size(); ++i)
      best = std::max(best, density_estimate(ladder[i], candidates[c], K).D_est);
    e.estimates.push_back(best);
    if (best >= e.theta) {
      ++above;
      e.color = c + 1;
    }
  }
  if (above >= 2) {
    e.ambiguous = true;
    e.color = 0;
  }
  return e;
}

}  // namespace symdyn
