#include "symdyn/language.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "symdyn/error.hpp"

namespace symdyn {

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

ExtensionRecord extensions(const LanguageOracle& oracle, const Word& w) {
  if (w.empty()) throw Error("empty word");
  oracle.check_alphabet(w);
  if (w.size() + 2 > oracle.horizon())
    throw HorizonExceeded("extensions of a length-" + std::to_string(w.size()) + " word",
                          w.size() + 2);
  if (!oracle.contains(w)) throw Error("not a factor");
  ExtensionRecord rec;
  rec.word = w;
  const Symbol k = static_cast<Symbol>(oracle.alphabet().size());
  std::vector<Symbol> buf(w.size() + 2);
  std::copy(w.begin(), w.end(), buf.begin() + 1);
  const std::span<const Symbol> all(buf);
  for (Symbol a = 0; a < k; ++a) {
    buf.front() = a;
    if (oracle.contains(all.first(w.size() + 1))) rec.left.push_back(a);
  }
  for (Symbol b = 0; b < k; ++b) {
    buf.back() = b;
    if (oracle.contains(all.last(w.size() + 1))) rec.right.push_back(b);
  }
  for (Symbol a : rec.left)
    for (Symbol b : rec.right) {
      buf.front() = a;
      buf.back() = b;
      if (oracle.contains(all)) rec.both.emplace_back(a, b);
    }
  rec.multiplicity = static_cast<long long>(rec.both.size()) -
                     static_cast<long long>(rec.left.size()) -
                     static_cast<long long>(rec.right.size()) + 1;
  return rec;
}

std::vector<Word> special_words(const LanguageOracle& oracle, std::size_t n, SpecialKind kind) {
  if (n < 1) throw Error("length must be positive");
  if (n + 2 > oracle.horizon()) throw HorizonExceeded("special words", n + 2);
  std::vector<Word> out;
  for (const Word& w : oracle.factors(n)) {
    const auto rec = extensions(oracle, w);
    const bool keep = kind == SpecialKind::left    ? rec.left_special()
                      : kind == SpecialKind::right ? rec.right_special()
                                                   : rec.bispecial();
    if (keep) out.push_back(w);
  }
  return out;
}

RegularityVerdict is_regular_bispecial(const LanguageOracle& oracle, const Word& w) {
  if (w.size() + 3 > oracle.horizon())
    throw HorizonExceeded("regularity of a length-" + std::to_string(w.size()) + " word",
                          w.size() + 3);
  const auto rec = extensions(oracle, w);
  if (!rec.bispecial()) throw Error("not bispecial");
  RegularityVerdict v;
  for (Symbol b : rec.right)
    if (extensions(oracle, w + b).left_special()) v.left_special_right_ext.push_back(b);
  for (Symbol a : rec.left)
    if (extensions(oracle, a + w).right_special()) v.right_special_left_ext.push_back(a);
  if (v.left_special_right_ext.size() == 1) v.b_hat = v.left_special_right_ext.front();
  if (v.right_special_left_ext.size() == 1) v.a_hat = v.right_special_left_ext.front();
  v.regular = v.a_hat.has_value() && v.b_hat.has_value();
  if (!v.regular)
    v.violation = std::to_string(v.left_special_right_ext.size()) +
                  " left special right extensions, " +
                  std::to_string(v.right_special_left_ext.size()) +
                  " right special left extensions";
  return v;
}

ExtensionGraph extension_graph(const ExtensionRecord& rec) {
  ExtensionGraph g;
  g.left = rec.left;
  g.right = rec.right;
  for (auto [a, b] : rec.both) {
    auto li = std::find(g.left.begin(), g.left.end(), a) - g.left.begin();
    auto ri = std::find(g.right.begin(), g.right.end(), b) - g.right.begin();
    g.edges.emplace_back(static_cast<std::size_t>(li), static_cast<std::size_t>(ri));
  }
  return g;
}

bool ExtensionGraph::connected() const {
  const std::size_t nv = left.size() + right.size();
  if (nv == 0) return true;
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = nv;
  for (auto [l, r] : edges) {
    auto a = find(l), b = find(left.size() + r);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

bool ExtensionGraph::is_tree() const {
  return connected() && edges.size() + 1 == left.size() + right.size();
}

bool is_dendric(const ExtensionRecord& rec) { return extension_graph(rec).is_tree(); }

GrowthProfile growth_profile(const LanguageOracle& oracle) {
  const std::size_t H = oracle.horizon();
  GrowthProfile g;
  g.horizon = H;
  for (std::size_t n = 1; n <= H; ++n) g.p.push_back(oracle.complexity(n));
  for (std::size_t n = 1; n < H; ++n)
    g.differences.push_back(static_cast<long long>(g.p[n]) - static_cast<long long>(g.p[n - 1]));
  for (std::size_t n = 1; n + 2 <= H; ++n) {
    long long left_sum = 0, right_sum = 0;
    for (const Word& w : oracle.factors(n)) {
      const auto rec = extensions(oracle, w);
      if (rec.left_special()) left_sum += static_cast<long long>(rec.left.size()) - 1;
      if (rec.right_special()) right_sum += static_cast<long long>(rec.right.size()) - 1;
    }
    if (left_sum != g.differences[n - 1] || right_sum != g.differences[n - 1])
      throw std::logic_error("special sums disagree with the complexity difference at n=" +
                             std::to_string(n));
  }
  if (g.differences.empty()) return g;
  const long long last = g.differences.back();
  std::size_t start = g.differences.size();
  while (start > 0 && g.differences[start - 1] == last) --start;
  const std::size_t tail = g.differences.size() - start;
  const std::size_t needed = std::max<std::size_t>(3, (g.differences.size() + 1) / 2);
  g.constant_tail = tail >= needed;
  if (g.constant_tail) {
    g.K = last;
    g.N0 = start + 1;
  }
  return g;
}

RbcReport check_rbc(const LanguageOracle& oracle, std::size_t n_min,
                    std::optional<std::size_t> n_max) {
  if (n_min < 1) throw Error("n_min must be positive");
  const std::size_t H = oracle.horizon();
  if (H < n_min + 3) throw HorizonExceeded("RBC check", n_min + 3);
  RbcReport r;
  r.n_min = n_min;
  r.max_length = std::min(n_max.value_or(H - 3), H - 3);
  r.n0_estimate = n_min;
  for (std::size_t n = n_min; n <= r.max_length; ++n)
    for (const Word& w : special_words(oracle, n, SpecialKind::bi)) {
      ++r.bispecial_count;
      const auto v = is_regular_bispecial(oracle, w);
      if (!v.regular) {
        r.violations.push_back({w, v.violation});
        r.n0_estimate = n + 1;
      }
    }
  r.holds = r.violations.empty();
  return r;
}

PeriodicityVerdict periodicity_check(const LanguageOracle& oracle) {
  PeriodicityVerdict v;
  const std::size_t H = oracle.horizon();
  for (std::size_t n = 1; n <= H; ++n)
    if (oracle.complexity(n) <= n) {
      v.n0 = n;
      break;
    }
  v.periodic = v.n0.has_value();
  for (std::size_t p = 1; p < H && !v.period; ++p) {
    bool ok = true;
    for (const Word& w : oracle.factors(H)) {
      for (std::size_t i = 0; i + p < w.size() && ok; ++i) ok = w[i] == w[i + p];
      if (!ok) break;
    }
    if (ok) v.period = p;
  }
  return v;
}

namespace {

std::vector<Word> special_extensions_of(const std::vector<Word>& candidates, const Word& w,
                                        Side side) {
  std::vector<Word> out;
  for (const Word& c : candidates)
    if (side == Side::left ? w.is_prefix_of(c) : w.is_suffix_of(c)) out.push_back(c);
  return out;
}

SpecialKind kind_of(Side s) { return s == Side::left ? SpecialKind::left : SpecialKind::right; }

}  // namespace

SpecialExtensionMap special_extension_map(const LanguageOracle& oracle, Side side, std::size_t n1,
                                          std::size_t n2) {
  if (n1 < 1 || n1 > n2) throw Error("requires 1 <= n1 <= n2");
  if (n2 + 2 > oracle.horizon()) throw HorizonExceeded("special extension map", n2 + 2);
  if (n2 > n1 && !check_rbc(oracle, n1, n2 - 1).holds) throw Error("RBC not established");
  SpecialExtensionMap m;
  m.side = side;
  m.n1 = n1;
  m.n2 = n2;
  const auto targets = special_words(oracle, n2, kind_of(side));
  for (const Word& w : special_words(oracle, n1, kind_of(side))) {
    auto c = special_extensions_of(targets, w, side);
    if (c.size() == 1)
      m.mapping.emplace(w, c.front());
    else
      m.failures.push_back(w);
  }
  return m;
}

std::vector<StabilizationRecord> extension_stabilization(const LanguageOracle& oracle, Side side,
                                                         std::size_t n0) {
  const std::size_t top = oracle.horizon() - 2;
  if (n0 > top) throw HorizonExceeded("stabilization", n0 + 2);
  std::vector<std::vector<Word>> specials(top + 1);
  for (std::size_t n = n0; n <= top; ++n) specials[n] = special_words(oracle, n, kind_of(side));
  std::vector<StabilizationRecord> out;
  for (const Word& start : specials[n0]) {
    StabilizationRecord rec;
    rec.start = start;
    std::vector<std::vector<Symbol>> ext;
    Word cur = start;
    bool chain_ok = true;
    for (std::size_t n = n0;; ++n) {
      const auto e = extensions(oracle, cur);
      ext.push_back(side == Side::left ? e.left : e.right);
      if (n == top) break;
      auto next = special_extensions_of(specials[n + 1], cur, side);
      if (next.size() != 1) {
        chain_ok = false;
        break;
      }
      cur = next.front();
    }
    if (chain_ok) {
      std::size_t i = ext.size() - 1;
      while (i > 0 && ext[i - 1] == ext.back()) --i;
      rec.stable_from = n0 + i;
      rec.final_extensions = ext.back();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<ReturnGapStats> return_gaps(std::span<const Symbol> x, std::size_t n) {
  if (n < 1) throw Error("length must be positive");
  std::map<Word, ReturnGapStats> stats;
  std::unordered_map<Word, std::size_t, WordHash> last;
  for (std::size_t i = 0; i + n <= x.size(); ++i) {
    Word w(x.subspan(i, n));
    auto& s = stats[w];
    s.word = w;
    ++s.occurrences;
    auto it = last.find(w);
    if (it != last.end()) s.max_gap = std::max(s.max_gap, i - it->second);
    last[w] = i;
  }
  std::vector<ReturnGapStats> out;
  for (auto& [w, s] : stats) out.push_back(s);
  return out;
}

}  // namespace symdyn
