#include "symdyn/oracle.hpp"

#include <algorithm>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

using FactorSets = std::vector<std::unordered_set<Word, WordHash>>;

bool has_two_sided_extension(const Word& w, const FactorSets& sets, std::size_t k) {
  std::vector<Symbol> buf(w.size() + 2);
  std::copy(w.begin(), w.end(), buf.begin() + 1);
  for (Symbol a = 0; a < k; ++a) {
    buf.front() = a;
    for (Symbol b = 0; b < k; ++b) {
      buf.back() = b;
      if (sets[w.size() + 2].count(Word(std::span<const Symbol>(buf)))) return true;
    }
  }
  return false;
}

// Removes non-extendable words and restores factor closure until stable.
std::size_t trim(FactorSets& sets, std::size_t horizon, std::size_t k) {
  std::size_t removed = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t n = 1; n + 1 < horizon; ++n) {
      for (auto it = sets[n].begin(); it != sets[n].end();) {
        if (!has_two_sided_extension(*it, sets, k)) {
          it = sets[n].erase(it);
          ++removed;
          changed = true;
        } else {
          ++it;
        }
      }
    }
    for (std::size_t n = 2; n <= horizon; ++n) {
      for (auto it = sets[n].begin(); it != sets[n].end();) {
        const Word& w = *it;
        if (!sets[n - 1].count(w.sub(1, n - 1)) || !sets[n - 1].count(w.sub(2, n))) {
          it = sets[n].erase(it);
          ++removed;
          changed = true;
        } else {
          ++it;
        }
      }
    }
  }
  return removed;
}

}  // namespace

LanguageOracle LanguageOracle::from_prefix(const Alphabet& alphabet, std::span<const Symbol> x,
                                           std::size_t horizon, std::string label) {
  if (horizon < 1) throw Error("horizon must be positive");
  if (4 * horizon > x.size())
    throw Error("horizon " + std::to_string(horizon) + " exceeds a quarter of the prefix length " +
                std::to_string(x.size()));
  for (Symbol s : x)
    if (s >= alphabet.size()) throw Error("alphabet mismatch");
  LanguageOracle o(alphabet, horizon, std::move(label));
  FactorSets sets(horizon + 1);
  for (std::size_t n = 1; n <= horizon; ++n) {
    auto& set = sets[n];
    for (std::size_t i = 0; i + n <= x.size(); ++i) set.insert(Word(x.subspan(i, n)));
  }
  o.trimmed_ = trim(sets, horizon, alphabet.size());
  o.finalize(std::move(sets));
  return o;
}

LanguageOracle LanguageOracle::from_predicate(const Alphabet& alphabet, std::size_t horizon,
                                              const std::function<bool(const Word&)>& accept,
                                              std::string label) {
  if (horizon < 1) throw Error("horizon must be positive");
  LanguageOracle o(alphabet, horizon, std::move(label));
  FactorSets sets(horizon + 1);
  for (Symbol a = 0; a < alphabet.size(); ++a) {
    Word w{a};
    if (accept(w)) sets[1].insert(w);
  }
  for (std::size_t n = 1; n < horizon; ++n)
    for (const Word& w : sets[n])
      for (Symbol a = 0; a < alphabet.size(); ++a) {
        Word v = w + a;
        if (sets[n].count(v.sub(2, n + 1)) && accept(v)) sets[n + 1].insert(std::move(v));
      }
  o.trimmed_ = trim(sets, horizon, alphabet.size());
  o.finalize(std::move(sets));
  return o;
}

LanguageOracle LanguageOracle::full_shift(const Alphabet& alphabet, std::size_t horizon) {
  return from_predicate(alphabet, horizon, [](const Word&) { return true; }, "full shift");
}

void LanguageOracle::finalize(FactorSets sets) {
  sorted_.assign(horizon_ + 1, {});
  for (std::size_t n = 1; n <= horizon_; ++n) {
    sorted_[n].assign(sets[n].begin(), sets[n].end());
    std::sort(sorted_[n].begin(), sorted_[n].end());
  }
  sets_ = std::move(sets);
}

bool LanguageOracle::contains(std::span<const Symbol> w) const {
  if (w.empty()) return true;
  if (w.size() > horizon_) throw HorizonExceeded("membership query", w.size());
  return sets_[w.size()].count(Word(w)) > 0;
}

bool LanguageOracle::contains(const Word& w) const { return contains(w.view()); }

const std::vector<Word>& LanguageOracle::factors(std::size_t n) const {
  if (n < 1) throw Error("factor length must be positive");
  if (n > horizon_) throw HorizonExceeded("factor set", n);
  return sorted_[n];
}

void LanguageOracle::check_alphabet(const Word& w) const {
  for (Symbol s : w)
    if (s >= alphabet_.size()) throw Error("alphabet mismatch");
}

}  // namespace symdyn
