#pragma once

#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "symdyn/word.hpp"

namespace symdyn {

// Factor sets L_1..L_H of a factorial, extendable language.
// Invariants: every subword of a member is a member; every w in L_n with
// n < H-1 has some a, b with awb in L_{n+2}.
class LanguageOracle {
 public:
  // Factors of a finite prefix. Requires 4H <= |x|. Factors that cannot be
  // extended on both sides inside the prefix are trimmed, together with
  // everything containing them.
  static LanguageOracle from_prefix(const Alphabet& alphabet, std::span<const Symbol> x,
                                    std::size_t horizon, std::string label = "prefix");

  // Words accepted by a factorial predicate, built letter by letter.
  static LanguageOracle from_predicate(const Alphabet& alphabet, std::size_t horizon,
                                       const std::function<bool(const Word&)>& accept,
                                       std::string label = "predicate");

  static LanguageOracle full_shift(const Alphabet& alphabet, std::size_t horizon);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t horizon() const noexcept { return horizon_; }
  const std::string& label() const noexcept { return label_; }
  // Number of factors removed by boundary trimming.
  std::size_t trimmed() const noexcept { return trimmed_; }

  // Throws HorizonExceeded when |w| > H.
  bool contains(const Word& w) const;
  bool contains(std::span<const Symbol> w) const;
  // Sorted factors of length n, 1 <= n <= H.
  const std::vector<Word>& factors(std::size_t n) const;
  std::size_t complexity(std::size_t n) const { return factors(n).size(); }

  // Throws Error if `w` uses a symbol outside the alphabet.
  void check_alphabet(const Word& w) const;

 private:
  LanguageOracle(Alphabet alphabet, std::size_t horizon, std::string label)
      : alphabet_(std::move(alphabet)), horizon_(horizon), label_(std::move(label)) {}
  void finalize(std::vector<std::unordered_set<Word, WordHash>> sets);

  Alphabet alphabet_;
  std::size_t horizon_ = 0;
  std::string label_;
  std::size_t trimmed_ = 0;
  std::vector<std::vector<Word>> sorted_;                 // index n
  std::vector<std::unordered_set<Word, WordHash>> sets_;  // index n
};

}  // namespace symdyn
