#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace symdyn {

using Symbol = std::uint16_t;

class Word;

// Finite ordered set of tokens; a symbol is an index into it.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> tokens);

  // One token per character of `letters`.
  static Alphabet from_chars(const std::string& letters);

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::string& token(Symbol s) const { return tokens_.at(s); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  std::optional<Symbol> find(const std::string& token) const;
  Symbol symbol(const std::string& token) const;

  // Parses a string of single-character tokens.
  Word parse(const std::string& text) const;
  // Parses whitespace-separated tokens.
  Word parse_tokens(const std::string& text) const;
  // Concatenation when all tokens are one character, else space-separated.
  std::string render(const Word& w) const;

  bool single_char() const noexcept { return single_char_; }
  bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Symbol> index_;
  bool single_char_ = true;
};

// Sequence of symbols. Public positions are 1-based.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Symbol> letters) : letters_(letters) {}
  explicit Word(std::vector<Symbol> letters) : letters_(std::move(letters)) {}
  Word(std::span<const Symbol> letters) : letters_(letters.begin(), letters.end()) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  // 1-based access.
  Symbol at(std::size_t i) const { return letters_.at(i - 1); }
  Symbol operator[](std::size_t i0) const { return letters_[i0]; }
  Symbol front() const { return letters_.front(); }
  Symbol back() const { return letters_.back(); }

  // w[i..j], 1-based inclusive; empty when j < i.
  Word sub(std::size_t i, std::size_t j) const;
  std::span<const Symbol> view() const noexcept { return letters_; }
  const std::vector<Symbol>& letters() const noexcept { return letters_; }

  Word operator+(const Word& o) const;
  Word operator+(Symbol s) const;
  friend Word operator+(Symbol s, const Word& w);
  void push_back(Symbol s) { letters_.push_back(s); }

  bool is_prefix_of(const Word& o) const;
  bool is_suffix_of(const Word& o) const;
  bool is_factor_of(const Word& o) const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

 private:
  std::vector<Symbol> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
  std::size_t operator()(std::span<const Symbol> w) const noexcept;
};

// 1-based start positions of `needle` in `haystack`.
std::vector<std::size_t> occurrences(const Word& haystack, const Word& needle);
std::vector<std::size_t> occurrences(std::span<const Symbol> haystack, const Word& needle);

// True iff w[q+1..n] = w[1..n-q].
bool shift_matches(const Word& w, std::size_t q);

// Letter at 1-based position t (any integer) of the two-sided q-periodic
// word that agrees with w on 1..q.
Symbol periodic_letter(const Word& w, std::size_t q, long long t);

// Periodic word over positions from..to (1-based, may be <= 0).
Word periodic_segment(const Word& w, std::size_t q, long long from, long long to);

// w^{q*r}: length n+(r-1)q prefix of the q-periodic extension of w.
// Requires 1 <= q < n, shift_matches(w, q) and r >= 1. Valid steps also
// satisfy q <= n/2, but exit-word representations may use longer shifts.
Word power(const Word& w, std::size_t q, std::size_t r);

}  // namespace symdyn

template <>
struct std::hash<symdyn::Word> {
  std::size_t operator()(const symdyn::Word& w) const noexcept { return symdyn::WordHash{}(w); }
};
