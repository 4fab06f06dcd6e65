#include "symdyn/word.hpp"

#include <algorithm>
#include <sstream>

#include "symdyn/error.hpp"

namespace symdyn {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw Error("empty alphabet");
  if (tokens_.size() > 0xFFFF) throw Error("alphabet too large");
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const auto& t = tokens_[i];
    if (t.empty()) throw Error("empty alphabet token");
    if (t.size() != 1) single_char_ = false;
    if (!index_.emplace(t, static_cast<Symbol>(i)).second)
      throw Error("duplicate alphabet token '" + t + "'");
  }
}

Alphabet Alphabet::from_chars(const std::string& letters) {
  std::vector<std::string> tokens;
  for (char c : letters) tokens.emplace_back(1, c);
  return Alphabet(std::move(tokens));
}

std::optional<Symbol> Alphabet::find(const std::string& token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::symbol(const std::string& token) const {
  auto s = find(token);
  if (!s) throw Error("symbol '" + token + "' not in alphabet");
  return *s;
}

Word Alphabet::parse(const std::string& text) const {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(symbol(std::string(1, c)));
  return Word(std::move(out));
}

Word Alphabet::parse_tokens(const std::string& text) const {
  std::istringstream in(text);
  std::vector<Symbol> out;
  std::string tok;
  while (in >> tok) out.push_back(symbol(tok));
  return Word(std::move(out));
}

std::string Alphabet::render(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_char_ && i > 0) out += ' ';
    out += token(w[i]);
  }
  return out;
}

Word Word::sub(std::size_t i, std::size_t j) const {
  if (j < i) return Word();
  if (i < 1 || j > size()) throw Error("subword range out of bounds");
  return Word(std::vector<Symbol>(letters_.begin() + (i - 1), letters_.begin() + j));
}

Word Word::operator+(const Word& o) const {
  std::vector<Symbol> out(letters_);
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(out));
}

Word Word::operator+(Symbol s) const {
  std::vector<Symbol> out(letters_);
  out.push_back(s);
  return Word(std::move(out));
}

Word operator+(Symbol s, const Word& w) {
  std::vector<Symbol> out;
  out.reserve(w.size() + 1);
  out.push_back(s);
  out.insert(out.end(), w.letters_.begin(), w.letters_.end());
  return Word(std::move(out));
}

bool Word::is_prefix_of(const Word& o) const {
  return size() <= o.size() && std::equal(begin(), end(), o.begin());
}

bool Word::is_suffix_of(const Word& o) const {
  return size() <= o.size() && std::equal(begin(), end(), o.end() - size());
}

bool Word::is_factor_of(const Word& o) const {
  return std::search(o.begin(), o.end(), begin(), end()) != o.end();
}

std::size_t WordHash::operator()(std::span<const Symbol> w) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Symbol s : w) {
    h ^= s;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ w.size());
}

std::size_t WordHash::operator()(const Word& w) const noexcept { return (*this)(w.view()); }

std::vector<std::size_t> occurrences(std::span<const Symbol> haystack, const Word& needle) {
  if (needle.empty()) throw Error("empty word");
  std::vector<std::size_t> out;
  if (needle.size() > haystack.size()) return out;
  // Knuth-Morris-Pratt failure table.
  const std::size_t m = needle.size();
  std::vector<std::size_t> fail(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && needle[i] != needle[k]) k = fail[k - 1];
    if (needle[i] == needle[k]) ++k;
    fail[i] = k;
  }
  for (std::size_t i = 0, k = 0; i < haystack.size(); ++i) {
    while (k > 0 && haystack[i] != needle[k]) k = fail[k - 1];
    if (haystack[i] == needle[k]) ++k;
    if (k == m) {
      out.push_back(i + 2 - m);
      k = fail[k - 1];
    }
  }
  return out;
}

std::vector<std::size_t> occurrences(const Word& haystack, const Word& needle) {
  return occurrences(haystack.view(), needle);
}

bool shift_matches(const Word& w, std::size_t q) {
  if (q == 0 || q >= w.size()) return false;
  for (std::size_t i = q; i < w.size(); ++i)
    if (w[i] != w[i - q]) return false;
  return true;
}

Symbol periodic_letter(const Word& w, std::size_t q, long long t) {
  const long long qq = static_cast<long long>(q);
  long long r = (t - 1) % qq;
  if (r < 0) r += qq;
  return w[static_cast<std::size_t>(r)];
}

Word periodic_segment(const Word& w, std::size_t q, long long from, long long to) {
  std::vector<Symbol> out;
  for (long long t = from; t <= to; ++t) out.push_back(periodic_letter(w, q, t));
  return Word(std::move(out));
}

Word power(const Word& w, std::size_t q, std::size_t r) {
  const std::size_t n = w.size();
  if (n == 0) throw Error("empty word");
  if (q < 1) throw Error("invalid step");
  if (q >= n) throw Error("step too large");
  if (r < 1) throw Error("repetition count must be positive");
  if (!shift_matches(w, q)) throw Error("invalid step");
  return periodic_segment(w, q, 1, static_cast<long long>(n + (r - 1) * q));
}

}  // namespace symdyn
