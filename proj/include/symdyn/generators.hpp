#pragma once

#include <string>
#include <vector>

#include "symdyn/oracle.hpp"
#include "symdyn/rational.hpp"

namespace symdyn {

struct SequencePrefix {
  Alphabet alphabet;
  std::vector<Symbol> letters;
  std::string source;

  std::size_t size() const noexcept { return letters.size(); }
  std::span<const Symbol> view() const noexcept { return letters; }
  Word word() const { return Word(letters); }
};

// Interval exchange on [0,1). Interval i (1-based) has length lambda[i-1]
// and lands at position pi[i-1] after the exchange.
struct IetSpec {
  std::vector<Rational> lambda;
  std::vector<int> pi;
  Rational z;

  std::size_t d() const noexcept { return lambda.size(); }
  void validate() const;
};

// Exact integer model of an IET on a common-denominator lattice.
class IntervalExchange {
 public:
  explicit IntervalExchange(const IetSpec& spec);

  std::int64_t denominator() const noexcept { return den_; }
  std::int64_t scale(const Rational& r) const;
  Rational unscale(std::int64_t v) const { return Rational(v, den_); }

  // 0-based index of the interval containing v, [a, b) convention.
  std::size_t interval_of(std::int64_t v) const;
  std::size_t image_interval_of(std::int64_t v) const;
  std::int64_t forward(std::int64_t v) const;
  std::int64_t backward(std::int64_t v) const;
  // Interior endpoints of the domain partition.
  const std::vector<std::int64_t>& discontinuities() const noexcept { return cuts_; }
  // Interior endpoints of the image partition.
  const std::vector<std::int64_t>& discontinuity_images() const noexcept { return image_cuts_; }

 private:
  std::int64_t den_ = 1;
  std::vector<std::int64_t> start_;        // left endpoints of I_i
  std::vector<std::int64_t> image_start_;  // left endpoint of f(I_i)
  std::vector<std::size_t> by_position_;   // interval landing at each position
  std::vector<std::int64_t> cuts_, image_cuts_;
};

struct KeaneHit {
  std::size_t step;      // orbit index, 0 for z itself
  std::string point;     // the discontinuity hit, as p/q
  bool image;            // true for an image-partition endpoint
};

struct IetOrbit {
  SequencePrefix prefix;
  std::vector<KeaneHit> keane_hits;
  Rational last_point;   // f^{N-1} z
};

// x_i = j iff f^{i-1} z lies in I_j; symbols are "1".."d".
IetOrbit iet_encode(const IetSpec& spec, std::size_t N);

// Re-encodes backwards from f^{N-1} z and compares with the forward coding.
bool iet_reverse_consistent(const IetSpec& spec, const IetOrbit& orbit);

struct SubstitutionSpec {
  Alphabet alphabet;
  std::vector<Word> rules;   // rules[s] is the image of symbol s
  Symbol seed = 0;

  void validate() const;
  static SubstitutionSpec fibonacci();   // a -> ab, b -> a
  static SubstitutionSpec thue_morse();  // 0 -> 01, 1 -> 10
};

SequencePrefix substitution_fixed_point(const SubstitutionSpec& spec, std::size_t N);

// x_i = 1 iff {(i-1) alpha} lies in [1-alpha, 1); 0 < alpha < 1.
SequencePrefix rotation_coding(const Rational& alpha, std::size_t N);

LanguageOracle oracle_from_prefix(const SequencePrefix& x, std::size_t horizon);

// Prefix of length max(64H, 4H) of the fixed point, as an oracle.
LanguageOracle substitution_oracle(const SubstitutionSpec& spec, std::size_t horizon);

// Text format: "alphabet: s1,s2,..." then whitespace-separated tokens.
SequencePrefix read_sequence_file(const std::string& path);
SequencePrefix parse_sequence_text(const std::string& text, const std::string& source);
std::string format_sequence(const SequencePrefix& x);

// {"d": 3, "lambda": ["p/q", ...], "pi": [...], "z": "p/q"}
IetSpec read_iet_spec(const std::string& path);
IetSpec parse_iet_spec(const std::string& json_text);

// {"alphabet": ["a","b"], "rules": {"a": ["a","b"], "b": ["a"]}, "seed": "a"}
SubstitutionSpec read_substitution_spec(const std::string& path);
SubstitutionSpec parse_substitution_spec(const std::string& json_text);

}  // namespace symdyn
