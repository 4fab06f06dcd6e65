#pragma once

#include <optional>
#include <vector>

#include "symdyn/oracle.hpp"

namespace symdyn {

// z = p w^{q*r} s with 1 <= |p|, |s| <= q.
struct ExitRepresentation {
  std::size_t q = 0;
  Word p;
  std::size_t r = 0;
  Word s;
  bool canonical = false;

  bool operator==(const ExitRepresentation& o) const {
    return q == o.q && p == o.p && r == o.r && s == o.s;
  }
};

struct ExitWord {
  Word z;
  ExitRepresentation rep;
};

// Items 2 and 3 of the exit-word definition, plus the length bounds on p and s.
bool is_exit_representation(const Word& w, std::size_t q, const Word& p, std::size_t r,
                            const Word& s);

// Every (p, r, s) with z = p w^{q*r} s satisfying the exit-word conditions,
// ordered by |p|. Requires EqValid1 for (w, q) with q < |w|.
std::vector<ExitRepresentation> decompose(const Word& z, const Word& w, std::size_t q);

// Representations over every shift-matching q; those using the minimal step
// of w are marked canonical. Requires z in the language.
std::vector<ExitRepresentation> representations(const Word& z, const Word& w,
                                                 const LanguageOracle& oracle);

struct ExitEnumeration {
  Word w;
  std::size_t q = 0;
  std::vector<ExitWord> words;      // sorted by z; canonical rep has maximal r, then minimal |p|
  bool partial = false;             // some candidate was longer than the horizon
  std::size_t entries = 0;          // admissible (|p|, first letter) pairs
  std::size_t exits = 0;            // admissible (|s|, last letter) pairs
  bool r_values_ok = true;          // each (p, s) admits r in {r0, r0+1} only
  std::optional<std::size_t> bound; // 2K^2 when K is supplied
  bool within_bound = true;
};

// All exit words of w with step q whose length is at most the horizon.
// Requires EqValid1 for (w, q), q < |w| and w^{q*2} in the language; the
// usual q <= |w|/2 bound is not enforced.
ExitEnumeration enumerate_exit_words(const Word& w, std::size_t q, const LanguageOracle& oracle,
                                     std::optional<long long> K = std::nullopt);

enum class OccurrenceCase { suffix_of_power, inside_exit_word };

struct OccurrenceClass {
  OccurrenceCase kind = OccurrenceCase::suffix_of_power;
  std::size_t j = 0;
  std::size_t r = 0;             // suffix case: ceil((j-1)/q)+1
  std::optional<std::size_t> k;  // start of the exit word
  std::optional<ExitWord> exit;
  std::size_t slot = 0;          // which of the r copies of w sits at j
};

// Classifies the occurrence of w at 1-based position j of x; q should be the
// minimal step of w. Throws HorizonExceeded when the periodic run reaches the
// end of x.
OccurrenceClass classify_occurrence(std::span<const Symbol> x, const Word& w, std::size_t j,
                                    std::size_t q);

struct ExitOccurrence {
  std::size_t start = 0;  // 1-based
  ExitWord exit;
};

struct OverlapRecord {
  ExitOccurrence first, second;
  long long overlap = 0;          // i + |z| - i'
  std::size_t w_count = 0;        // |x[i .. i'+|z'|-1]|_w
  bool start_bound_ok = false;    // i' >= i + |z| - n
  bool count_bound_ok = false;    // w_count >= r + r'
};

struct OverlapReport {
  std::vector<ExitOccurrence> exits;
  std::vector<OverlapRecord> pairs;
  bool all_ok = true;
};

// Consecutive exit-word occurrences of w in x and the overlap bounds between them.
OverlapReport check_overlap_bound(std::span<const Symbol> x, const Word& w, std::size_t q);

}  // namespace symdyn
