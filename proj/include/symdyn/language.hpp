#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symdyn/oracle.hpp"

namespace symdyn {

enum class Side { left, right };
enum class SpecialKind { left, right, bi };

const char* side_name(Side s);

struct ExtensionRecord {
  Word word;
  std::vector<Symbol> left;                         // a with aw in L
  std::vector<Symbol> right;                        // b with wb in L
  std::vector<std::pair<Symbol, Symbol>> both;      // (a, b) with awb in L
  long long multiplicity = 0;                       // |both| - |left| - |right| + 1

  bool left_special() const { return left.size() >= 2; }
  bool right_special() const { return right.size() >= 2; }
  bool bispecial() const { return left_special() && right_special(); }
};

// Requires |w| <= H-2 and w in L.
ExtensionRecord extensions(const LanguageOracle& oracle, const Word& w);

// Sorted special factors of length n; requires n <= H-2.
std::vector<Word> special_words(const LanguageOracle& oracle, std::size_t n, SpecialKind kind);

struct RegularityVerdict {
  bool regular = false;
  std::vector<Symbol> left_special_right_ext;   // b with wb left special
  std::vector<Symbol> right_special_left_ext;   // a with aw right special
  std::optional<Symbol> b_hat;
  std::optional<Symbol> a_hat;
  std::string violation;
};

// Requires w bispecial and |w| <= H-3.
RegularityVerdict is_regular_bispecial(const LanguageOracle& oracle, const Word& w);

// Bipartite graph on tagged left/right extensions with one edge per (a, b).
struct ExtensionGraph {
  std::vector<Symbol> left;
  std::vector<Symbol> right;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (left index, right index)
  bool connected() const;
  bool is_tree() const;
};

ExtensionGraph extension_graph(const ExtensionRecord& rec);
bool is_dendric(const ExtensionRecord& rec);

struct GrowthProfile {
  std::size_t horizon = 0;
  std::vector<std::size_t> p;             // p[n-1] = p(n), n = 1..H
  std::vector<long long> differences;     // p(n+1) - p(n), n = 1..H-1
  bool constant_tail = false;
  long long K = 0;
  std::size_t N0 = 0;                     // differences constant from N0 on
};

// Also checks that the left and right special sums reproduce each difference.
GrowthProfile growth_profile(const LanguageOracle& oracle);

struct RbcViolation {
  Word word;
  std::string reason;
};

struct RbcReport {
  std::size_t n_min = 1;
  std::size_t max_length = 0;             // longest bispecial length inspected
  std::size_t bispecial_count = 0;
  bool holds = true;
  std::size_t n0_estimate = 1;
  std::vector<RbcViolation> violations;
};

// All bispecial words with n_min <= |w| <= min(n_max, H-3).
RbcReport check_rbc(const LanguageOracle& oracle, std::size_t n_min,
                    std::optional<std::size_t> n_max = std::nullopt);

struct PeriodicityVerdict {
  bool periodic = false;
  std::optional<std::size_t> n0;         // least n with p(n) <= n
  std::optional<std::size_t> period;     // least period shared by all of L_H
};

PeriodicityVerdict periodicity_check(const LanguageOracle& oracle);

struct SpecialExtensionMap {
  Side side = Side::left;
  std::size_t n1 = 0, n2 = 0;
  std::map<Word, Word> mapping;
  std::vector<Word> failures;            // words with zero or several images
};

// Unique s-special extension of length n2 of each s-special word of length n1.
// Requires n1 <= n2 <= H-2 and regular bispecials on [n1, n2).
SpecialExtensionMap special_extension_map(const LanguageOracle& oracle, Side side, std::size_t n1,
                                          std::size_t n2);

struct StabilizationRecord {
  Word start;
  std::optional<std::size_t> stable_from;  // length from which Ex^s stays constant
  std::vector<Symbol> final_extensions;
};

// Follows each s-special word of length n0 through its special extensions up
// to H-2 and reports when its s-extension set stops changing.
std::vector<StabilizationRecord> extension_stabilization(const LanguageOracle& oracle, Side side,
                                                         std::size_t n0);

struct ReturnGapStats {
  Word word;
  std::size_t occurrences = 0;
  std::size_t max_gap = 0;               // largest distance between consecutive starts
};

// Finite recurrence diagnostic over every length-n factor of x.
std::vector<ReturnGapStats> return_gaps(std::span<const Symbol> x, std::size_t n);

}  // namespace symdyn
