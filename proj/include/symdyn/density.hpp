#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdyn/language.hpp"

namespace symdyn {

constexpr double kDefaultThetaTol = 0.05;

// 1 iff w starts at some k with (j-1)(K+1)n < k <= j(K+1)n, n = |w|.
bool block_indicator(const Word& w, std::span<const Symbol> x, std::size_t j, long long K);

struct BlockDensity {
  Word w;
  long long K = 0;
  std::size_t block = 0;          // (K+1)n
  std::size_t N_max = 0;          // complete blocks available
  std::vector<std::size_t> S;     // S[N-1] = S_N
  std::vector<double> D;          // D[N-1] = S_N / N
  double D_est = 0;               // max of D_N over [ceil(N_max/2), N_max]
};

BlockDensity density_estimate(const Word& w, std::span<const Symbol> x, long long K);

struct FloorReport {
  std::size_t n = 0;
  Side side = Side::left;
  long long K = 0;
  double theta_tol = kDefaultThetaTol;
  std::vector<std::pair<Word, double>> estimates;
  Word best;
  double best_density = 0;
  double floor = 0;               // 1/K - theta_tol
  bool pass = false;
};

// Maximum block density over the s-special words of length n. Requires a
// constant complexity difference K >= 1 whose tail contains n.
FloorReport special_density_floor(const LanguageOracle& oracle, std::span<const Symbol> x,
                                  std::size_t n, Side side, long long K,
                                  double theta_tol = kDefaultThetaTol);

struct WindowCheck {
  std::size_t windows = 0;
  bool pass = true;
  std::optional<std::size_t> first_failure;  // 1-based window start
};

// Every window x[j .. j+(K+2)n-2] contains an s-special factor of length n.
WindowCheck special_window_check(const LanguageOracle& oracle, std::span<const Symbol> x,
                                 std::size_t n, Side side, long long K);

struct InequalityCase {
  std::string name;
  bool hypothesis_ok = false;
  std::string witness;            // why the hypothesis failed
  double lhs = 0, rhs = 0, margin = 0;
  bool pass = false;
  std::string note;
};

// D(w') >= |w'| / (2|w|) D(w).
InequalityCase subword_case(std::span<const Symbol> x, const Word& w, const Word& w_sub, long long K);

// max_i D(z_i) >= D(w) / (p (1 + 3n/m)); all z_i share length m. The
// hypothesis is checked on every pair of consecutive occurrences of w in x.
InequalityCase loop_words_case(std::span<const Symbol> x, const Word& w,
                               const std::vector<Word>& family, long long K);

// D(w) >= D(z)/(3K+9) for every exit word z, and max_z D(z) >= D(w)/((2K+3)|X|).
std::vector<InequalityCase> exit_density_cases(std::span<const Symbol> x, const Word& w,
                                               const std::vector<Word>& exits, long long K);

struct ColorEstimate {
  std::vector<double> estimates;  // per candidate
  std::size_t color = 0;          // 1-based candidate index, 0 if none
  bool ambiguous = false;
  double theta = 0;
};

// theta defaults to 1/(4K).
ColorEstimate color_estimate(const std::vector<Word>& ladder,
                             const std::vector<std::span<const Symbol>>& candidates, long long K,
                             std::optional<double> theta = std::nullopt);

}  // namespace symdyn
