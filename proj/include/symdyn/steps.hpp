#pragma once

#include <optional>
#include <vector>

#include "symdyn/oracle.hpp"

namespace symdyn {

enum class StepKind { shift_match_only, language_valid };

struct StepCertificate {
  Word word;
  std::size_t q = 0;
  StepKind kind = StepKind::shift_match_only;
};

// q with 1 <= q <= n/2, w[q+1..n] = w[1..n-q] and w^{q*2} in the language,
// ascending. Requires horizon >= n + floor(n/2).
std::vector<StepCertificate> valid_steps(const Word& w, const LanguageOracle& oracle);

// Every shift-matching q <= n/2, tagged with whether w^{q*2} is a factor.
std::vector<StepCertificate> step_diagnostics(const Word& w, const LanguageOracle& oracle);

// Least valid step; it divides every valid step.
std::optional<std::size_t> minimal_step(const Word& w, const LanguageOracle& oracle);

}  // namespace symdyn
