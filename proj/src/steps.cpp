#include "symdyn/steps.hpp"

#include <stdexcept>

#include "symdyn/error.hpp"

namespace symdyn {

std::vector<StepCertificate> step_diagnostics(const Word& w, const LanguageOracle& oracle) {
  if (w.empty()) throw Error("empty word");
  oracle.check_alphabet(w);
  const std::size_t n = w.size();
  if (oracle.horizon() < n + n / 2)
    throw HorizonExceeded("step query for length " + std::to_string(n), n + n / 2);
  std::vector<StepCertificate> out;
  for (std::size_t q = 1; 2 * q <= n; ++q) {
    if (!shift_matches(w, q)) continue;
    const bool in_language = oracle.contains(power(w, q, 2));
    out.push_back({w, q, in_language ? StepKind::language_valid : StepKind::shift_match_only});
  }
  return out;
}

std::vector<StepCertificate> valid_steps(const Word& w, const LanguageOracle& oracle) {
  std::vector<StepCertificate> out;
  for (auto& c : step_diagnostics(w, oracle))
    if (c.kind == StepKind::language_valid) out.push_back(std::move(c));
  return out;
}

std::optional<std::size_t> minimal_step(const Word& w, const LanguageOracle& oracle) {
  const auto steps = valid_steps(w, oracle);
  if (steps.empty()) return std::nullopt;
  const std::size_t q0 = steps.front().q;
  for (const auto& c : steps)
    if (c.q % q0 != 0) throw std::logic_error("minimal step does not divide a valid step");
  return q0;
}

}  // namespace symdyn
