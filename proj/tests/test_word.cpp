#include <doctest.h>

#include "oracles.hpp"
#include "symdyn/error.hpp"
#include "symdyn/steps.hpp"

using namespace symdyn;

TEST_CASE("occurrences are 1-based and may overlap") {
  const auto A = Alphabet::from_chars("ab");
  CHECK(occurrences(A.parse("abab"), A.parse("ab")) == std::vector<std::size_t>{1, 3});
  CHECK(occurrences(A.parse("aaa"), A.parse("aa")) == std::vector<std::size_t>{1, 2});
  CHECK(occurrences(A.parse("ab"), A.parse("abab")).empty());
  CHECK_THROWS_AS(occurrences(A.parse("ab"), Word()), Error);
}

TEST_CASE("occurrences agree with a naive scan on all short binary pairs") {
  const auto A = Alphabet::from_chars("01");
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& h : oracle::binary_words(n))
      for (std::size_t m = 1; m <= 3; ++m)
        for (const auto& w : oracle::binary_words(m)) {
          std::vector<std::size_t> expect;
          for (std::size_t i = 0; i + m <= n; ++i)
            if (h.compare(i, m, w) == 0) expect.push_back(i + 1);
          CHECK(occurrences(A.parse(h), A.parse(w)) == expect);
        }
}

TEST_CASE("power follows the periodic extension") {
  const auto A = Alphabet::from_chars("01ab");
  CHECK(A.render(power(A.parse("1111"), 3, 4)) == std::string(13, '1'));
  CHECK(A.render(power(A.parse("abab"), 2, 2)) == "ababab");
  CHECK(A.render(power(A.parse("abab"), 2, 1)) == "abab");
  CHECK_THROWS_WITH_AS(power(A.parse("ab"), 1, 2), "invalid step", Error);
  CHECK_THROWS_WITH_AS(power(A.parse("abab"), 4, 2), "step too large", Error);
  CHECK_THROWS_WITH_AS(power(A.parse("abab"), 3, 2), "invalid step", Error);
  CHECK(A.render(power(A.parse("abab"), 2, 3)) == "abababab");
}

TEST_CASE("valid steps on the full shift") {
  const auto A = Alphabet::from_chars("01a");
  const auto full = LanguageOracle::full_shift(A, 6);
  const auto steps = valid_steps(A.parse("aaaa"), full);
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].q == 1);
  CHECK(steps[1].q == 2);
  CHECK(minimal_step(A.parse("aaaa"), full) == 1);
  CHECK(valid_steps(A.parse("0101"), full).front().q == 2);
  CHECK_THROWS_AS(valid_steps(A.parse("aaaaa"), full), HorizonExceeded);
}

TEST_CASE("shift-matching steps outside the language are only diagnostics") {
  const auto A = Alphabet::from_chars("01");
  // Words with at most two 1s.
  const auto lang = LanguageOracle::from_predicate(
      A, 9, [](const Word& w) { return std::count(w.begin(), w.end(), Symbol{1}) <= 2; });
  const auto diag = step_diagnostics(A.parse("101010"), lang);
  REQUIRE(diag.size() == 1);
  CHECK(diag[0].q == 2);
  CHECK(diag[0].kind == StepKind::shift_match_only);
  CHECK(valid_steps(A.parse("101010"), lang).empty());
}

TEST_CASE("exhaustive: minimal step divides every valid step, binary full shift") {
  const auto A = Alphabet::from_chars("01");
  const auto full = LanguageOracle::full_shift(A, 18);
  for (std::size_t n = 2; n <= 12; ++n)
    for (const auto& s : oracle::binary_words(n)) {
      std::vector<std::size_t> expect;
      for (std::size_t q = 1; 2 * q <= n; ++q)
        if (oracle::has_period(s, q)) expect.push_back(q);
      const auto steps = valid_steps(A.parse(s), full);
      std::vector<std::size_t> got;
      for (const auto& c : steps) got.push_back(c.q);
      REQUIRE(got == expect);
      if (!got.empty())
        for (auto q : got) CHECK(q % got.front() == 0);
    }
}

TEST_CASE("windows of the square are distinct for the minimal step") {
  const auto A = Alphabet::from_chars("01");
  const auto full = LanguageOracle::full_shift(A, 18);
  for (std::size_t n = 2; n <= 10; ++n)
    for (const auto& s : oracle::binary_words(n)) {
      const Word w = A.parse(s);
      const auto q = minimal_step(w, full);
      if (!q) continue;
      const Word sq = power(w, *q, 2);
      std::set<Word> windows;
      for (std::size_t i = 1; i <= *q; ++i) windows.insert(sq.sub(i, i + n - 1));
      CHECK(windows.size() == *q);
    }
}
