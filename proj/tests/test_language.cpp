#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symdyn/error.hpp"
#include "symdyn/generators.hpp"
#include "symdyn/language.hpp"

using namespace symdyn;

namespace {

const Alphabet kAB = Alphabet::from_chars("ab");

LanguageOracle fib(std::size_t H) { return substitution_oracle(SubstitutionSpec::fibonacci(), H); }

std::vector<std::string> render_all(const Alphabet& A, const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(A.render(w));
  return out;
}

}  // namespace

TEST_CASE("factor sets match a string scan of the Fibonacci word") {
  const auto L = fib(20);
  const auto x = oracle::fibonacci(64 * 20);
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto expect = oracle::factors(x, n);
    CHECK(render_all(kAB, L.factors(n)) == std::vector<std::string>(expect.begin(), expect.end()));
    CHECK(L.complexity(n) == n + 1);
  }
}

TEST_CASE("extensions of a in the Fibonacci language") {
  const auto L = fib(10);
  const auto rec = extensions(L, kAB.parse("a"));
  CHECK(rec.left == std::vector<Symbol>{0, 1});
  CHECK(rec.right == std::vector<Symbol>{0, 1});
  const std::vector<std::pair<Symbol, Symbol>> both{{0, 1}, {1, 0}, {1, 1}};
  CHECK(rec.both == both);
  CHECK(rec.multiplicity == 0);
  CHECK(is_dendric(rec));
  CHECK_THROWS_WITH_AS(extensions(L, kAB.parse("bb")), "not a factor", Error);
  CHECK_THROWS_AS(extensions(L, kAB.parse("abaababaa")), HorizonExceeded);
}

TEST_CASE("special words and regularity") {
  const auto L = fib(12);
  CHECK(render_all(kAB, special_words(L, 3, SpecialKind::left)) == std::vector<std::string>{"aba"});
  CHECK(render_all(kAB, special_words(L, 3, SpecialKind::right)) == std::vector<std::string>{"aba"});
  CHECK(render_all(kAB, special_words(L, 3, SpecialKind::bi)) == std::vector<std::string>{"aba"});
  CHECK(special_words(L, 4, SpecialKind::bi).empty());
  const auto v = is_regular_bispecial(L, kAB.parse("a"));
  CHECK(v.regular);
  CHECK(v.a_hat == Symbol{1});
  CHECK(v.b_hat == Symbol{1});
  CHECK_THROWS_WITH_AS(is_regular_bispecial(L, kAB.parse("aa")), "not bispecial", Error);
}

TEST_CASE("a singly punctured language is dendric at 0^n") {
  const auto A = Alphabet::from_chars("01");
  const auto L = LanguageOracle::from_predicate(
      A, 10, [](const Word& w) { return std::count(w.begin(), w.end(), Symbol{1}) <= 1; });
  const auto rec = extensions(L, A.parse("000"));
  CHECK(rec.both.size() == 3);
  CHECK(extension_graph(rec).is_tree());
  CHECK(rec.multiplicity == 0);
}

TEST_CASE("Fibonacci growth and RBC") {
  const auto L = fib(40);
  const auto g = growth_profile(L);
  CHECK(g.constant_tail);
  CHECK(g.K == 1);
  CHECK(g.N0 == 1);
  const auto r = check_rbc(L, 1);
  CHECK(r.holds);
  CHECK(r.max_length == 37);
  CHECK_FALSE(periodicity_check(L).periodic);
}

TEST_CASE("Thue-Morse violates RBC from length 2") {
  const auto L = substitution_oracle(SubstitutionSpec::thue_morse(), 20);
  const auto r = check_rbc(L, 1);
  REQUIRE_FALSE(r.holds);
  // Reference values from a direct string computation.
  std::vector<std::string> got;
  for (const auto& v : r.violations) got.push_back(L.alphabet().render(v.word));
  const std::vector<std::string> expect{"01",     "10",     "010",          "101",
                                        "0110",   "1001",   "011001",       "100110",
                                        "01101001", "10010110", "011010010110", "100101101001",
                                        "0110100110010110", "1001011001101001"};
  CHECK(got == expect);
  CHECK(r.n0_estimate == 17);
}

TEST_CASE("periodic language") {
  SequencePrefix x{Alphabet::from_chars("01"), {}, "periodic"};
  for (int i = 0; i < 200; ++i) x.letters.push_back(i % 2);
  const auto L = oracle_from_prefix(x, 20);
  const auto v = periodicity_check(L);
  CHECK(v.periodic);
  CHECK(v.n0 == 2);
  CHECK(v.period == 2);
  const auto g = growth_profile(L);
  CHECK(g.constant_tail);
  CHECK(g.K == 0);
}

TEST_CASE("special extension map") {
  const auto L = fib(12);
  const auto m = special_extension_map(L, Side::left, 1, 3);
  REQUIRE(m.failures.empty());
  CHECK(kAB.render(m.mapping.at(kAB.parse("a"))) == "aba");
  const auto mr = special_extension_map(L, Side::right, 1, 3);
  CHECK(kAB.render(mr.mapping.at(kAB.parse("a"))) == "aba");
  const auto tm = substitution_oracle(SubstitutionSpec::thue_morse(), 12);
  CHECK_THROWS_WITH_AS(special_extension_map(tm, Side::left, 1, 4), "RBC not established", Error);
}

TEST_CASE("extension sets stabilise along special chains") {
  const auto L = fib(30);
  for (Side s : {Side::left, Side::right})
    for (const auto& rec : extension_stabilization(L, s, 1)) {
      REQUIRE(rec.stable_from.has_value());
      CHECK(rec.final_extensions.size() == 2);
    }
}

TEST_CASE("property: prefix closure of specials and the special sums on random prefixes") {
  std::mt19937 rng(17);
  const auto A = Alphabet::from_chars("012");
  for (int trial = 0; trial < 30; ++trial) {
    SequencePrefix x{A, {}, "random"};
    const int k = 2 + trial % 2;
    for (int i = 0; i < 400; ++i) x.letters.push_back(static_cast<Symbol>(rng() % k));
    const auto L = oracle_from_prefix(x, 8);
    CHECK_NOTHROW(growth_profile(L));
    for (std::size_t n = 2; n + 2 <= L.horizon(); ++n) {
      for (const auto& w : special_words(L, n, SpecialKind::left))
        CHECK(extensions(L, w.sub(1, n - 1)).left_special());
      for (const auto& w : special_words(L, n, SpecialKind::right))
        CHECK(extensions(L, w.sub(2, n)).right_special());
    }
    // Extendability of the trimmed sets.
    for (std::size_t n = 1; n + 2 <= L.horizon(); ++n)
      for (const auto& w : L.factors(n)) {
        const auto rec = extensions(L, w);
        CHECK_FALSE(rec.both.empty());
      }
  }
}

TEST_CASE("dendric bispecials coincide with regular ones on dendric languages") {
  const auto L = fib(30);
  for (std::size_t n = 1; n + 3 <= L.horizon(); ++n)
    for (const auto& w : special_words(L, n, SpecialKind::bi)) {
      CHECK(is_dendric(extensions(L, w)));
      CHECK(is_regular_bispecial(L, w).regular);
    }
}

TEST_CASE("return gaps are finite for every factor of a recurrent prefix") {
  const auto x = substitution_fixed_point(SubstitutionSpec::fibonacci(), 2000);
  for (const auto& s : return_gaps(x.view(), 8)) {
    CHECK(s.occurrences >= 2);
    CHECK(s.max_gap > 0);
  }
}

TEST_CASE("oracle rejects short prefixes") {
  const auto x = substitution_fixed_point(SubstitutionSpec::fibonacci(), 13);
  CHECK_THROWS_AS(oracle_from_prefix(x, 4), Error);
  const auto L = oracle_from_prefix(x, 3);
  CHECK(render_all(kAB, L.factors(3)) == std::vector<std::string>{"aab", "aba", "baa", "bab"});
}
