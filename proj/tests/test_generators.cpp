#include <doctest.h>

#include "oracles.hpp"
#include "symdyn/error.hpp"
#include "symdyn/generators.hpp"
#include "symdyn/language.hpp"

using namespace symdyn;

namespace {

std::string render(const SequencePrefix& x) { return x.alphabet.render(x.word()); }

IetSpec rotation_iet() {
  IetSpec s;
  s.lambda = {Rational(2, 3), Rational(1, 3)};
  s.pi = {2, 1};
  s.z = Rational(0);
  return s;
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-2") == Rational(-2));
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x/2"), Error);
  CHECK_THROWS_AS(Rational(INT64_MAX, 1) + Rational(1), Error);
}

TEST_CASE("square-root convergents") {
  CHECK(sqrt_convergent(2, 12) == Rational(17, 12));
  CHECK(sqrt_convergent(3, 100) == Rational(97, 56));
  CHECK_THROWS_AS(sqrt_convergent(9, 10), Error);
}

TEST_CASE("IET fixtures are built from square-root convergents") {
  const auto s3 = read_iet_spec(SYMDYN_TEST_DATA "/iet3.json");
  CHECK(s3.lambda[0] == Rational(2) - sqrt_convergent(3, 1000000));
  CHECK(s3.lambda[1] == sqrt_convergent(2, 1000000) - Rational(1));
  const auto s4 = read_iet_spec(SYMDYN_TEST_DATA "/iet4.json");
  CHECK(s4.lambda[0] == Rational(2) - sqrt_convergent(3, 100000));
  CHECK(s4.lambda[1] == sqrt_convergent(5, 100000) - Rational(2));
  CHECK(s4.lambda[2] == Rational(3) - sqrt_convergent(7, 100000));
}

TEST_CASE("two-interval exchange is the rotation by one third") {
  const auto orbit = iet_encode(rotation_iet(), 6);
  CHECK(render(orbit.prefix) == "112112");
  CHECK(iet_reverse_consistent(rotation_iet(), orbit));
}

TEST_CASE("IET input validation and the Keane diagnostic") {
  auto bad = rotation_iet();
  bad.lambda = {Rational(1, 2), Rational(1, 3)};
  CHECK_THROWS_AS(iet_encode(bad, 5), Error);
  bad = rotation_iet();
  bad.pi = {1, 1};
  CHECK_THROWS_AS(iet_encode(bad, 5), Error);
  auto hit = rotation_iet();
  hit.z = Rational(2, 3);
  const auto orbit = iet_encode(hit, 3);
  REQUIRE_FALSE(orbit.keane_hits.empty());
  CHECK(orbit.keane_hits.front().step == 0);
  const auto s3 = read_iet_spec(SYMDYN_TEST_DATA "/iet3.json");
  const auto clean = iet_encode(s3, 20000);
  CHECK(clean.keane_hits.empty());
  CHECK(iet_reverse_consistent(s3, clean));
}

TEST_CASE("three-interval exchange has complexity 2n+1") {
  const auto s3 = read_iet_spec(SYMDYN_TEST_DATA "/iet3.json");
  const auto L = oracle_from_prefix(iet_encode(s3, 100000).prefix, 30);
  for (std::size_t n = 1; n <= 30; ++n) CHECK(L.complexity(n) == 2 * n + 1);
}

TEST_CASE("substitution fixed points") {
  CHECK(render(substitution_fixed_point(SubstitutionSpec::fibonacci(), 13)) == "abaababaabaab");
  CHECK(render(substitution_fixed_point(SubstitutionSpec::thue_morse(), 8)) == "01101001");
  CHECK(render(substitution_fixed_point(SubstitutionSpec::fibonacci(), 500)) ==
        oracle::fibonacci(500));
  CHECK(render(substitution_fixed_point(SubstitutionSpec::thue_morse(), 512)) ==
        oracle::thue_morse(512));
  SubstitutionSpec constant;
  constant.alphabet = Alphabet::from_chars("a");
  constant.rules = {Word{0, 0}};
  CHECK(render(substitution_fixed_point(constant, 4)) == "aaaa");
  SubstitutionSpec stuck = SubstitutionSpec::fibonacci();
  stuck.seed = 1;
  CHECK_THROWS_WITH_AS(substitution_fixed_point(stuck, 4), "non-prolongable seed", Error);
}

TEST_CASE("rotation codings") {
  CHECK(render(rotation_coding(Rational(1, 3), 6)) == "001001");
  CHECK(render(rotation_coding(Rational(1, 2), 4)) == "0101");
  // With alpha = 8/13 the coding is 0 followed by the Fibonacci word, a -> 1, b -> 0.
  const auto r = render(rotation_coding(Rational(8, 13), 13));
  std::string f = oracle::fibonacci(12);
  for (auto& c : f) c = c == 'a' ? '1' : '0';
  CHECK(r == "0" + f);
  CHECK_THROWS_AS(rotation_coding(Rational(1), 4), Error);
}

TEST_CASE("sequence and specification files") {
  const auto x = parse_sequence_text("alphabet: a,b\na b a\n a b\n", "inline");
  CHECK(render(x) == "abaab");
  CHECK(parse_sequence_text(format_sequence(x), "again").letters == x.letters);
  CHECK_THROWS_AS(parse_sequence_text("a b a\n", "bad"), Error);
  CHECK_THROWS_AS(parse_sequence_text("alphabet: a,b\na c\n", "bad"), Error);
  CHECK_THROWS_AS(read_sequence_file("/nonexistent/file.txt"), Error);
  const auto s = parse_substitution_spec(
      R"({"alphabet":["a","b"],"rules":{"a":["a","b"],"b":["a"]},"seed":"a"})");
  CHECK(render(substitution_fixed_point(s, 8)) == "abaababa");
  CHECK_THROWS_AS(parse_iet_spec("{"), Error);
  CHECK_THROWS_AS(parse_iet_spec(R"({"d":3,"lambda":["1/2","1/2"],"pi":[2,1],"z":"0"})"), Error);
}
