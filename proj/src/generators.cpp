#include "symdyn/generators.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symdyn/error.hpp"

namespace symdyn {

using nlohmann::json;

void IetSpec::validate() const {
  const std::size_t n = lambda.size();
  if (n < 2) throw Error("an IET needs at least two intervals");
  if (pi.size() != n) throw Error("permutation length differs from the number of intervals");
  std::vector<int> seen(n + 1, 0);
  for (int p : pi) {
    if (p < 1 || static_cast<std::size_t>(p) > n || seen[p]++) throw Error("invalid permutation");
  }
  Rational total(0);
  for (const auto& l : lambda) {
    if (l <= Rational(0)) throw Error("interval lengths must be positive");
    total = total + l;
  }
  if (total != Rational(1)) throw Error("interval lengths must sum to 1, got " + total.str());
  if (z < Rational(0) || z >= Rational(1)) throw Error("starting point must lie in [0,1)");
}

IntervalExchange::IntervalExchange(const IetSpec& spec) {
  spec.validate();
  const std::size_t d = spec.d();
  for (const auto& l : spec.lambda) den_ = lcm_checked(den_, l.den());
  den_ = lcm_checked(den_, spec.z.den());
  std::vector<std::int64_t> len(d);
  for (std::size_t i = 0; i < d; ++i) len[i] = scale(spec.lambda[i]);
  start_.assign(d, 0);
  for (std::size_t i = 1; i < d; ++i) start_[i] = start_[i - 1] + len[i - 1];
  by_position_.assign(d, 0);
  for (std::size_t i = 0; i < d; ++i) by_position_[static_cast<std::size_t>(spec.pi[i] - 1)] = i;
  image_start_.assign(d, 0);
  std::int64_t acc = 0;
  for (std::size_t p = 0; p < d; ++p) {
    image_start_[by_position_[p]] = acc;
    if (p > 0) image_cuts_.push_back(acc);
    acc += len[by_position_[p]];
  }
  cuts_.assign(start_.begin() + 1, start_.end());
}

std::int64_t IntervalExchange::scale(const Rational& r) const {
  if (den_ % r.den() != 0) throw Error("point not on the lattice of the exchange");
  const __int128 v = static_cast<__int128>(r.num()) * (den_ / r.den());
  return static_cast<std::int64_t>(v);
}

std::size_t IntervalExchange::interval_of(std::int64_t v) const {
  auto it = std::upper_bound(start_.begin(), start_.end(), v);
  return static_cast<std::size_t>(it - start_.begin()) - 1;
}

std::size_t IntervalExchange::image_interval_of(std::int64_t v) const {
  const std::size_t p = static_cast<std::size_t>(
      std::upper_bound(image_cuts_.begin(), image_cuts_.end(), v) - image_cuts_.begin());
  return by_position_[p];
}

std::int64_t IntervalExchange::forward(std::int64_t v) const {
  const std::size_t i = interval_of(v);
  return v - start_[i] + image_start_[i];
}

std::int64_t IntervalExchange::backward(std::int64_t v) const {
  const std::size_t i = image_interval_of(v);
  return v - image_start_[i] + start_[i];
}

namespace {

Alphabet numbered_alphabet(std::size_t d) {
  std::vector<std::string> tokens;
  for (std::size_t i = 1; i <= d; ++i) tokens.push_back(std::to_string(i));
  return Alphabet(std::move(tokens));
}

constexpr std::size_t kMaxKeaneHits = 64;

}  // namespace

IetOrbit iet_encode(const IetSpec& spec, std::size_t N) {
  if (N < 1) throw Error("prefix length must be positive");
  const IntervalExchange f(spec);
  IetOrbit out;
  out.prefix.alphabet = numbered_alphabet(spec.d());
  out.prefix.source = "iet";
  out.prefix.letters.reserve(N);
  std::int64_t v = f.scale(spec.z);
  for (std::size_t k = 0; k < N; ++k) {
    if (k > 0) v = f.forward(v);
    out.prefix.letters.push_back(static_cast<Symbol>(f.interval_of(v)));
    if (out.keane_hits.size() < kMaxKeaneHits) {
      if (std::binary_search(f.discontinuities().begin(), f.discontinuities().end(), v))
        out.keane_hits.push_back({k, f.unscale(v).str(), false});
      else if (std::binary_search(f.discontinuity_images().begin(),
                                  f.discontinuity_images().end(), v))
        out.keane_hits.push_back({k, f.unscale(v).str(), true});
    }
  }
  out.last_point = f.unscale(v);
  return out;
}

bool iet_reverse_consistent(const IetSpec& spec, const IetOrbit& orbit) {
  const IntervalExchange f(spec);
  std::int64_t v = f.scale(orbit.last_point);
  const auto& x = orbit.prefix.letters;
  for (std::size_t k = x.size(); k-- > 0;) {
    if (f.interval_of(v) != x[k]) return false;
    if (k > 0) v = f.backward(v);
  }
  return v == f.scale(spec.z);
}

void SubstitutionSpec::validate() const {
  if (rules.size() != alphabet.size()) throw Error("one rule per symbol required");
  for (const auto& r : rules) {
    if (r.empty()) throw Error("erasing substitution rule");
    for (Symbol s : r)
      if (s >= alphabet.size()) throw Error("rule uses a symbol outside the alphabet");
  }
  if (seed >= alphabet.size()) throw Error("seed outside the alphabet");
  const Word& image = rules[seed];
  if (image.front() != seed || image.size() < 2) throw Error("non-prolongable seed");
}

SubstitutionSpec SubstitutionSpec::fibonacci() {
  SubstitutionSpec s;
  s.alphabet = Alphabet::from_chars("ab");
  s.rules = {Word{0, 1}, Word{0}};
  return s;
}

SubstitutionSpec SubstitutionSpec::thue_morse() {
  SubstitutionSpec s;
  s.alphabet = Alphabet::from_chars("01");
  s.rules = {Word{0, 1}, Word{1, 0}};
  return s;
}

SequencePrefix substitution_fixed_point(const SubstitutionSpec& spec, std::size_t N) {
  spec.validate();
  std::vector<Symbol> cur{spec.seed};
  while (cur.size() < N) {
    std::vector<Symbol> next;
    for (Symbol s : cur) {
      const auto& img = spec.rules[s];
      next.insert(next.end(), img.begin(), img.end());
      if (next.size() >= N) break;
    }
    cur = std::move(next);
  }
  cur.resize(N);
  return {spec.alphabet, std::move(cur), "substitution"};
}

SequencePrefix rotation_coding(const Rational& alpha, std::size_t N) {
  if (alpha <= Rational(0) || alpha >= Rational(1)) throw Error("rotation number must lie in (0,1)");
  SequencePrefix x{Alphabet::from_chars("01"), {}, "rotation"};
  const Rational threshold = Rational(1) - alpha;
  Rational t(0);
  for (std::size_t i = 0; i < N; ++i) {
    x.letters.push_back(t >= threshold ? 1 : 0);
    t = t + alpha;
    if (t >= Rational(1)) t = t - Rational(1);
  }
  return x;
}

LanguageOracle oracle_from_prefix(const SequencePrefix& x, std::size_t horizon) {
  return LanguageOracle::from_prefix(x.alphabet, x.view(), horizon, x.source);
}

LanguageOracle substitution_oracle(const SubstitutionSpec& spec, std::size_t horizon) {
  const auto x = substitution_fixed_point(spec, std::max<std::size_t>(64 * horizon, 4 * horizon));
  return oracle_from_prefix(x, horizon);
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

SequencePrefix parse_sequence_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw Error("empty sequence file");
  header = trim(header);
  const std::string tag = "alphabet:";
  if (header.rfind(tag, 0) != 0) throw Error("sequence file must start with 'alphabet:'");
  std::vector<std::string> tokens;
  std::istringstream hs(header.substr(tag.size()));
  std::string tok;
  while (std::getline(hs, tok, ',')) tokens.push_back(trim(tok));
  SequencePrefix x{Alphabet(tokens), {}, source};
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream bs(body);
  while (bs >> tok) x.letters.push_back(x.alphabet.symbol(tok));
  if (x.letters.empty()) throw Error("sequence file has no symbols");
  return x;
}

SequencePrefix read_sequence_file(const std::string& path) {
  return parse_sequence_text(read_file(path), path);
}

std::string format_sequence(const SequencePrefix& x) {
  std::string out = "alphabet: ";
  for (std::size_t i = 0; i < x.alphabet.size(); ++i) {
    if (i > 0) out += ',';
    out += x.alphabet.token(static_cast<Symbol>(i));
  }
  out += '\n';
  for (std::size_t i = 0; i < x.letters.size(); ++i) {
    out += x.alphabet.token(x.letters[i]);
    out += (i + 1) % 64 == 0 || i + 1 == x.letters.size() ? '\n' : ' ';
  }
  return out;
}

IetSpec parse_iet_spec(const std::string& json_text) {
  const json j = parse_json(json_text);
  try {
    IetSpec s;
    for (const auto& l : j.at("lambda")) s.lambda.push_back(Rational::parse(l.get<std::string>()));
    s.pi = j.at("pi").get<std::vector<int>>();
    s.z = Rational::parse(j.at("z").get<std::string>());
    if (j.contains("d") && j.at("d").get<std::size_t>() != s.lambda.size())
      throw Error("field d disagrees with the number of lengths");
    s.validate();
    return s;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed IET specification: ") + e.what());
  }
}

IetSpec read_iet_spec(const std::string& path) { return parse_iet_spec(read_file(path)); }

SubstitutionSpec parse_substitution_spec(const std::string& json_text) {
  const json j = parse_json(json_text);
  try {
    SubstitutionSpec s;
    s.alphabet = Alphabet(j.at("alphabet").get<std::vector<std::string>>());
    s.rules.resize(s.alphabet.size());
    std::vector<bool> seen(s.alphabet.size(), false);
    for (const auto& [key, image] : j.at("rules").items()) {
      const Symbol from = s.alphabet.symbol(key);
      std::vector<Symbol> letters;
      for (const auto& t : image) letters.push_back(s.alphabet.symbol(t.get<std::string>()));
      s.rules[from] = Word(std::move(letters));
      seen[from] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      throw Error("missing substitution rule");
    s.seed = s.alphabet.symbol(j.value("seed", s.alphabet.token(0)));
    s.validate();
    return s;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed substitution specification: ") + e.what());
  }
}

SubstitutionSpec read_substitution_spec(const std::string& path) {
  return parse_substitution_spec(read_file(path));
}

}  // namespace symdyn
