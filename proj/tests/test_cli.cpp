#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SYMDYN_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json result(const Run& r) {
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.contains("config"));
  CHECK(j.at("tool").contains("version"));
  return j.at("result");
}

const std::string data = SYMDYN_TEST_DATA;

}  // namespace

TEST_CASE("analyze on the Fibonacci substitution") {
  const auto r = result(run("analyze --substitution " + data + "/fib.json --horizon 40"));
  CHECK(r["K"] == 1);
  CHECK(r["rbc"]["holds"] == true);
  CHECK(r["dendric"]["non_dendric"] == 0);
  CHECK(r["periodicity"]["periodic"] == false);
}

TEST_CASE("analyze on a 3-interval exchange") {
  const auto r = result(run("analyze --iet " + data + "/iet3.json --horizon 40"));
  CHECK(r["K"] == 2);
  CHECK(r["rbc"]["holds"] == true);
}

TEST_CASE("malformed input exits with 1") {
  CHECK(run("analyze --substitution " + data + "/missing.json").code == 1);
  CHECK(run("analyze --iet " + data + "/fib.json").code == 1);
  CHECK(run("analyze --seq a --iet b").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("analyze --horizon 2").code == 1);
}

TEST_CASE("rauzy at n = 4 on Fibonacci") {
  const auto r = result(run("rauzy --n 4"));
  CHECK(r["rauzy"]["vertices"] == 5);
  CHECK(r["special"]["vertices"].size() == 2);
  CHECK(r["special"]["edges"].size() == 3);
  const auto dot = run("rauzy --n 4 --format dot");
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph \"Gamma_sp_4\"") != std::string::npos);
}

TEST_CASE("evolve reports every event with its bispecial word") {
  const auto r = result(run("evolve --n 4 --n-max 12 --horizon 40"));
  REQUIRE(r["steps"].size() == 2);
  CHECK(r["steps"][0]["n_next"] == 7);
  CHECK(r["steps"][0]["events"][0]["bispecial"] == "abaaba");
  CHECK(r["steps"][1]["n_next"] == 12);
  CHECK(r["steps"][1]["events"][0]["bispecial"] == "abaababaaba");
  for (const auto& s : r["steps"]) {
    CHECK(s["matches_moves"] == true);
    CHECK(s["profile_preserved"] == true);
  }
  CHECK(run("evolve --n 4 --n-max 50 --horizon 40").code == 2);
  CHECK(run("rauzy --n 38 --horizon 40").code == 2);
}

TEST_CASE("exit words of 1111 in the sample sequence") {
  const auto r = result(run("exitwords --w 1111 --q 3 --seq " + data + "/run_of_ones.txt"));
  REQUIRE(r["exit_words"].size() == 1);
  const auto& z = r["exit_words"][0];
  CHECK(z["z"] == "01111111111111110");
  CHECK(z["canonical"]["p"] == "0");
  CHECK(z["canonical"]["s"] == "110");
  CHECK(z["canonical"]["r"] == 4);
  const auto d = result(run("exitwords --w 1111 --q 2 --z 01111111111111110 --seq " + data + "/run_of_ones.txt"));
  REQUIRE(d["decompositions"].size() == 2);
  CHECK(d["decompositions"][0]["p"] == "0");
  CHECK(d["decompositions"][0]["r"] == 6);
  CHECK(d["decompositions"][1]["p"] == "01");
  CHECK(d["decompositions"][1]["s"] == "0");
}

TEST_CASE("special density floor on Fibonacci") {
  const auto r = result(run("density --special --n 8"));
  CHECK(r["pass"] == true);
  CHECK(r["K"] == 1);
}

TEST_CASE("xi on the two-loop fixture") {
  const auto r = result(run("xi --itinerary " + data + "/xi_fixture.json"));
  CHECK(r["valid"] == true);
  CHECK(r["bound"]["xi_connected"] == true);
  CHECK(r["bound"]["bound_satisfied"] == true);
  CHECK(r["bound"]["counting_ok"] == true);
  CHECK(r["bound"]["xi_edges"].get<long long>() - r["bound"]["xi_vertices"].get<long long>() ==
        r["bound"]["K"].get<long long>() - 2 * r["bound"]["E"].get<long long>());
  CHECK(run("xi --itinerary " + data + "/fib.json").code == 1);
}

TEST_CASE("abstract move and probe") {
  const auto r = result(run("abstract --graph " + data + "/xi_fixture.json --move 0,1,1 --loop 1"));
  CHECK(r["violations"].empty());
  CHECK(r["move"]["kind"] == "twist");
  CHECK(run("abstract --graph " + data + "/xi_fixture.json --move 0,1").code == 1);
  const auto p = result(run("abstract --probe --K 3 --E 2 --max-vertices 4"));
  CHECK(p["probe"]["found"] == true);
}

TEST_CASE("output is deterministic") {
  const auto a = run("evolve --n 4 --n-max 30");
  const auto b = run("evolve --n 4 --n-max 30");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
