// Runs the delpezzo binary as a subprocess and checks outputs and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "delpezzo/records.hpp"
#include "doctest.h"

using namespace delpezzo;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DELPEZZO_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (!l.empty()) out.push_back(l);
  }
  return out;
}

std::filesystem::path temp_file(const char* name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("curve") {
  const Run r = run("curve 0 0 --bound 100");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["A"] == "-2025");
  CHECK(j["B"] == "35100");
  bool p1 = false, p2 = false;
  for (const auto& p : j["points"]) {
    p1 = p1 || (p["X"] == "15" && p["Y"] == "90");
    p2 = p2 || (p["X"] == "25" && p["Y"] == "10");
  }
  CHECK(p1);
  CHECK(p2);
  CHECK(run("curve 37/5 -138/25").code == 2);
  CHECK(run("curve x y").code == 1);
  CHECK(run("curve 1").code == 1);
}

TEST_CASE("generate") {
  const Run r = run("generate 'z^5+z+1' --count 5");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls.size() == 5);
  for (const auto& l : ls) CHECK(verify_record(parse_jsonl_line(l)));

  const Run anchor = run("generate 'z^5' --count 1");
  REQUIRE(anchor.code == 0);
  const PointRecord rec = parse_jsonl_line(lines(anchor.out).at(0));
  CHECK(rec.point.x.str() == "-25875323/1560896");
  CHECK(rec.point.y.str() == "87709/13456");
  CHECK(rec.point.z.str() == "-135/116");
  CHECK(rec.provenance.seed == "15,90");

  CHECK(run("generate 'z^4+1'").code == 1);
  CHECK(run("generate 'z^5+z^3' --bound 10").code == 3);
  CHECK(run("generate 'z^5' --seed-point 2,3").code == 1);
  CHECK(run("generate 'z^5+37/5z^3-138/25z^2'").code == 2);
  // The minus branch at (15,90) has f1 = -c + 1 = 0 here, so 5 of the 6 fibers lift.
  CHECK(lines(run("generate 'z^5+z+1' --count 3 --branch both --seed-point 15,90").out).size() == 5);
  CHECK(run("generate 'z^5' --branch sideways").code == 1);
}

TEST_CASE("generate honours DP_SEARCH_BOUND") {
  const Run r = run("generate 'z^5+z^3' --count 1");
  const std::string cmd = "DP_SEARCH_BOUND=10 " + std::string(DELPEZZO_CLI) + " generate 'z^5+z^3' >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);
  CHECK(r.code == 0);
}

TEST_CASE("cache round trip is byte-for-byte") {
  const auto cache = temp_file("delpezzo_cli_cache.jsonl");
  const Run r = run("generate 'z^5+z+1' --count 4 --cache " + cache.string());
  REQUIRE(r.code == 0);
  std::ifstream in(cache);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str() == r.out);

  std::istringstream again(body.str());
  std::string rewritten;
  for (const auto& rec : read_jsonl(again)) rewritten += to_jsonl_line(rec) + "\n";
  CHECK(rewritten == body.str());

  const Run check = run("recheck " + cache.string());
  CHECK(check.code == 0);
  CHECK(nlohmann::json::parse(check.out)["verified"] == 4);

  // A tampered record is caught by a fresh process.
  std::string tampered = body.str();
  tampered.replace(tampered.find("\"z\":\"") + 5, 1, "7");
  std::ofstream(cache) << tampered;
  CHECK(run("recheck " + cache.string()).code == 4);
  std::filesystem::remove(cache);
}

TEST_CASE("verify") {
  const Run all = run("verify --all");
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  const Run t2 = run("verify --theorem2 --json");
  CHECK(t2.code == 0);
  const auto j = nlohmann::json::parse(t2.out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == 3);
  CHECK(run("verify --corollary3").code == 0);
  CHECK(run("verify --sections").code == 0);
}

TEST_CASE("torsion, polysol, special, singular") {
  const Run t = run("torsion -432");
  REQUIRE(t.code == 0);
  const auto tj = nlohmann::json::parse(t.out);
  CHECK(tj["group"] == "Z/3");
  CHECK(tj["witnesses"].size() == 2);
  CHECK(tj["witnesses"][0]["X"] == "12");
  CHECK(run("torsion 0").code == 1);

  const Run p = run("polysol 'z^5'");
  REQUIRE(p.code == 0);
  const auto pj = nlohmann::json::parse(p.out);
  CHECK(pj["z"] == nlohmann::json::array({"-135/116", "-1/29"}));

  const Run s = run("special thm2 --a 1 --b 1 --u 1");
  REQUIRE(s.code == 0);
  const PointRecord rec = parse_jsonl_line(lines(s.out).at(0));
  CHECK(rec.point.y.str() == "8183/58");
  CHECK(rec.point.z.abs().str() == "32761/232");
  CHECK(verify_record(rec));
  CHECK(run("special thm2 --a 0").code == 1);
  CHECK(run("special genus0 --a 2 --t 1/2 --u 1").code == 5);
  for (const char* which : {"cor3", "cor4", "section", "genus0"}) {
    const Run r = run(std::string("special ") + which + " --a 2 --b 3 --c 5 --d 7 --t 2 --u 1");
    CHECK(r.code == 0);
    CHECK(verify_record(parse_jsonl_line(lines(r.out).at(0))));
  }

  const Run sg = run("singular 3 --U 1");
  REQUIRE(sg.code == 0);
  CHECK(nlohmann::json::parse(sg.out)["discriminant"] == "0");
  const Run lift = run("singular 3 --U 1 --U 2 --c 1 --d 2");
  CHECK(lift.code == 0);
  CHECK(lines(lift.out).size() == 2);
}
