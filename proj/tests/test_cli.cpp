#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GAUSSMAP_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("rank-table") {
  const Run a = run("rank-table --g 3..8");
  CHECK(a.exit_code == 0);
  CHECK(count_lines(a.out) == 1 + 18);
  CHECK(a.out.find("false") == std::string::npos);

  const Run b = run("rank-table --g 5 --k 2");
  CHECK(b.exit_code == 0);
  CHECK(b.out == "g,k,rank,dim_ker,rank_formula_ok\n5,2,1,0,true\n");

  const Run j = run("rank-table --g 4 --format json");
  CHECK(j.exit_code == 0);
  CHECK(parse(j)["pass"] == true);

  const Run bad = run("rank-table --g 2..3");
  CHECK(bad.exit_code == 2);
  CHECK(parse(bad)["error"] == "UsageError");
}

TEST_CASE("genus cap from the environment") {
  CHECK(run("rank-table --g 13").exit_code == 2);
  const std::string cmd = std::string("GAUSSMAP_MAX_GENUS=13 ") + GAUSSMAP_BIN + " rank-table --g 13 --k 0";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 256> buf{};
  while (fread(buf.data(), 1, buf.size(), p) > 0) {
  }
  const int status = pclose(p);
  CHECK(WEXITSTATUS(status) == 0);
}

TEST_CASE("kernel") {
  const auto k5 = parse(run("kernel --g 5 --k 1 --method both"));
  CHECK(k5["methods_agree"] == true);
  REQUIRE(k5["basis"].size() == 1);
  CHECK(k5["basis"][0] == nlohmann::json({{"1,4", "1"}, {"2,3", "-3"}}));

  CHECK(parse(run("kernel --g 6 --k 1"))["basis"].size() == 3);
  CHECK(parse(run("kernel --g 7 --k 3 --method oracle"))["basis"].empty());
  CHECK(run("kernel --g 5").exit_code == 2);
  CHECK(run("kernel --g 5 --k 1 --method magic").exit_code == 2);
}

TEST_CASE("verify exit codes") {
  const Run t65 = run("verify --theorem T6.5 --g 5 --k 1");
  CHECK(t65.exit_code == 0);
  CHECK(parse(t65)["pass"] == true);
  CHECK(run("verify --theorem T3.1 --g 3..8").exit_code == 0);
  CHECK(run("verify --theorem R4.1 --g 3..6").exit_code == 0);
  CHECK(run("verify --theorem T6.12 --g 6 --samples 20 --seed 42").exit_code == 0);

  // The literal odd-factor closed form fails at k >= 1, so the suite falsifies.
  const Run t66 = run("verify --theorem T6.6 --g 5");
  CHECK(t66.exit_code == 1);
  CHECK(parse(t66)["pass"] == false);
  CHECK(run("verify --theorem T6.6 --g 3..4").exit_code == 0);

  const Run unknown = run("verify --theorem T9.9 --g 5");
  CHECK(unknown.exit_code == 2);
  CHECK(parse(unknown)["error"] == "UsageError");
  CHECK(run("verify --g 5").exit_code == 2);
}

TEST_CASE("rho") {
  const Run z = run("rho --g 3 --quadric basis:1,2 --pair 1 1");
  CHECK(z.exit_code == 0);
  CHECK(parse(z)["value"] == "0");

  const auto v = parse(run("rho --g 3 --quadric basis:1,2 --pair 1 3"));
  CHECK(v["value"] != "0");
  CHECK(v["value"] == parse(run("rho --g 3 --quadric basis:1,2 --pair 3 1"))["value"]);

  const Run beyond = run("rho --g 3 --quadric basis:1,2 --pair 3 3");
  CHECK(beyond.exit_code == 0);
  CHECK(parse(beyond)["error"] == "BeyondThreshold");

  const Run json_q = run("rho --g 5 --quadric '{\"1,4\":\"1\",\"2,3\":\"-3\"}' --pair 3 5");
  CHECK(json_q.exit_code == 0);
  CHECK(parse(json_q)["value"] != "0");
  CHECK(parse(run("rho --g 5 --quadric kernel:1,0 --pair 3 5"))["value"] == parse(json_q)["value"]);

  CHECK(run("rho --g 3 --quadric bogus --pair 1 1").exit_code == 2);
  CHECK(run("rho --g 3 --quadric basis:1,2 --pair 2 1").exit_code != 0);
}

TEST_CASE("scan") {
  const auto s = parse(run("scan --g 6 --samples 100 --seed 7"));
  CHECK(s["pass"] == true);
  CHECK(s["verdict_counts"]["g=6 curve 0"]["asymptotic"] == 1);
  const auto s4 = parse(run("scan --g 4 --samples 10 --seed 1"));
  CHECK(s4["pass"] == true);
}

TEST_CASE("curve input errors") {
  const Run few = run("rank-table --g 3 --curve 0,1,2");
  CHECK(few.exit_code == 2);
  CHECK(parse(few)["error"] == "TooFewBranchPoints");
  CHECK(parse(run("rank-table --g 3 --curve 1,2,3,4,5,6,7,8"))["error"] == "FirstBranchPointNotZero");
  CHECK(parse(run("rank-table --g 3 --curve 0,1,1,4,5,6,7,8"))["error"] == "DuplicateBranchPoint");
  CHECK(parse(run("rank-table --g 3 --curve 0,1,2,3,4,5,6,7,8"))["error"] == "OddBranchPointCount");
  CHECK(run("rank-table --g 3 --curve 0,1,x,3,4,5,6,7").exit_code == 2);

  const std::string path = "gaussmap_test_curve.json";
  {
    std::ofstream f(path);
    f << R"({"branch_points":["0","1/2","-3","4/7","5","6","7","8"]})";
  }
  const Run ok = run("verify --theorem T6.5 --g 3 --curve " + path);
  CHECK(ok.exit_code == 0);
  CHECK(parse(ok)["curves"][0]["branch_points"][1] == "1/2");
  std::remove(path.c_str());
}

TEST_CASE("determinism and --out") {
  const std::string args = "verify --theorem T6.12 --g 5 --samples 15 --seed 99 --random-curves 1";
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seconds") == std::string::npos);
  CHECK(run("scan --g 7 --samples 10 --seed 3").out == run("scan --g 7 --samples 10 --seed 3").out);

  const std::string path = "gaussmap_test_out.md";
  CHECK(run("verify --theorem L6.2 --g 4 --format md --out " + path).exit_code == 0);
  std::ifstream f(path);
  const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(text.find("L6.2") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("version") {
  const Run v = run("--version");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("1.0.0") != std::string::npos);
}
