#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ffm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) v.push_back(line);
  return v;
}

}  // namespace

TEST_CASE("parse_g_range") {
  CHECK(ffm::cli::parse_g_range("3").lo == 3);
  CHECK(ffm::cli::parse_g_range("3").hi == 3);
  CHECK(ffm::cli::parse_g_range("1:4").hi == 4);
  CHECK_THROWS_AS(ffm::cli::parse_g_range("4:1"), std::invalid_argument);
  CHECK_THROWS_AS(ffm::cli::parse_g_range("0"), std::invalid_argument);
  CHECK_THROWS_AS(ffm::cli::parse_g_range("a"), std::invalid_argument);
  CHECK(ffm::cli::within_default_range(3, 4));
  CHECK_FALSE(ffm::cli::within_default_range(3, 5));
  CHECK_FALSE(ffm::cli::within_default_range(5, 3));
}

TEST_CASE("verify-identity") {
  const Run r = run({"verify-identity", "--max-order", "20"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["epsilon"] == "-1");
  CHECK(j["pairs"].size() == 441);

  const Run r0 = run({"verify-identity", "--max-order", "0"});
  CHECK(r0.code == 0);
  CHECK(nlohmann::json::parse(r0.out)["pairs"].size() == 1);

  const Run csv = run({"verify-identity", "--max-order", "5", "--format", "csv"});
  CHECK(csv.code == 0);
  const auto rows = lines(csv.out);
  REQUIRE(rows.size() == 37);
  CHECK(rows[0] == "n1,n2,c_tilde,b_sp,match");
  CHECK(rows[1] == "0,0,1/24,-1/24,true");
}

TEST_CASE("selftest exit codes") {
  const Run ok = run({"selftest", "--max-g", "1", "--workers", "2"});
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)["passed"] == true);

  const Run q5 = run({"selftest", "--q", "5", "--max-g", "2", "--format", "table"});
  CHECK(q5.code == 0);
  CHECK(q5.out.find("FAIL") == std::string::npos);

  const Run bad = run({"selftest", "--max-g", "1", "--inject-corruption"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("check_functional_equation") != std::string::npos);
  CHECK(bad.err.find("combination_identity") == std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"moment", "--q", "4", "--g", "1"}).code == 2);
  CHECK(run({"moment", "--q", "3", "--g", "5"}).code == 2);
  CHECK(run({"moment", "--q", "3", "--g", "1:2"}).code == 2);
  CHECK(run({"moment", "--q", "3"}).code == 2);
  CHECK(run({"twisted", "--q", "3", "--g", "1", "--l", "1x"}).code == 2);
  CHECK(run({"twisted", "--q", "3", "--g", "1", "--l", "1000"}).code == 2);
  CHECK(run({"twisted", "--q", "3", "--g", "1", "--l", "20"}).code == 2);
  CHECK(run({"moment", "--g", "1", "--format", "xml"}).code == 2);
  CHECK(run({"weil", "--g", "1", "--max-deg", "3"}).code == 2);
  CHECK(run({"sweep", "--g", "3:1"}).code == 2);
}

TEST_CASE("moment and twisted reports") {
  const Run m = run({"moment", "--q", "3", "--g", "2", "--mu", "0", "--nu", "0", "--format", "csv"});
  CHECK(m.code == 0);
  const auto rows = lines(m.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "q,g,orders,exact_rat,exact_surd,main_term,residual_rat,residual_surd,normalized_residual");
  CHECK(rows[1].rfind("3,2,", 0) == 0);

  const Run t = run({"twisted", "--q", "3", "--g", "2", "--k", "1", "--l", "10"});
  CHECK(t.code == 0);
  const auto j = nlohmann::json::parse(t.out);
  CHECK(j["g"] == 2);
  CHECK(j["extras"]["per_prime_agrees"] == "true");

  const Run table = run({"moment", "--g", "1", "--format", "table"});
  CHECK(table.code == 0);
  CHECK(table.out.find("√3⁻¹") != std::string::npos);
}

TEST_CASE("sweep emits one row per genus") {
  const Run s = run({"sweep", "--q", "3", "--g", "1:4", "--mu", "1", "--nu", "1", "--format", "csv"});
  CHECK(s.code == 0);
  const auto rows = lines(s.out);
  REQUIRE(rows.size() == 5);
  for (int g = 1; g <= 4; ++g) CHECK(rows[g].rfind("3," + std::to_string(g) + ",", 0) == 0);
}

TEST_CASE("output is identical for any worker count") {
  const std::vector<std::vector<std::string>> cases{
      {"sweep", "--g", "1:3", "--mu", "2", "--nu", "1"},
      {"sweep", "--g", "1:3", "--k", "2", "--l", "11", "--format", "csv"},
      {"weil", "--g", "1:3"},
      {"lpoly", "--g", "2", "--format", "csv"},
  };
  for (const auto& base : cases) {
    std::string first;
    for (const char* w : {"1", "3", "8"}) {
      auto args = base;
      args.insert(args.end(), {"--workers", w});
      const Run r = run(args);
      REQUIRE(r.code == 0);
      if (first.empty())
        first = r.out;
      else
        CHECK(r.out == first);
    }
  }
}

TEST_CASE("cache directory is honored") {
  const auto dir = std::filesystem::temp_directory_path() / "ffmoment_cli_cache_test";
  std::filesystem::remove_all(dir);
  const Run a = run({"moment", "--g", "2", "--cache-dir", dir.string(), "--verbose"});
  CHECK(a.code == 0);
  CHECK(a.err.find("disk_hits=0") != std::string::npos);
  CHECK(a.err.find("computed=0") == std::string::npos);
  CHECK(std::filesystem::exists(dir / "irreducibles_q3_n5.txt"));
  const Run b = run({"moment", "--g", "2", "--cache-dir", dir.string(), "--verbose"});
  CHECK(b.code == 0);
  CHECK(b.err.find("computed=0") != std::string::npos);
  CHECK(b.out == a.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "ffmoment_cli_out_test.json";
  const Run r = run({"weil", "--g", "1", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["scanned"] == 9);
  std::filesystem::remove(path);
}
