#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "loopsmith/loopsmith.hpp"

#include "oracle.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(LOOPSMITH_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& leaf) {
  return std::string("/tmp/loopsmith_cli_test_") + leaf;
}

}  // namespace

TEST_CASE("analyze emits the expected counts", "[cli]") {
  const RunResult r = run("analyze --group q8 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["counts"]["half"] == 3072);
  CHECK(j["counts"]["trivial_half"] == 384);
  CHECK(j["counts"]["h"] == 8);
  CHECK(j["counts"]["aut"] == 192);
  CHECK(j["counts"]["nontrivial"] == 2688);
  CHECK(j["all_pass"] == true);
}

TEST_CASE("analyze text summary mirrors the counts", "[cli]") {
  const RunResult r = run("analyze --group s3");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("|Half(L)| = 216") != std::string::npos);
  CHECK(r.out.find("nontrivial = 0") != std::string::npos);
  CHECK(r.out.find("nontriviality = absent") != std::string::npos);
}

TEST_CASE("consecutive runs are byte-identical", "[cli]") {
  const RunResult a = run("analyze --group c4_semidirect_c3 --format json");
  const RunResult b = run("analyze --group c4_semidirect_c3 --format json");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("build then check round trip", "[cli]") {
  const std::string path = temp_path("mq8.json");
  const RunResult b = run("build --group q8 --out " + path);
  REQUIRE(b.exit_code == 0);
  const auto j = loopsmith::load_json_file(path);
  CHECK(j["order"] == 16);
  CHECK(j["embedding"]["u_index"] == 8);
  const RunResult c = run("check " + path);
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("Moufang yes") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("corrupted tables exit with code 2", "[cli]") {
  const std::string path = temp_path("bad.json");
  loopsmith::write_file(path, R"({"order":2,"table":[[0,1],[1,1]]})");
  CHECK(run("check " + path).exit_code == 2);
  loopsmith::write_file(path, "not json at all");
  CHECK(run("check " + path).exit_code == 2);
  loopsmith::write_file(path, R"({"table":[[0,1,2],[1,2,0]]})");
  CHECK(run("check " + path).exit_code == 2);  // not square
  // a loop-only table is a valid check target but not a valid group input
  loopsmith::write_file(
      path, loopsmith::loop_to_json(
                loopsmith::validate_loop(oracle::nonassociative_order5()),
                "order5")
                .dump());
  CHECK(run("check " + path).exit_code == 0);
  CHECK(run("analyze --file " + path).exit_code == 2);
  std::remove(path.c_str());
  CHECK(run("analyze --group nope").exit_code == 2);
  CHECK(run("analyze --group q8 --file x.json").exit_code == 2);
  CHECK(run("analyze").exit_code == 2);
  CHECK(run("check /tmp/definitely_missing_loopsmith.json").exit_code == 2);
}

TEST_CASE("order bounds exit with code 3", "[cli]") {
  CHECK(run("analyze --group q8 --max-order 10").exit_code == 3);
  CHECK(run("analyze --group \"cyclic(20)\"").exit_code == 3);
}

TEST_CASE("environment variable mirrors --max-order", "[cli]") {
  const std::string cmd = std::string("LOOPSMITH_MAX_ORDER=10 ") +
                          LOOPSMITH_CLI_PATH + " analyze --group q8 >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("enumerate subcommand", "[cli]") {
  const RunResult h =
      run("enumerate --kind h --group c4_semidirect_c3 --format json");
  REQUIRE(h.exit_code == 0);
  const auto jh = nlohmann::ordered_json::parse(h.out);
  CHECK(jh["summary"]["total"] == 2);
  CHECK(jh["mappings"].size() == 2);

  const RunResult aut =
      run("enumerate --kind aut --as-loop --group q8 --format json");
  REQUIRE(aut.exit_code == 0);
  const auto ja = nlohmann::ordered_json::parse(aut.out);
  CHECK(ja["summary"]["total"] == 24);

  const RunResult half =
      run("enumerate --kind half --as-loop --group s3 --format json");
  REQUIRE(half.exit_code == 0);
  const auto jf = nlohmann::ordered_json::parse(half.out);
  CHECK(jf["summary"]["total"] == 12);
  CHECK(jf["summary"]["nontrivial"] == 0);
}

TEST_CASE("analyze accepts a group file", "[cli]") {
  const std::string path = temp_path("q8group.json");
  const loopsmith::FiniteGroup q8 = loopsmith::preset("q8");
  loopsmith::write_file(path, loopsmith::group_to_json(q8, "q8").dump());
  const RunResult r = run("analyze --file " + path + " --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["counts"]["half"] == 3072);
  CHECK(j["input"]["descriptor"].get<std::string>().find("file:") == 0);
  std::remove(path.c_str());
}
