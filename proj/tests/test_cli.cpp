#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(BURNSIDE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  while (const std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "burnside_cli_test";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream(path) << text;
  return path;
}

std::string data(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("burnside-check on matrix units") {
  const Run r = run("burnside-check " + data("units_gf2_n3.fam") + " --emit machine");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "TheoremInstanceVerified");
  CHECK(j["conclusion"]["data"]["algebra_dim"] == 9);
}

TEST_CASE("exit codes") {
  CHECK(run("burnside-check " + data("gf4_copy.fam")).code == 2);
  CHECK(run("triangularize " + data("units_q.fam")).code == 2);
  CHECK(run("descent-check " + data("descent_gf4.fam")).code == 0);
  CHECK(run("descent-check " + data("eigen_outside.fam")).code == 2);
  CHECK(run("chop " + data("quaternion_form.fam")).code == 3);
  CHECK(run("analyze " + data("bad.fam")).code == 4);
  CHECK(run("descent-check " + data("units_q.fam")).code == 4);
  CHECK(run("quat-decompose " + data("units_q.fam")).code == 4);
  CHECK(run("frobnicate " + data("units_q.fam")).code == 4);
  CHECK(run("analyze /nonexistent/file").code == 4);
  CHECK(run("analyze " + data("units_q.fam") + " --emit yaml").code == 4);

  const auto one = write_temp("one.quat", "quaternion\nmatrix\n1+i\n");
  CHECK(run("quat-decompose " + one.string()).code == 4);
  const auto tower = write_temp("tower.fam", "field GF(4)\nsubfield Q\nmatrix\n1\n");
  const Run bad_tower = run("analyze " + tower.string() + " --emit machine");
  CHECK(bad_tower.code == 4);
  CHECK(bad_tower.out.empty());
}

TEST_CASE("quat-decompose on the square-zero example") {
  const Run r = run("quat-decompose " + data("square_zero.quat") + " --emit machine");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["decompositions"][0]["scalar"] == "0");
  CHECK(j["decompositions"][0]["terms"].size() == 1);
}

TEST_CASE("machine reports are reproducible and verify") {
  const std::vector<std::string> commands{
      "burnside-check units_gf2_n3.fam", "burnside-check gf4_copy.fam", "descent-check descent_gf4.fam",
      "descent-check eigen_outside.fam", "triangularize units_q.fam",   "triangularize upper_gf3.fam",
      "chop gf4_copy.fam",               "chop quaternion_form.fam",    "analyze units_q.fam",
      "quat-decompose square_zero.quat", "quat-decompose random.quat",
  };
  for (const auto& c : commands) {
    const auto space = c.find(' ');
    const std::string args = c.substr(0, space) + " " + data(c.substr(space + 1)) + " --seed 3 --emit machine";
    const Run a = run(args);
    const Run b = run(args);
    CHECK_MESSAGE(a.out == b.out, c);
    CHECK_MESSAGE(!a.out.empty(), c);
    const auto path = write_temp("report.json", a.out);
    CHECK_MESSAGE(run("verify " + path.string()).code == 0, c);
  }
}

TEST_CASE("verify rejects tampering and garbage") {
  const Run r = run("burnside-check " + data("gf4_copy.fam") + " --emit machine");
  auto j = nlohmann::json::parse(r.out);
  j["verdict"] = "TheoremInstanceVerified";
  CHECK(run("verify " + write_temp("tampered.json", j.dump()).string()).code == 5);
  CHECK(run("verify " + write_temp("garbage.json", "{not json").string()).code == 4);
}

TEST_CASE("subfield flag") {
  const Run r = run("descent-check " + data("descent_gf4.fam") + " --subfield 'GF(4)' --emit machine");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["subfield"] == "GF(2^2)");
  CHECK(run("descent-check " + data("descent_gf4.fam") + " --subfield 'GF(3)'").code == 4);
}
