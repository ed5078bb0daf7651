#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

struct CliResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SEGRE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  while (fgets(buffer, sizeof buffer, pipe) != nullptr) out += buffer;
  const int status = pclose(pipe);
  REQUIRE(status != -1);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in{p, std::ios::binary};
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("count lines for the enumerable objects") {
  CHECK(run_cli("enumerate --object segre --m 3").output == "segre 3 2 27\n");
  CHECK(run_cli("enumerate --object points --m 3 --field 4").output == "points 3 4 21845\n");
  CHECK(run_cli("enumerate --object quadric --m 3").output == "quadric 3 2 135\n");
  CHECK(run_cli("enumerate --object quadric --m 4").output == "quadric 4 2 32895\n");
  CHECK(run_cli("enumerate --object hermitian --m 2").output == "hermitian 2 4 45\n");
  CHECK(run_cli("enumerate --object spread --m 3").output == "spread 3 4 85\n");
  CHECK(run_cli("enumerate --object tangents --m 2").output == "tangents 2 2 9\n");
  CHECK(run_cli("enumerate --object base-lines --m 3").output == "base-lines 3 4 4\n");
  CHECK(run_cli("enumerate --object segre --m 3 --field 4").output == "segre 3 4 125\n");
}

TEST_CASE("listing prints one record per object after the count") {
  const CliResult r = run_cli("enumerate --object basis --m 3 --list");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.output) == "basis 3 4 8");
  CHECK(contains(r.output, "\nE:1wwWwWW1\n"));
  // count line + 8 items
  int lines = 0;
  for (char c : r.output)
    if (c == '\n') ++lines;
  CHECK(lines == 9);
}

TEST_CASE("point orbit listings in display order") {
  const CliResult m3 = run_cli("orbits --m 3");
  CHECK(m3.exit_code == 0);
  CHECK(first_line(m3.output) == "sizes 12 54 108 54 27");
  CHECK(contains(m3.output, "\nO1 12 "));
  CHECK(contains(m3.output, "\nO5 27 E:00000001\n"));

  const CliResult m2 = run_cli("orbits --m 2 --object points");
  CHECK(m2.exit_code == 0);
  CHECK(first_line(m2.output) == "sizes 6 9");
  CHECK(contains(m2.output, "\nO2 9 E:0001\n"));
}

TEST_CASE("spread line orbit listing") {
  const CliResult r = run_cli("orbits --m 3 --object spread-lines");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.output) == "sizes 4 18 36 27");
  CHECK(contains(r.output, "\nL1 4 "));
  CHECK(contains(r.output, "\nL4 27 "));
}

TEST_CASE("verification runs and reports per-check lines") {
  const CliResult r = run_cli("verify --m 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "pass cardinalities"));
  CHECK(contains(r.output, "pass dichotomy"));
  CHECK(!contains(r.output, "FAIL"));
  CHECK(contains(r.output, "checks passed"));
}

TEST_CASE("verification of a single check") {
  const CliResult r = run_cli("verify --m 3 --check dichotomy");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "pass dichotomy"));
  CHECK(contains(r.output, "verification m=3: 1/1 checks passed"));
}

TEST_CASE("five-factor spot checks run through the interface") {
  const CliResult r = run_cli("verify --m 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "pass tangent-spot"));
}

TEST_CASE("verification usage errors exit with code two") {
  CHECK(run_cli("verify --m 1").exit_code == 2);
  CHECK(run_cli("verify --m 6").exit_code == 2);
  CHECK(run_cli("verify --m 2 --check dichotomy").exit_code == 2);
  CHECK(run_cli("verify --m 3 --check no-such-check").exit_code == 2);
}

TEST_CASE("check listing") {
  const CliResult r = run_cli("verify --list");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "cardinalities"));
  CHECK(contains(r.output, "tangent-spot"));
  CHECK(contains(r.output, "m={3}"));
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run_cli("enumerate --object bogus --m 3").exit_code == 2);
  CHECK(run_cli("enumerate --object points --m 9").exit_code == 2);
  CHECK(run_cli("enumerate --object points --m 3 --field 3").exit_code == 2);
  CHECK(run_cli("enumerate --object hermitian --m 2 --field 2").exit_code == 2);
  CHECK(run_cli("enumerate --object spread --m 5").exit_code == 2);
  CHECK(run_cli("enumerate --m 3").exit_code == 2);
  CHECK(run_cli("orbits --m 3 --object bogus").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("unknown-subcommand").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("enumerate --help").exit_code == 0);
}

TEST_CASE("JSON export is structured and byte-deterministic") {
  const auto path1 = temp_path("segre_cli_spread_1.json");
  const auto path2 = temp_path("segre_cli_spread_2.json");
  const CliResult r1 =
      run_cli("export --object spread --m 3 --export " + path1.string());
  CHECK(r1.exit_code == 0);
  CHECK(contains(r1.output, "wrote "));
  CHECK(contains(r1.output, "85 items"));
  const CliResult r2 =
      run_cli("export --object spread --m 3 -o " + path2.string());
  CHECK(r2.exit_code == 0);

  const std::string text = read_file(path1);
  CHECK(text == read_file(path2));
  CHECK(!text.empty());
  CHECK(text.back() == '\n');
  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["meta"]["object"] == "spread");
  CHECK(doc["meta"]["m"] == 3);
  CHECK(doc["meta"]["field"] == 4);
  REQUIRE(doc["items"].is_array());
  CHECK(doc["items"].size() == 85);
  const auto& item = doc["items"][0];
  CHECK(item.contains("class"));
  CHECK(item.contains("contact"));
  CHECK(item.contains("line"));
  CHECK(item["line"].is_array());
  CHECK(item["line"].size() == 2);
  std::filesystem::remove(path1);
  std::filesystem::remove(path2);
}

TEST_CASE("CSV export lists plain records") {
  const auto path = temp_path("segre_cli_points.csv");
  const CliResult r = run_cli("export --object points --m 2 --format csv --export " +
                              path.string());
  CHECK(r.exit_code == 0);
  const std::string text = read_file(path);
  int rows = 0;
  std::istringstream in{text};
  std::string line;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.rfind("E:", 0) == 0);
  }
  CHECK(rows == 15);
  std::filesystem::remove(path);
}

TEST_CASE("orbit export carries a summary") {
  const auto path = temp_path("segre_cli_orbits.json");
  const CliResult r = run_cli("export --object point-orbits --m 2 --export " +
                              path.string());
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(read_file(path));
  REQUIRE(doc.contains("summary"));
  REQUIRE(doc["summary"].size() == 2);
  CHECK(doc["summary"][0]["orbit"] == 1);
  CHECK(doc["summary"][0]["size"] == 6);
  CHECK(doc["summary"][1]["size"] == 9);
  CHECK(doc["items"].size() == 15);
  int orbit1 = 0, orbit2 = 0;
  for (const auto& item : doc["items"]) {
    if (item["orbit"] == 1) ++orbit1;
    if (item["orbit"] == 2) ++orbit2;
  }
  CHECK(orbit1 == 6);
  CHECK(orbit2 == 9);
  std::filesystem::remove(path);
}

TEST_CASE("substructure export has one record per flag") {
  const auto path = temp_path("segre_cli_substructure.json");
  const CliResult r =
      run_cli("export --object hermitian-substructure --m 3 --export " + path.string());
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(read_file(path));
  CHECK(doc["items"].size() == 135);
  CHECK(doc["items"][0].contains("point"));
  CHECK(doc["items"][0].contains("line"));
  std::filesystem::remove(path);
}

TEST_CASE("export requires an output path") {
  CHECK(run_cli("export --object spread --m 3").exit_code == 2);
}
