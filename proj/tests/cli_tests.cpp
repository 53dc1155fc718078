#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "doctest.h"

#ifdef DIAGEN_CLI_PATH

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

/// Runs the CLI with the given arguments through the shell.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(DIAGEN_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("diagen_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

/// The machine-readable summary is the last non-empty output line.
nlohmann::json summary_of(const RunResult& r) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < r.output.size()) {
    std::size_t nl = r.output.find('\n', pos);
    if (nl == std::string::npos) nl = r.output.size();
    if (nl > pos) lines.push_back(r.output.substr(pos, nl - pos));
    pos = nl + 1;
  }
  REQUIRE(!lines.empty());
  return nlohmann::json::parse(lines.back());
}

}  // namespace

TEST_CASE("cli help documents every flag of every subcommand") {
  auto top = run_cli("--help");
  CHECK(top.exit_code == 0);
  for (const char* sub : {"gen-captions", "gen-instruct", "render", "stats",
                          "validate", "templates-check"})
    CHECK(top.output.find(sub) != std::string::npos);

  auto cap = run_cli("gen-captions --help");
  CHECK(cap.exit_code == 0);
  for (const char* flag : {"--seed", "--out", "--plane", "--analytic", "--function",
                           "--hops", "--jobs", "--force", "--config", "--templates",
                           "--refine"})
    CHECK(cap.output.find(flag) != std::string::npos);

  auto ins = run_cli("gen-instruct --help");
  CHECK(ins.exit_code == 0);
  for (const char* flag : {"--seed", "--out", "--plane", "--function", "--hops",
                           "--version-mix", "--mc-fraction", "--jobs", "--force",
                           "--config", "--templates"})
    CHECK(ins.output.find(flag) != std::string::npos);

  auto ren = run_cli("render --help");
  CHECK(ren.exit_code == 0);
  for (const char* flag : {"--id", "--out"})
    CHECK(ren.output.find(flag) != std::string::npos);

  CHECK(run_cli("stats --help").output.find("--json") != std::string::npos);
  CHECK(run_cli("validate --help").exit_code == 0);
  CHECK(run_cli("templates-check --help").output.find("--templates") !=
        std::string::npos);
}

TEST_CASE("cli generation emits a parseable summary and validates clean") {
  fs::path dir = fresh_dir("gen");
  auto gen = run_cli("gen-instruct --seed 9 --plane 4 --function 3 --out " +
                     dir.string());
  CHECK(gen.exit_code == 0);
  auto summary = summary_of(gen);
  CHECK(summary["command"] == "gen-instruct");
  CHECK(summary["records"] == 7);
  CHECK(summary["plane"] == 4);
  CHECK(summary["function"] == 3);
  CHECK(summary["seed"] == 9);
  CHECK(summary["out"] == dir.string());

  auto val = run_cli("validate " + dir.string());
  CHECK(val.exit_code == 0);
  CHECK(summary_of(val)["failures"] == 0);

  // Repeating without --force is a config error; with --force it succeeds.
  CHECK(run_cli("gen-instruct --seed 9 --plane 4 --function 3 --out " + dir.string())
            .exit_code == 2);
  CHECK(run_cli("gen-instruct --seed 9 --plane 4 --function 3 --force --out " +
                dir.string())
            .exit_code == 0);
}

TEST_CASE("cli rejects bad configurations with exit code 2") {
  fs::path dir = fresh_dir("bad");
  CHECK(run_cli("gen-captions --plane 1 --out " + dir.string()).exit_code == 2);
  CHECK(run_cli("gen-instruct --seed 1 --analytic 2 --out " + dir.string()).exit_code ==
        2);
  CHECK(run_cli("gen-instruct --seed 1 --plane 1 --hops 5:2 --out " + dir.string())
            .exit_code == 2);
  CHECK(run_cli("definitely-not-a-command").exit_code == 2);
}

TEST_CASE("cli validate flags tampering with exit code 1 and the record id") {
  fs::path dir = fresh_dir("tamper");
  REQUIRE(run_cli("gen-captions --seed 3 --plane 2 --analytic 1 --function 1 --out " +
                  dir.string())
              .exit_code == 0);
  // Flip one digit inside the first caption line.
  fs::path jsonl = dir / "captions.jsonl";
  std::string data;
  {
    std::ifstream in(jsonl, std::ios::binary);
    data.assign((std::istreambuf_iterator<char>(in)),
                std::istreambuf_iterator<char>());
  }
  auto pos = data.find("\"caption\"");
  REQUIRE(pos != std::string::npos);
  pos = data.find_first_of("0123456789", pos);
  REQUIRE(pos != std::string::npos);
  data[pos] = data[pos] == '9' ? '8' : static_cast<char>(data[pos] + 1);
  {
    std::ofstream out(jsonl, std::ios::binary | std::ios::trunc);
    out << data;
  }
  auto val = run_cli("validate " + dir.string());
  CHECK(val.exit_code == 1);
  CHECK(val.output.find("cap-000000") != std::string::npos);
  CHECK(summary_of(val)["failures"].get<int>() >= 1);
}

TEST_CASE("cli render reproduces a stored image byte for byte") {
  fs::path dir = fresh_dir("render");
  REQUIRE(run_cli("gen-instruct --seed 11 --plane 2 --function 1 --out " + dir.string())
              .exit_code == 0);
  auto ren = run_cli("render " + dir.string() + " --id ins-000001");
  CHECK(ren.exit_code == 0);
  std::ifstream in(dir / "svg" / "ins-000001.svg", std::ios::binary);
  std::string stored((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
  CHECK(ren.output == stored);
  CHECK(run_cli("render " + dir.string() + " --id ins-999999").exit_code == 2);
}

TEST_CASE("cli stats and templates-check run clean") {
  fs::path dir = fresh_dir("stats");
  REQUIRE(run_cli("gen-captions --seed 8 --plane 2 --analytic 2 --function 2 --out " +
                  dir.string())
              .exit_code == 0);
  auto st = run_cli("stats " + (dir / "captions.jsonl").string() + " --json");
  CHECK(st.exit_code == 0);
  auto j = nlohmann::json::parse(st.output);
  CHECK(j["all"]["records"] == 6);
  CHECK(run_cli("templates-check").exit_code == 0);
}

#endif  // DIAGEN_CLI_PATH
