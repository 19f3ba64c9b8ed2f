#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kleitman/cli.hpp"
#include "kleitman/errors.hpp"

using namespace kleitman;
using namespace kleitman::cli;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(KLEITMAN_BIN) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exact job end to end in process") {
  Job job;
  job.command = "exact";
  job.params = {{"n", "6"}, {"dist", "2,4"}};
  Report rep = run_job(job);
  json j = json::parse(rep.payload);
  CHECK(j["command"] == "exact");
  CHECK(j["size"] == 16);
  CHECK(j["optimal"] == true);
  CHECK(j["family"]["n"] == 6);
  CHECK(j["family"]["sets"].size() == 16);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].n == 6);
  CHECK(rep.rows[0].dist == "2,4");
  CHECK(rep.rows[0].kind == "solver");
  CHECK(rep.rows[0].value == "16");
  CHECK(rep.metadata.at("tool") == "kleitman");
  CHECK(rep.metadata.count("version") == 1);
  CHECK(rep.metadata.at("threads") == "1");
}

TEST_CASE("bound job lists every certificate in order") {
  Job job;
  job.command = "bound";
  job.params = {{"n", "9"}, {"dist", "4,10"}, {"all", "1"}};
  Report rep = run_job(job);
  json j = json::parse(rep.payload);
  REQUIRE(j["certificates"].size() == 5);
  CHECK(j["certificates"][0]["name"] == "kleitman");
  CHECK(j["certificates"][1]["name"] == "nonhomog");
  CHECK(j["certificates"][1]["value"] == "11");
  CHECK(j["certificates"][3]["name"] == "layered");
  CHECK(j["certificates"][3]["value"] == "10");
  REQUIRE(rep.rows.size() == 5);
  CHECK(rep.rows[0].kind == "bound:kleitman");
  CHECK(rep.rows[0].provenance.find("[not valid here]") != std::string::npos);
  CHECK(rep.rows[3].kind == "bound:layered");
  CHECK(rep.rows[3].provenance.find("[not valid here]") == std::string::npos);

  Job best = job;
  best.params.erase("all");
  json jb = json::parse(run_job(best).payload);
  CHECK(jb["best"]["name"] == "layered");
  CHECK(jb["best"]["value"] == "10");
}

TEST_CASE("construct and spectral jobs in process") {
  Job c;
  c.command = "construct";
  c.params = {{"kind", "zero-three"}, {"params", "n=18"}};
  json jc = json::parse(run_job(c).payload);
  CHECK(jc["size"] == 10);
  CHECK(jc["dist_spec"] == "4,10");
  CHECK(jc["family"]["sets"].size() == 10);

  Job s;
  s.command = "spectral";
  s.params = {{"n", "8"}, {"t", "2"}, {"verify", "1"}};
  Report rs = run_job(s);
  json js = json::parse(rs.payload);
  REQUIRE(js["spectrum"]["classes"].size() == 5);
  CHECK(js["spectrum"]["bound"] == "29");
  CHECK(js["spectrum"]["classes"][1]["eigenvalue"] == "-17");
  CHECK(js["verify"]["pass"] == true);
  CHECK(rs.metadata.count("verify_failed") == 0);
}

TEST_CASE("sweep job emits three rows per cell") {
  Job job;
  job.command = "sweep";
  job.params = {{"n", "4..5"}, {"dist", "1,2;3"}};
  job.format = "csv";
  Report rep = run_job(job);
  REQUIRE(rep.rows.size() == 12);  // 2 n * 2 specs * 3 kinds
  CHECK(rep.rows[0].kind == "construction");
  CHECK(rep.rows[1].kind == "solver");
  CHECK(rep.rows[2].kind.rfind("bound:", 0) == 0);
  // the {1,2} cells agree across kinds at these sizes
  CHECK(rep.rows[0].value == rep.rows[1].value);
  CHECK(rep.rows[1].value == rep.rows[2].value);
}

TEST_CASE("csv emission quotes only what needs quoting") {
  Report rep;
  rep.rows.push_back({5, "2,4", "solver", "16", "branch-and-bound exact"});
  rep.rows.push_back({3, "plain", "kind", "7", "say \"hi\""});
  std::string csv = emit_report(rep, "csv");
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,dist,kind,value,provenance");
  std::getline(lines, line);
  CHECK(line == "5,\"2,4\",solver,16,branch-and-bound exact");
  std::getline(lines, line);
  CHECK(line == "3,plain,kind,7,\"say \"\"hi\"\"\"");

  Report empty;
  CHECK(emit_report(empty, "csv") == "n,dist,kind,value,provenance\n");
  CHECK_THROWS_AS(emit_report(empty, "yaml"), InvalidInput);
}

TEST_CASE("json emission without payload carries rows and metadata") {
  Report rep;
  rep.metadata["tool"] = "kleitman";
  rep.rows.push_back({4, "1,2", "solver", "5", "branch-and-bound exact"});
  json j = json::parse(emit_report(rep, "json"));
  CHECK(j["metadata"]["tool"] == "kleitman");
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["n"] == 4);
  CHECK(j["rows"][0]["value"] == "5");
}

TEST_CASE("job validation failures") {
  Job job;
  job.command = "teleport";
  CHECK_THROWS_AS(run_job(job), InvalidInput);
  Job partial;
  partial.command = "exact";
  partial.params = {{"n", "5"}};
  CHECK_THROWS_AS(run_job(partial), InvalidInput);  // missing dist
  Job bad_num;
  bad_num.command = "exact";
  bad_num.params = {{"n", "five"}, {"dist", "1,2"}};
  CHECK_THROWS_AS(run_job(bad_num), InvalidInput);
}

TEST_CASE("binary: exact runs are byte-identical and well formed") {
  RunResult a = run("exact --n 6 --dist 2,4 2>/dev/null");
  RunResult b = run("exact --n 6 --dist 2,4 2>/dev/null");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  json j = json::parse(a.out);
  CHECK(j["size"] == 16);
}

TEST_CASE("binary: exit codes for bad input and blown limits") {
  CHECK(run("exact --n 99 --dist 1,2 2>/dev/null").exit_code == 1);
  CHECK(run("exact --n 6 --dist 0 2>/dev/null").exit_code == 1);
  CHECK(run("bound --n 9 2>/dev/null").exit_code == 1);  // missing --dist
  CHECK(run("exact --n 40 --dist 2,4,6,8 2>/dev/null").exit_code == 2);  // graph over cap
}

TEST_CASE("binary: csv bound output and wall time on stderr") {
  RunResult r = run("bound --n 9 --dist 4,10 --format csv 2>/dev/null");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "n,dist,kind,value,provenance");
  std::getline(lines, row);
  CHECK(row.rfind("9,\"4,10\",bound:layered,10,", 0) == 0);

  RunResult wall = run("bound --n 9 --dist 4,10 2>&1 >/dev/null");
  CHECK(wall.out.rfind("# wall ", 0) == 0);
}

TEST_CASE("binary: job file reproduces the flag run") {
  std::string path = "cli_job_tmp.json";
  {
    std::ofstream out(path);
    out << R"({"command":"bound","params":{"n":"9","dist":"4,10","all":"1"}})" << "\n";
  }
  RunResult direct = run("bound --n 9 --dist 4,10 --all 2>/dev/null");
  RunResult via_file = run("--job " + path + " 2>/dev/null");
  CHECK(via_file.exit_code == 0);
  CHECK(via_file.out == direct.out);
  std::remove(path.c_str());

  CHECK(run("--job does_not_exist.json 2>/dev/null").exit_code == 2);
}

TEST_CASE("binary: family goes to --out, report to --output") {
  std::string fam = "cli_fam_tmp.json";
  std::string report = "cli_report_tmp.json";
  RunResult r =
      run("exact --n 6 --dist 2,4 --out " + fam + " --output " + report + " 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());  // everything went to files
  json jf = json::parse(slurp(fam));
  CHECK(jf["n"] == 6);
  CHECK(jf["sets"].size() == 16);
  json jr = json::parse(slurp(report));
  CHECK(jr["family_file"] == fam);
  std::remove(fam.c_str());
  std::remove(report.c_str());
}

TEST_CASE("binary: verify suite passes") {
  RunResult r = run("verify 2>/dev/null");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["checks"].size() == 7);
}

TEST_CASE("binary: sweep defaults to csv and stays consistent") {
  RunResult r = run("sweep --n 4..6 --dist 1,2 2>/dev/null");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  REQUIRE(line == "n,dist,kind,value,provenance");
  int rows = 0;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 9);  // 3 n-values, one spec, three kinds
}

TEST_CASE("binary: no arguments prints help and succeeds") {
  RunResult r = run("2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Usage") != std::string::npos);
}
