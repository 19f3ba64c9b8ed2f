#pragma once

#include <map>
#include <string>
#include <vector>

namespace kleitman::cli {

struct Job {
  std::string command;                        // exact|construct|bound|spectral|verify|sweep
  std::map<std::string, std::string> params;  // long option name -> value; flags use "1"
  std::string output;                         // report destination; empty is stdout
  std::string format = "json";                // json|csv
};

struct ReportRow {
  int n = 0;
  std::string dist;
  std::string kind;
  std::string value;
  std::string provenance;
};

struct Report {
  std::vector<ReportRow> rows;
  std::map<std::string, std::string> metadata;  // tool, version, seed, threads
  std::string payload;   // command-specific JSON document, already serialized
  double wall_time = 0;  // in-memory only; the driver prints it to stderr
};

Report run_job(const Job& job);

// "json": the command payload (or rows+metadata when no payload);
// "csv": stable header n,dist,kind,value,provenance with minimal quoting.
std::string emit_report(const Report& r, const std::string& format);

int run_cli(int argc, char** argv);

}  // namespace kleitman::cli
