#include "kleitman/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kleitman/bounds.hpp"
#include "kleitman/constructions.hpp"
#include "kleitman/errors.hpp"
#include "kleitman/family_io.hpp"
#include "kleitman/setcore.hpp"
#include "kleitman/solver.hpp"
#include "kleitman/spectral.hpp"
#include "kleitman/version.hpp"

namespace kleitman::cli {

namespace {

using nlohmann::json;

const std::string& require_param(const Job& job, const std::string& key) {
  auto it = job.params.find(key);
  if (it == job.params.end())
    throw InvalidInput(job.command + ": missing required parameter '" + key + "'");
  return it->second;
}

std::string param_or(const Job& job, const std::string& key, const std::string& def) {
  auto it = job.params.find(key);
  return it == job.params.end() ? def : it->second;
}

bool has_param(const Job& job, const std::string& key) {
  return job.params.find(key) != job.params.end();
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("not an integer for " + what + ": '" + s + "'");
  }
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("not a number for " + what + ": '" + s + "'");
  }
}

int resolve_threads(const Job& job) {
  if (has_param(job, "threads"))
    return static_cast<int>(parse_int(job.params.at("threads"), "--threads"));
  if (const char* env = std::getenv("KLEITMAN_THREADS")) {
    return static_cast<int>(parse_int(env, "KLEITMAN_THREADS"));
  }
  return 1;
}

std::uint64_t resolve_seed(const Job& job) {
  if (!has_param(job, "seed")) return 0;
  return static_cast<std::uint64_t>(parse_int(job.params.at("seed"), "--seed"));
}

// comma-separated k=v pairs, as in --params m=20,t=3,c=1
std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw InvalidInput("expected k=v in parameter list, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

json cert_json(const BoundCertificate& c) {
  json j;
  j["name"] = c.name;
  j["value"] = to_decimal(c.value);
  j["valid"] = c.valid;
  j["provenance"] = c.provenance;
  json pre = json::array();
  for (const auto& p : c.preconditions) pre.push_back({{"text", p.text}, {"ok", p.ok}});
  j["preconditions"] = pre;
  j["details"] = c.details;
  return j;
}

json spectrum_json(const spectral::SpectrumReport& r) {
  json j;
  j["n"] = r.n;
  j["t"] = r.t;
  json cls = json::array();
  for (const auto& c : r.classes) {
    cls.push_back({{"size", c.size},
                   {"eigenvalue", to_decimal(c.eigenvalue)},
                   {"multiplicity", to_decimal(c.multiplicity)},
                   {"sign", c.sign}});
  }
  j["classes"] = cls;
  j["n_ge0"] = to_decimal(r.n_ge0);
  j["n_le0"] = to_decimal(r.n_le0);
  j["bound"] = to_decimal(r.bound);
  return j;
}

json family_json(const Family& f) { return json::parse(write_family(f)); }

void finish_payload(Report& rep, json& j) { rep.payload = j.dump(2) + "\n"; }

void handle_exact(const Job& job, Report& rep) {
  int n = static_cast<int>(parse_int(require_param(job, "n"), "--n"));
  DistanceSpec dspec = DistanceSpec::parse(require_param(job, "dist"));
  solver::SolveOptions opts;
  opts.thread_count = resolve_threads(job);
  opts.seed = resolve_seed(job);
  if (has_param(job, "budget")) opts.time_budget = parse_double(job.params.at("budget"), "--budget");

  solver::SolveResult res = solver::max_family(n, dspec, opts);
  for (const std::string& w : res.warnings) std::fprintf(stderr, "# warning: %s\n", w.c_str());

  if (has_param(job, "out")) write_family_file(res.best_family, job.params.at("out"));

  json j;
  j["command"] = "exact";
  j["n"] = n;
  j["dist"] = dspec.to_string();
  j["size"] = res.best_family.size();
  j["optimal"] = res.optimal;
  j["nodes_explored"] = res.nodes_explored;
  j["warnings"] = res.warnings;
  j["family"] = family_json(res.best_family);
  if (has_param(job, "out")) j["family_file"] = job.params.at("out");
  finish_payload(rep, j);

  rep.rows.push_back({n, dspec.to_string(), "solver", std::to_string(res.best_family.size()),
                      res.optimal ? "branch-and-bound exact" : "budget-limited incumbent"});
}

constructions::ConstructionResult dispatch_construct(const std::string& kind,
                                                     std::map<std::string, std::string>& kv) {
  auto geti = [&](const std::string& key) -> int {
    auto it = kv.find(key);
    if (it == kv.end()) throw InvalidInput("construct: kind '" + kind + "' needs parameter " + key);
    return static_cast<int>(parse_int(it->second, key));
  };
  auto order = [&]() {
    std::string o = kv.count("order") ? kv.at("order") : "lex";
    if (o == "lex") return constructions::PackOrder::lex;
    if (o == "random") return constructions::PackOrder::random;
    throw InvalidInput("order must be lex or random");
  };
  auto seed = [&]() -> std::uint64_t {
    return kv.count("seed") ? static_cast<std::uint64_t>(parse_int(kv.at("seed"), "seed")) : 0;
  };

  if (kind == "ball") return constructions::hamming_ball_family(geti("n"), geti("d"));
  if (kind == "parity") return constructions::parity_family(geti("n"), geti("t"));
  if (kind == "blowup") {
    auto it = kv.find("file");
    if (it == kv.end()) throw InvalidInput("construct: blowup needs parameter file");
    Family f = read_family_file(it->second);
    return constructions::blowup(f, geti("g"));
  }
  if (kind == "packing")
    return constructions::greedy_packing(geti("m"), geti("t"), geti("c"), order(), seed());
  if (kind == "double-packing")
    return constructions::double_packing(geti("m"), geti("t"), geti("s"), order(), seed());
  if (kind == "homogeneous")
    return constructions::homogeneous_construction(geti("n"), geti("d"), geti("s"), geti("t"));
  if (kind == "blocks") return constructions::disjoint_blocks(geti("n"), geti("u"));
  if (kind == "zero-three") return constructions::zero_three_family(geti("n"));
  if (kind == "pg") return constructions::projective_plane_family(geti("q"), geti("p"), geti("r"));
  throw InvalidInput("unknown construction kind: " + kind);
}

void handle_construct(const Job& job, Report& rep) {
  std::string kind = require_param(job, "kind");
  std::map<std::string, std::string> kv = parse_kv(param_or(job, "params", ""));
  constructions::ConstructionResult res = dispatch_construct(kind, kv);

  json j;
  j["command"] = "construct";
  j["kind"] = res.kind;
  j["n"] = res.family.ground_size();
  j["size"] = res.achieved();
  j["target_size"] = to_decimal(res.target);
  j["ratio"] = res.ratio();
  if (res.dist_spec) j["dist_spec"] = res.dist_spec->to_string();
  if (res.inter_spec) j["inter_spec"] = res.inter_spec->to_string();
  j["notes"] = res.notes;
  if (has_param(job, "out")) {
    write_family_file(res.family, job.params.at("out"));
    j["family_file"] = job.params.at("out");
  } else {
    j["family"] = family_json(res.family);
  }
  finish_payload(rep, j);

  std::string spec_str = res.dist_spec   ? res.dist_spec->to_string()
                         : res.inter_spec ? res.inter_spec->to_string()
                                          : "";
  rep.rows.push_back({res.family.ground_size(), spec_str, "construction",
                      std::to_string(res.achieved()), res.kind});
}

void handle_bound(const Job& job, Report& rep) {
  int n = static_cast<int>(parse_int(require_param(job, "n"), "--n"));
  DistanceSpec dspec = DistanceSpec::parse(require_param(job, "dist"));
  bool all = has_param(job, "all");

  json j;
  j["command"] = "bound";
  j["n"] = n;
  j["dist"] = dspec.to_string();
  if (all) {
    std::vector<BoundCertificate> certs = bounds::all_bounds(n, dspec);
    json arr = json::array();
    for (const auto& c : certs) {
      arr.push_back(cert_json(c));
      rep.rows.push_back({n, dspec.to_string(), "bound:" + c.name, to_decimal(c.value),
                          c.valid ? c.provenance : c.provenance + " [not valid here]"});
    }
    j["certificates"] = arr;
  } else {
    BoundCertificate best = bounds::best_upper_bound(n, dspec);
    j["best"] = cert_json(best);
    rep.rows.push_back({n, dspec.to_string(), "bound:" + best.name, to_decimal(best.value),
                        best.provenance});
  }
  finish_payload(rep, j);
}

void handle_spectral(const Job& job, Report& rep) {
  int n = static_cast<int>(parse_int(require_param(job, "n"), "--n"));
  json j;
  j["command"] = "spectral";
  j["n"] = n;

  int t = -1;
  std::string dist_str;
  if (has_param(job, "for_dist")) {
    DistanceSpec dspec = DistanceSpec::parse(job.params.at("for_dist"));
    dist_str = dspec.to_string();
    BoundCertificate cert = spectral::spectral_bound_for_D(n, dspec);
    j["dist"] = dist_str;
    j["certificate"] = cert_json(cert);
    rep.rows.push_back({n, dist_str, "bound:spectral", to_decimal(cert.value),
                        cert.valid ? cert.provenance : cert.provenance + " [not valid here]"});
    if (cert.valid) t = dspec.max() / 2;
  } else if (has_param(job, "t")) {
    t = static_cast<int>(parse_int(job.params.at("t"), "--t"));
  } else {
    throw InvalidInput("spectral: needs --t or --for-dist");
  }

  if (t >= 1) {
    spectral::SpectrumReport sr = spectral::cvetkovic_bound(n, t);
    j["spectrum"] = spectrum_json(sr);
    if (dist_str.empty()) {
      rep.rows.push_back({n, "even distances up to " + std::to_string(2 * t), "bound:spectral",
                          to_decimal(sr.bound), "Cvetkovic eigenvalue-sign bound"});
    }
  }

  if (has_param(job, "verify")) {
    if (t < 1) throw InvalidInput("spectral: --verify needs a t (via --t or a valid --for-dist)");
    spectral::VerifyReport vr = spectral::verify_spectrum(n, t);
    j["verify"] = {{"pass", vr.pass}, {"first_bad_size", vr.first_bad_size}, {"detail", vr.detail}};
    rep.rows.push_back({n, "", "spectral_verify", vr.pass ? "pass" : "fail", vr.detail});
    if (!vr.pass) rep.metadata["verify_failed"] = "1";
  }
  finish_payload(rep, j);
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

void run_checks(std::vector<Check>& checks) {
  auto add = [&](const std::string& name, auto&& fn) {
    Check c;
    c.name = name;
    try {
      std::string detail = fn();
      c.pass = true;
      c.detail = detail;
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = e.what();
    }
    checks.push_back(c);
  };

  add("kleitman closed form matches solver", [] {
    for (int n = 4; n <= 6; ++n) {
      auto res = solver::max_family(n, DistanceSpec({1, 2}), {});
      BigInt expect = bounds::kleitman_value(n, 2);
      if (BigInt(res.best_family.size()) != expect || !res.optimal)
        throw std::runtime_error("mismatch at n=" + std::to_string(n));
    }
    return std::string("n=4..6, D={1,2}");
  });

  add("translation preserves the distance multiset", [] {
    Family f = constructions::parity_family(8, 2).family;
    Family g = translate(f, Subset::of(8, {1, 3, 6}));
    if (distance_multiset(f) != distance_multiset(g))
      throw std::runtime_error("distance multiset changed");
    return std::string("parity family on [8]");
  });

  add("constructions validate against their distance sets", [] {
    constructions::hamming_ball_family(9, 3);
    constructions::parity_family(9, 3);
    constructions::zero_three_family(18);
    constructions::homogeneous_construction(12, 2, 1, 2);
    constructions::projective_plane_family(5, 3, 2);
    return std::string("ball, parity, zero-three, homogeneous, pg");
  });

  add("family io round trip", [] {
    Family f = constructions::zero_three_family(9).family;
    Family g = read_family(write_family(f));
    if (!(f == g)) throw std::runtime_error("round trip changed the family");
    return std::string("zero-three family on [9]");
  });

  add("spectral verification", [] {
    for (auto [n, t] : {std::pair{6, 1}, {8, 2}, {10, 3}}) {
      auto vr = spectral::verify_spectrum(n, t);
      if (!vr.pass) throw std::runtime_error(vr.detail);
    }
    return std::string("(n,t) = (6,1), (8,2), (10,3)");
  });

  add("eigenvalue count collapses to the closed form", [] {
    for (int t = 1; t <= 2; ++t) {
      for (int n = 2 * t + 2; n <= 10; ++n) {
        BigInt expect = 0;
        for (int i = t % 2; i <= t; i += 2) expect += binomial(n, i);
        auto sr = spectral::cvetkovic_bound(n, t);
        if (sr.bound != expect) throw std::runtime_error("closed form mismatch");
      }
    }
    return std::string("t=1..2, n up to 10");
  });

  add("construction <= solver <= best bound", [] {
    for (int n = 4; n <= 7; ++n) {
      for (const auto& d : {DistanceSpec({1, 2}), DistanceSpec({2, 4}), DistanceSpec({3, 7}),
                            DistanceSpec({2})}) {
        auto lower = constructions::best_construction(n, d);
        auto mid = solver::max_family(n, d, {});
        auto upper = bounds::best_upper_bound(n, d);
        if (BigInt(lower.achieved()) > BigInt(mid.best_family.size()))
          throw std::runtime_error("construction beats solver");
        if (BigInt(mid.best_family.size()) > upper.value)
          throw std::runtime_error("solver beats certified bound");
      }
    }
    return std::string("n=4..7, four distance sets");
  });
}

void handle_verify(const Job&, Report& rep) {
  std::vector<Check> checks;
  run_checks(checks);

  json j;
  j["command"] = "verify";
  json arr = json::array();
  bool all_pass = true;
  for (const Check& c : checks) {
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    rep.rows.push_back({0, "", "check", c.pass ? "pass" : "fail", c.name});
    all_pass = all_pass && c.pass;
  }
  j["checks"] = arr;
  j["all_pass"] = all_pass;
  finish_payload(rep, j);
  if (!all_pass) rep.metadata["verify_failed"] = "1";
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = static_cast<int>(parse_int(s, "--n"));
    return {v, v};
  }
  int lo = static_cast<int>(parse_int(s.substr(0, dots), "--n"));
  int hi = static_cast<int>(parse_int(s.substr(dots + 2), "--n"));
  if (lo > hi) throw InvalidInput("empty range: " + s);
  return {lo, hi};
}

void handle_sweep(const Job& job, Report& rep) {
  auto [lo, hi] = parse_range(require_param(job, "n"));
  std::vector<DistanceSpec> specs;
  {
    std::stringstream ss(require_param(job, "dist"));
    std::string item;
    while (std::getline(ss, item, ';')) {
      if (!item.empty()) specs.push_back(DistanceSpec::parse(item));
    }
  }
  if (specs.empty()) throw InvalidInput("sweep: no distance specs given");

  solver::SolveOptions opts;
  opts.thread_count = resolve_threads(job);
  opts.seed = resolve_seed(job);
  if (has_param(job, "budget")) opts.time_budget = parse_double(job.params.at("budget"), "--budget");

  for (int n = lo; n <= hi; ++n) {
    for (const DistanceSpec& d : specs) {
      std::string ds = d.to_string();
      auto lower = constructions::best_construction(n, d);
      rep.rows.push_back({n, ds, "construction", std::to_string(lower.achieved()), lower.kind});
      auto mid = solver::max_family(n, d, opts);
      rep.rows.push_back({n, ds, "solver", std::to_string(mid.best_family.size()),
                          mid.optimal ? "branch-and-bound exact" : "budget-limited incumbent"});
      auto upper = bounds::best_upper_bound(n, d);
      rep.rows.push_back({n, ds, "bound:" + upper.name, to_decimal(upper.value), upper.provenance});
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

Report run_job(const Job& job) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.metadata["tool"] = "kleitman";
  rep.metadata["version"] = kVersion;
  rep.metadata["seed"] = std::to_string(resolve_seed(job));
  rep.metadata["threads"] = std::to_string(resolve_threads(job));

  if (job.command == "exact") handle_exact(job, rep);
  else if (job.command == "construct") handle_construct(job, rep);
  else if (job.command == "bound") handle_bound(job, rep);
  else if (job.command == "spectral") handle_spectral(job, rep);
  else if (job.command == "verify") handle_verify(job, rep);
  else if (job.command == "sweep") handle_sweep(job, rep);
  else throw InvalidInput("unknown command: " + job.command);

  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string emit_report(const Report& r, const std::string& format) {
  if (format == "json") {
    if (!r.payload.empty()) return r.payload;
    json j;
    j["metadata"] = r.metadata;
    json rows = json::array();
    for (const ReportRow& row : r.rows) {
      rows.push_back({{"n", row.n},
                      {"dist", row.dist},
                      {"kind", row.kind},
                      {"value", row.value},
                      {"provenance", row.provenance}});
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out = "n,dist,kind,value,provenance\n";
    for (const ReportRow& row : r.rows) {
      out += std::to_string(row.n) + "," + csv_field(row.dist) + "," + csv_field(row.kind) + "," +
             csv_field(row.value) + "," + csv_field(row.provenance) + "\n";
    }
    return out;
  }
  throw InvalidInput("unknown format: " + format);
}

namespace {

Job job_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ResourceLimit("cannot open job file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw InvalidInput("job file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object()) throw InvalidInput("job file must hold a JSON object");
  Job job;
  if (!j.contains("command") || !j["command"].is_string())
    throw InvalidInput("job file needs a string 'command'");
  job.command = j["command"].get<std::string>();
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw InvalidInput("job 'params' must be an object");
    for (auto& [k, v] : j["params"].items()) {
      job.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
  }
  if (j.contains("output") && j["output"].is_string()) job.output = j["output"].get<std::string>();
  if (j.contains("format") && j["format"].is_string()) job.format = j["format"].get<std::string>();
  return job;
}

void deliver(const Report& rep, const Job& job) {
  std::string text = emit_report(rep, job.format);
  if (job.output.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    std::ofstream out(job.output, std::ios::binary);
    if (!out) throw ResourceLimit("cannot open output file: " + job.output);
    out << text;
    if (!out) throw ResourceLimit("write failed: " + job.output);
  }
  std::fprintf(stderr, "# wall %.3fs\n", rep.wall_time);
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"restricted-distance set families: exact search, constructions, certificates"};
  app.require_subcommand(0, 1);

  std::string job_file;
  app.add_option("--job", job_file, "run a job described by a JSON file");

  Job job;
  bool have_job = false;

  auto bind_common = [&job](CLI::App* sub, bool with_solver_knobs) {
    auto* fmt = sub->add_option_function<std::string>(
        "--format", [&job](const std::string& v) { job.params["format"] = v; },
        "json or csv");
    fmt->check(CLI::IsMember({"json", "csv"}));
    sub->add_option_function<std::string>(
        "--output", [&job](const std::string& v) { job.output = v; },
        "write the report here instead of stdout");
    if (with_solver_knobs) {
      sub->add_option_function<std::string>(
          "--budget", [&job](const std::string& v) { job.params["budget"] = v; },
          "time budget in seconds");
      sub->add_option_function<std::string>(
          "--threads", [&job](const std::string& v) { job.params["threads"] = v; },
          "solver threads (default 1 or KLEITMAN_THREADS)");
      sub->add_option_function<std::string>(
          "--seed", [&job](const std::string& v) { job.params["seed"] = v; }, "64-bit seed");
    }
  };
  auto opt = [&job](CLI::App* sub, const std::string& name, const std::string& help) {
    return sub->add_option_function<std::string>(
        "--" + name, [&job, name](const std::string& v) { job.params[name] = v; }, help);
  };
  auto flag = [&job](CLI::App* sub, const std::string& name, const std::string& help) {
    sub->add_flag_callback(
        "--" + name, [&job, name] { job.params[name] = "1"; }, help);
  };

  auto* exact = app.add_subcommand("exact", "exact maximum family size with witness");
  exact->callback([&] { job.command = "exact"; have_job = true; });
  opt(exact, "n", "ground set size")->required();
  opt(exact, "dist", "distance set, e.g. 2,4 or ap:d=6,s=1,t=2,a=0")->required();
  opt(exact, "out", "write the witness family file here");
  bind_common(exact, true);

  auto* construct = app.add_subcommand("construct", "build a lower-bound family");
  construct->callback([&] { job.command = "construct"; have_job = true; });
  opt(construct, "kind",
      "ball|parity|blowup|packing|double-packing|homogeneous|blocks|zero-three|pg")
      ->required();
  opt(construct, "params", "comma list of k=v construction parameters");
  opt(construct, "out", "write the family file here instead of inline");
  bind_common(construct, false);

  auto* bound = app.add_subcommand("bound", "upper-bound certificates");
  bound->callback([&] { job.command = "bound"; have_job = true; });
  opt(bound, "n", "ground set size")->required();
  opt(bound, "dist", "distance set")->required();
  flag(bound, "all", "print every certificate, not just the winner");
  bind_common(bound, false);

  auto* spectral_cmd = app.add_subcommand("spectral", "eigenvalue bound and verification");
  spectral_cmd->callback([&] { job.command = "spectral"; have_job = true; });
  opt(spectral_cmd, "n", "ground set size")->required();
  opt(spectral_cmd, "t", "half the largest even distance");
  flag(spectral_cmd, "verify", "recompute eigenvalues exactly and check them");
  spectral_cmd->add_option_function<std::string>(
      "--for-dist", [&job](const std::string& v) { job.params["for_dist"] = v; },
      "derive the bound for this distance set");
  bind_common(spectral_cmd, false);

  auto* verify = app.add_subcommand("verify", "run the bundled property suite");
  verify->callback([&] { job.command = "verify"; have_job = true; });
  bind_common(verify, false);

  auto* sweep = app.add_subcommand("sweep", "tabulate construction/solver/bound over a grid");
  sweep->callback([&] { job.command = "sweep"; have_job = true; });
  opt(sweep, "n", "single value or range A..B")->required();
  opt(sweep, "dist", "semicolon-separated distance specs")->required();
  bind_common(sweep, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (!job_file.empty()) {
      if (have_job) throw InvalidInput("--job excludes subcommands");
      job = job_from_file(job_file);
    } else if (!have_job) {
      std::cout << app.help();
      return 0;
    }
    if (job.params.count("format")) job.format = job.params.at("format");
    else if (job.command == "sweep") job.format = "csv";

    Report rep = run_job(job);
    deliver(rep, job);
    if (rep.metadata.count("verify_failed")) return 1;
    return 0;
  } catch (const InvalidInput& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const ResourceLimit& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
}

}  // namespace kleitman::cli
