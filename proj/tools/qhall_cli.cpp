#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qhall/qhall.h"

using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string config;
  int q = 0;
  int max_dim = 0;
  int samples = 100;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string cache_dir;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Handle {
  qhall_context* ctx = nullptr;
  ~Handle() { qhall_context_free(ctx); }
};

void check(qhall_status s) {
  if (s != QHALL_OK) throw UsageError(std::string(qhall_status_name(s)) + ": " + qhall_last_error());
}

json take(char* s) {
  json j = json::parse(s);
  qhall_string_free(s);
  return j;
}

void open_context(const Globals& g, Handle& h) {
  if (g.config.empty()) throw UsageError("--config is required");
  std::ifstream in(g.config);
  if (!in) throw UsageError("cannot read config " + g.config);
  std::stringstream ss;
  ss << in.rdbuf();
  json cfg;
  try {
    cfg = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("parse-error: ") + e.what());
  }
  if (!cfg.is_object()) throw UsageError("parse-error: config must be a JSON object");
  if (g.q) cfg["q"] = g.q;
  if (g.max_dim) cfg["max_dim"] = g.max_dim;
  if (!cfg.contains("name")) cfg["name"] = g.config;
  check(qhall_context_new(cfg.dump().c_str(), g.cache_dir.c_str(), &h.ctx));
}

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + cell(v[i]);
    return s + ")";
  }
  return v.dump();
}

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, out);
  } else {
    out.push_back({prefix, cell(v)});
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

/// Rows of objects as CSV; an optional leading column tags each row.
void print_csv(const std::vector<std::pair<std::string, json>>& rows) {
  std::vector<std::string> header;
  std::vector<std::vector<std::pair<std::string, std::string>>> flat;
  bool tagged = false;
  for (const auto& [tag, r] : rows) {
    tagged = tagged || !tag.empty();
    std::vector<std::pair<std::string, std::string>> f;
    flatten(r, "", f);
    for (const auto& [k, v] : f)
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
    flat.push_back(std::move(f));
  }
  std::string line = tagged ? "source" : "";
  for (const auto& h : header) line += (line.empty() ? "" : ",") + csv_escape(h);
  std::cout << line << "\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    line = tagged ? csv_escape(rows[i].first) : "";
    for (size_t c = 0; c < header.size(); ++c) {
      std::string v;
      for (const auto& [k, x] : flat[i])
        if (k == header[c]) v = x;
      line += (tagged || c ? "," : "") + csv_escape(v);
    }
    std::cout << line << "\n";
  }
}

std::string matrix_text(const json& m) {
  std::string s;
  for (const auto& r : m) {
    s += "  [";
    for (size_t i = 0; i < r.size(); ++i) s += (i ? " " : "") + std::to_string(r[i].get<int>());
    s += "]\n";
  }
  return s;
}

int cmd_check_seed(const Globals& g) {
  Handle h;
  open_context(g, h);
  char* out = nullptr;
  int ok = 0;
  check(qhall_check_seed(h.ctx, g.samples, g.seed, &out, &ok));
  json j = take(out);
  if (g.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    json row = j;
    row.erase("lemma_failure_samples");
    print_csv({{"", row}});
  } else {
    std::cout << "B~ =\n" << matrix_text(j["B_tilde"]) << "Lambda =\n" << matrix_text(j["lambda"]);
    auto yn = [](const json& b) { return b.get<bool>() ? "OK" : "FAILED"; };
    std::cout << "skew-symmetric: " << yn(j["lambda_skew"]) << "\n"
              << "compatibility: " << yn(j["compatible"]) << "\n"
              << "framed compatibility: " << yn(j["appendix_compatible"]) << "\n"
              << "form identities: " << j["lemma_checks"] << " checks, " << j["lemma_failures"] << " failures (seed "
              << j["rng_seed"] << ")\n";
    for (const auto& f : j["lemma_failure_samples"])
      std::cout << "  " << f["name"].get<std::string>() << ": " << f["lhs"] << " != " << f["rhs"] << "\n";
  }
  return ok ? kPass : kFail;
}

int cmd_catalog(const Globals& g) {
  Handle h;
  open_context(g, h);
  char* out = nullptr;
  check(qhall_catalog(h.ctx, &out));
  json j = take(out);
  if (g.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::vector<std::pair<std::string, json>> rows;
    for (const auto& e : j["indecomposables"]) rows.push_back({"", e});
    print_csv(rows);
  } else {
    std::cout << j["indecomposables"].size() << " indecomposables up to total dimension " << j["max_dim"]
              << (j["complete"].get<bool>() ? " (complete)" : " (bounded)") << "\n";
    for (const auto& e : j["indecomposables"]) {
      std::cout << "  " << e["label"].get<std::string>() << "  " << cell(e["dims"]);
      for (const char* f : {"projective", "injective", "simple", "rigid"})
        if (e[f].get<bool>()) std::cout << "  " << f;
      std::cout << "\n";
    }
  }
  return kPass;
}

int cmd_compute(const Globals& g, const std::string& what, const std::vector<std::string>& lits) {
  Handle h;
  open_context(g, h);
  std::vector<const char*> ptrs;
  for (const auto& s : lits) ptrs.push_back(s.c_str());
  char* out = nullptr;
  int verdict = 1;
  check(qhall_compute(h.ctx, what.c_str(), ptrs.data(), static_cast<int>(ptrs.size()), &out, &verdict));
  json j = take(out);
  if (g.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::vector<std::pair<std::string, json>> rows;
    for (const char* part : {"result", "pipeline", "closed"})
      if (j.contains(part) && j[part].is_array())
        for (const auto& r : j[part]) rows.push_back({part, r});
    if (j.contains("gvector")) rows.push_back({"gvector", {{"gvector", j["gvector"]}, {"minus_ind0", j["minus_ind0"]},
                                                           {"homogeneous", j["homogeneous"]}}});
    print_csv(rows);
  } else {
    std::cout << j["text"].get<std::string>() << "\n";
  }
  return verdict ? kPass : kFail;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& suites, int proj_copies, int appendix_dim,
               int depth) {
  Handle h;
  open_context(g, h);
  std::vector<std::string> names;
  for (const auto& s : suites) {
    if (s == "all") {
      char* out = nullptr;
      check(qhall_suite_names(&out));
      for (const auto& n : take(out)) names.push_back(n.get<std::string>());
    } else {
      names.push_back(s);
    }
  }
  qhall_suite_options o = qhall_suite_options_default();
  o.samples = g.samples;
  o.rng_seed = g.seed;
  if (g.max_dim) o.max_dim = g.max_dim;
  o.proj_copies = proj_copies;
  o.appendix_dim = appendix_dim;
  o.qca_depth = depth;
  json reports = json::array();
  bool all = true;
  for (const auto& name : names) {
    char* out = nullptr;
    int passed = 0;
    check(qhall_verify(h.ctx, name.c_str(), &o, &out, &passed));
    reports.push_back(take(out));
    all = all && passed;
  }
  if (g.format == "json") {
    std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  } else if (g.format == "csv") {
    std::vector<std::pair<std::string, json>> rows;
    for (auto r : reports) {
      r["failure_samples"] = r["failure_samples"].size();
      r.erase("notes");
      rows.push_back({"", r});
    }
    print_csv(rows);
  } else {
    for (const auto& r : reports) {
      std::cout << r["suite"].get<std::string>() << ": " << (r["passed"].get<bool>() ? "PASS" : "FAIL") << "  "
                << r["checks"] << " checks, " << r["failures"] << " failures, " << r["seconds"].get<double>()
                << " s, seed " << r["rng_seed"] << "\n";
      for (const auto& n : r["notes"]) std::cout << "  note: " << n.get<std::string>() << "\n";
      for (const auto& f : r["failure_samples"]) std::cout << "  failed: " << f.get<std::string>() << "\n";
    }
  }
  return all ? kPass : kFail;
}

int cmd_cluster_compare(const Globals& g, int depth) {
  Handle h;
  open_context(g, h);
  char* out = nullptr;
  int ok = 0;
  check(qhall_cluster_compare(h.ctx, depth, &out, &ok));
  json j = take(out);
  if (g.format == "json") {
    std::cout << j["matches"].dump(2) << "\n";
  } else if (g.format == "csv") {
    std::vector<std::pair<std::string, json>> rows;
    for (const auto& m : j["matches"]) rows.push_back({"", m});
    print_csv(rows);
  } else {
    for (const auto& m : j["matches"]) {
      std::cout << "  " << m["module_label"].get<std::string>() << ": "
                << (m["matched"].get<bool>() ? "matched, path " + cell(m["mutation_path"]) : std::string("no match"))
                << "\n";
    }
    std::cout << j["enumerated"] << " variables to depth " << j["depth"] << ", " << j["unmatched_variables"]
              << " without a preimage" << (j["exhaustive"].get<bool>() ? "" : " (catalog bounded, not counted)")
              << "\n";
  }
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hall algebra and quantum cluster character engine"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config, "quiver config (JSON)");
  app.add_option("--q", g.q, "override the prime q");
  app.add_option("--max-dim", g.max_dim, "override the total-dimension bound")->check(CLI::PositiveNumber);
  app.add_option("--samples", g.samples, "random samples per check")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "RNG seed");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", g.cache_dir, "catalog cache directory");

  auto* seed_cmd = app.add_subcommand("check-seed", "exchange matrix, Lambda and compatibility checks");
  auto* cat_cmd = app.add_subcommand("catalog", "indecomposable modules within the bound");

  auto* comp = app.add_subcommand("compute", "evaluate one operation on element literals");
  std::string what;
  std::vector<std::string> lits;
  comp->add_option("what", what, "hall-product | delta | psi | ccchar | gvector | dh-psi")
      ->required()
      ->check(CLI::IsMember({"hall-product", "delta", "psi", "ccchar", "gvector", "dh-psi"}));
  comp->add_option("literals", lits, "element literals")->required();

  auto* ver = app.add_subcommand("verify", "run property suites");
  std::vector<std::string> suites;
  int proj_copies = 2, appendix_dim = 4, depth = 0;
  ver->add_option("--suite", suites, "suite name or all")->required();
  ver->add_option("--proj-copies", proj_copies, "summands of P in sweeps")->check(CLI::NonNegativeNumber);
  ver->add_option("--appendix-dim", appendix_dim, "bound for framed modules")->check(CLI::PositiveNumber);
  ver->add_option("--depth", depth, "mutation depth for qca (0: default)")->check(CLI::NonNegativeNumber);

  auto* cc = app.add_subcommand("cluster-compare", "quantum mutation against Psi");
  int cc_depth = 0;
  cc->add_option("--depth", cc_depth, "mutation depth (0: default)")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*seed_cmd) return cmd_check_seed(g);
    if (*cat_cmd) return cmd_catalog(g);
    if (*comp) return cmd_compute(g, what, lits);
    if (*ver) return cmd_verify(g, suites, proj_copies, appendix_dim, depth);
    if (*cc) return cmd_cluster_compare(g, cc_depth);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
