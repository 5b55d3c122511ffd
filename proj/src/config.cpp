#include "qhall/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qhall/errors.hpp"

namespace qhall {

using nlohmann::json;

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

namespace {

int get_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(ErrorCode::kParse, std::string("config field ") + what + " must be an integer");
  return j.get<int>();
}

}  // namespace

QuiverConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kParse, std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::kParse, "config must be a JSON object");
  if (!j.contains("vertices")) fail(ErrorCode::kParse, "config is missing \"vertices\"");
  int n = get_int(j["vertices"], "vertices");
  if (n < 1) fail(ErrorCode::kInvalidArgument, "a quiver needs at least one vertex");

  std::vector<int> vals(n, 1);
  if (j.contains("valuations")) {
    const auto& v = j["valuations"];
    if (!v.is_array() || static_cast<int>(v.size()) != n) {
      fail(ErrorCode::kParse, "\"valuations\" must list one entry per vertex");
    }
    for (int i = 0; i < n; ++i) {
      vals[i] = get_int(v[i], "valuations");
      if (vals[i] < 1) fail(ErrorCode::kInvalidArgument, "valuations must be positive");
    }
  }

  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) fail(ErrorCode::kParse, "\"arrows\" must be an array");
    for (const auto& a : j["arrows"]) {
      if (!a.is_array() || a.size() < 2 || a.size() > 3) fail(ErrorCode::kParse, "each arrow is [tail, head, mult]");
      int t = get_int(a[0], "arrow tail"), h = get_int(a[1], "arrow head");
      int m = a.size() == 3 ? get_int(a[2], "arrow mult") : 1;
      if (t < 1 || t > n || h < 1 || h > n) fail(ErrorCode::kInvalidArgument, "arrow endpoint out of range");
      if (m < 1) fail(ErrorCode::kInvalidArgument, "arrow multiplicity must be positive");
      arrows.push_back({t - 1, h - 1, m});
    }
  }

  QuiverConfig cfg;
  cfg.quiver = ValuedQuiver(n, vals, arrows);
  if (j.contains("q")) cfg.q = get_int(j["q"], "q");
  if (!is_prime(cfg.q)) fail(ErrorCode::kInvalidArgument, "q must be prime, got " + std::to_string(cfg.q));
  if (j.contains("max_dim")) {
    cfg.max_dim = get_int(j["max_dim"], "max_dim");
    if (cfg.max_dim < 1) fail(ErrorCode::kInvalidArgument, "max_dim must be at least 1");
  }
  if (j.contains("unchecked_lambda")) {
    if (!j["unchecked_lambda"].is_boolean()) fail(ErrorCode::kParse, "\"unchecked_lambda\" must be a boolean");
    cfg.unchecked_lambda = j["unchecked_lambda"].get<bool>();
  }
  if (j.contains("name") && j["name"].is_string()) cfg.name = j["name"].get<std::string>();
  if (j.contains("lambda") && !j["lambda"].is_null()) {
    const auto& L = j["lambda"];
    if (!L.is_array() || static_cast<int>(L.size()) != 2 * n) fail(ErrorCode::kParse, "\"lambda\" must be 2n x 2n");
    std::vector<std::vector<int>> rows;
    for (const auto& r : L) {
      if (!r.is_array() || static_cast<int>(r.size()) != 2 * n) fail(ErrorCode::kParse, "\"lambda\" must be 2n x 2n");
      std::vector<int> row;
      for (const auto& x : r) row.push_back(get_int(x, "lambda"));
      rows.push_back(row);
    }
    cfg.lambda = IntMatrix::from_rows(rows);
  }
  return cfg;
}

QuiverConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kInvalidArgument, "cannot open config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

FramedSeed make_seed(const QuiverConfig& cfg) {
  if (cfg.unchecked_lambda) {
    if (!cfg.lambda) fail(ErrorCode::kInvalidArgument, "unchecked_lambda needs an explicit lambda");
    return FramedSeed::unchecked(cfg.quiver, *cfg.lambda);
  }
  return FramedSeed::principal(cfg.quiver, cfg.lambda);
}

}  // namespace qhall
