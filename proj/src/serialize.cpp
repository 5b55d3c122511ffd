#include "qhall/serialize.hpp"

#include <cctype>
#include <sstream>

namespace qhall {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\n\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\n\r");
  return s.substr(a, b - a + 1);
}

/// Splits on '*' outside brackets and parentheses.
std::vector<std::string> split_factors(const std::string& text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) fail(ErrorCode::kParse, "unbalanced brackets in \"" + text + "\"");
    if (c == '*' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) fail(ErrorCode::kParse, "unbalanced brackets in \"" + text + "\"");
  out.push_back(trim(cur));
  for (const auto& f : out)
    if (f.empty()) fail(ErrorCode::kParse, "empty factor in \"" + text + "\"");
  return out;
}

IntVec parse_int_list(const std::string& body, int n) {
  IntVec v;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::kParse, "bad integer \"" + tok + "\"");
    }
    if (used != tok.size()) fail(ErrorCode::kParse, "bad integer \"" + tok + "\"");
    v.push_back(x);
  }
  if (static_cast<int>(v.size()) != n) {
    fail(ErrorCode::kParse, "expected " + std::to_string(n) + " entries in [" + body + "]");
  }
  return v;
}

struct Fields {
  IsoClass M;
  IntVec P;
};

/// "M=S1; P=P2" with either part optional.
Fields parse_fields(const ModuleCategory& C, const std::string& body) {
  Fields f{C.zero(), IntVec(C.n(), 0)};
  std::stringstream ss(body);
  std::string part;
  bool seen_m = false, seen_p = false;
  while (std::getline(ss, part, ';')) {
    part = trim(part);
    if (part.empty()) continue;
    size_t eq = part.find('=');
    if (eq == std::string::npos) fail(ErrorCode::kParse, "expected M=... or P=..., got \"" + part + "\"");
    std::string k = trim(part.substr(0, eq)), v = trim(part.substr(eq + 1));
    if (k == "M" && !seen_m) {
      f.M = C.parse_label(v);
      seen_m = true;
    } else if (k == "P" && !seen_p) {
      f.P = C.parse_proj_label(v);
      seen_p = true;
    } else {
      fail(ErrorCode::kParse, "unexpected field \"" + k + "\"");
    }
  }
  return f;
}

std::string head_body(const std::string& f, char open, char close, std::string& body) {
  size_t a = f.find(open);
  if (a == std::string::npos || f.back() != close) return "";
  body = f.substr(a + 1, f.size() - a - 2);
  return trim(f.substr(0, a));
}

}  // namespace

MHElement parse_mh_literal(const MorphismHall& H, const std::string& text) {
  MHElement acc = H.one();
  for (const auto& f : split_factors(text)) {
    std::string body;
    MHElement g(H.q());
    if (f == "1") {
      g = H.one();
    } else if (head_body(f, '[', ']', body) == "K") {
      g = H.K(parse_int_list(body, H.n()));
    } else if (head_body(f, '(', ')', body) == "X") {
      Fields fl = parse_fields(H.category(), body);
      g = H.X(fl.M, fl.P);
    } else {
      fail(ErrorCode::kParse, "unknown generator \"" + f + "\"");
    }
    acc = H.mult(acc, g);
  }
  return acc;
}

DHElement parse_dh_literal(const DerivedHall& D, const std::string& text) {
  DHElement acc = D.one();
  for (const auto& f : split_factors(text)) {
    std::string body;
    DHElement g(D.q());
    if (f == "1") {
      g = D.one();
    } else if (head_body(f, '(', ')', body) == "u") {
      Fields fl = parse_fields(D.category(), body);
      g = D.u(fl.M, fl.P);
    } else {
      fail(ErrorCode::kParse, "unknown generator \"" + f + "\"");
    }
    acc = D.mult(acc, g);
  }
  return acc;
}

json scalar_to_json(const Scalar& s) { return {{"rat", s.rat().get_str()}, {"sqrt_rat", s.sqrt_rat().get_str()}}; }

Scalar scalar_from_json(int q, const json& j) {
  auto read = [&](const char* k) {
    if (!j.contains(k)) fail(ErrorCode::kParse, std::string("scalar is missing ") + k);
    const auto& v = j[k];
    mpq_class r;
    try {
      if (v.is_string()) {
        r = mpq_class(v.get<std::string>());
      } else if (v.is_number_integer()) {
        r = mpq_class(static_cast<long>(v.get<long long>()));
      } else {
        fail(ErrorCode::kParse, "scalar entries must be strings or integers");
      }
    } catch (const std::invalid_argument&) {
      fail(ErrorCode::kParse, "bad rational in scalar");
    }
    r.canonicalize();
    return r;
  };
  return Scalar(q, read("rat"), read("sqrt_rat"));
}

namespace {

json key_json(const MorphismHall& H, const MHKey& k) {
  return {{"alpha", k.alpha}, {"module_label", H.category().label(k.module)}, {"proj_label", H.category().proj_label(k.proj)}};
}

MHKey key_from_json(const MorphismHall& H, const json& j) {
  try {
    return H.key(j.at("alpha").get<IntVec>(), H.category().parse_label(j.at("module_label").get<std::string>()),
                 H.category().parse_proj_label(j.at("proj_label").get<std::string>()));
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, std::string("bad basis record: ") + e.what());
  }
}

}  // namespace

json to_json(const MorphismHall& H, const MHElement& x) {
  json out = json::array();
  for (const auto& [k, c] : x.terms()) {
    json r = key_json(H, k);
    r["scalar"] = scalar_to_json(c);
    out.push_back(r);
  }
  return out;
}

MHElement mh_from_json(const MorphismHall& H, const json& j) {
  if (!j.is_array()) fail(ErrorCode::kParse, "element must be a JSON array");
  MHElement out(H.q());
  for (const auto& r : j) out.add(key_from_json(H, r), scalar_from_json(H.q(), r.at("scalar")));
  return out;
}

json to_json(const MorphismHall& H, const MHTensor& x) {
  json out = json::array();
  for (const auto& [ab, c] : x.terms())
    out.push_back({{"left", key_json(H, ab.first)}, {"right", key_json(H, ab.second)}, {"scalar", scalar_to_json(c)}});
  return out;
}

MHTensor mh_tensor_from_json(const MorphismHall& H, const json& j) {
  if (!j.is_array()) fail(ErrorCode::kParse, "tensor must be a JSON array");
  MHTensor out(H.q());
  for (const auto& r : j)
    out.add({key_from_json(H, r.at("left")), key_from_json(H, r.at("right"))}, scalar_from_json(H.q(), r.at("scalar")));
  return out;
}

json to_json(const DerivedHall& D, const DHElement& x) {
  json out = json::array();
  for (const auto& [k, c] : x.terms())
    out.push_back({{"module_label", D.category().label(k.module)},
                   {"proj_label", D.category().proj_label(k.proj)},
                   {"scalar", scalar_to_json(c)}});
  return out;
}

DHElement dh_from_json(const DerivedHall& D, const json& j) {
  if (!j.is_array()) fail(ErrorCode::kParse, "element must be a JSON array");
  DHElement out(D.q());
  for (const auto& r : j) {
    try {
      out.add(D.key(D.category().parse_label(r.at("module_label").get<std::string>()),
                    D.category().parse_proj_label(r.at("proj_label").get<std::string>())),
              scalar_from_json(D.q(), r.at("scalar")));
    } catch (const json::exception& e) {
      fail(ErrorCode::kParse, std::string("bad basis record: ") + e.what());
    }
  }
  return out;
}

json to_json(const TorusElt& x) {
  json out = json::array();
  for (const auto& [e, c] : x.terms()) out.push_back({{"exponent", e}, {"scalar", scalar_to_json(c)}});
  return out;
}

TorusElt torus_from_json(int q, const json& j, TorusMode mode) {
  if (!j.is_array()) fail(ErrorCode::kParse, "torus element must be a JSON array");
  TorusElt out(q, mode);
  for (const auto& r : j) {
    try {
      out.add(r.at("exponent").get<IntVec>(), scalar_from_json(q, r.at("scalar")));
    } catch (const json::exception& e) {
      fail(ErrorCode::kParse, std::string("bad torus record: ") + e.what());
    }
  }
  return out;
}

std::string to_text(const MorphismHall& H, const MHElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")" << H.key_label(k);
    first = false;
  }
  return os.str();
}

std::string to_text(const MorphismHall& H, const MHTensor& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ab, c] : x.terms()) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")" << H.key_label(ab.first) << " (x) "
       << H.key_label(ab.second);
    first = false;
  }
  return os.str();
}

std::string to_text(const DerivedHall& D, const DHElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")" << D.key_label(k);
    first = false;
  }
  return os.str();
}

}  // namespace qhall
