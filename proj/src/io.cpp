#include "ltls/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ltls/error.hpp"

namespace ltls::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::Schema, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) schema("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint64_t as_u64(const json& j, const std::string& what) {
  if (!j.is_number_unsigned()) schema(what + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

BigInt as_big(const json& j, const std::string& what) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (!s.empty() && s.size() < 200 && s.find_first_not_of("0123456789") == std::string::npos) return BigInt(s);
  }
  schema(what + " must be a non-negative integer");
}

std::optional<BigInt> opt_big(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return as_big(*it, key);
}

}  // namespace

json to_json(const ls::LinearSpace& space) {
  json lines = json::array();
  for (const auto& l : space.lines()) lines.push_back(l);
  return json{{"v", space.v()}, {"lines", std::move(lines)}};
}

ls::LinearSpace space_from_json(const json& j) {
  const auto v = as_u64(field(j, "v"), "v");
  if (v > grp::kMaxDegree) schema("v too large");
  const auto& jl = field(j, "lines");
  if (!jl.is_array()) schema("lines must be an array");
  std::vector<ls::Line> lines;
  lines.reserve(jl.size());
  for (const auto& row : jl) {
    if (!row.is_array()) schema("each line must be an array");
    ls::Line line;
    for (const auto& p : row) line.push_back(static_cast<std::uint32_t>(as_u64(p, "point")));
    lines.push_back(std::move(line));
  }
  return ls::LinearSpace(static_cast<std::uint32_t>(v), std::move(lines));
}

json to_json(const Metadata& m) {
  json j{{"construction", m.construction}, {"q", m.q}};
  if (m.params) {
    j["params"] = {m.params->v, m.params->b, m.params->k, m.params->r};
  } else {
    j["params"] = nullptr;
  }
  return j;
}

Metadata metadata_from_json(const json& j) {
  Metadata m;
  const auto& c = field(j, "construction");
  if (!c.is_string()) schema("construction must be a string");
  m.construction = c.get<std::string>();
  m.q = as_u64(field(j, "q"), "q");
  auto it = j.find("params");
  if (it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != 4) schema("params must be [v,b,k,r]");
    m.params = ls::RegularParams{as_u64((*it)[1], "b"), as_u64((*it)[0], "v"), as_u64((*it)[2], "k"),
                                 as_u64((*it)[3], "r")};
  }
  return m;
}

lemmas::CandidateCase case_from_json(const json& j) {
  if (!j.is_object()) schema("case must be a JSON object");
  static const char* known[] = {"label", "group_order", "v", "stabilizer_order", "b_divisors",
                                "k", "n_g", "r_g_max", "min_k"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) schema("unknown field \"" + key + "\"");
  }
  lemmas::CandidateCase c;
  c.group_order = opt_big(j, "group_order");
  c.v = opt_big(j, "v");
  c.stabilizer_order = opt_big(j, "stabilizer_order");
  c.k_hint = opt_big(j, "k");
  c.n_g = opt_big(j, "n_g");
  c.r_g_max = opt_big(j, "r_g_max");
  if (!c.v && c.group_order && c.stabilizer_order && *c.stabilizer_order != 0) {
    c.v = *c.group_order / *c.stabilizer_order;
  }
  if (auto it = j.find("b_divisors"); it != j.end()) {
    if (!it->is_array()) schema("b_divisors must be an array");
    for (const auto& d : *it) c.b_divisors.push_back(as_big(d, "b_divisors entry"));
  }
  if (auto it = j.find("min_k"); it != j.end()) c.min_k = static_cast<unsigned>(as_u64(*it, "min_k"));
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) schema("label must be a string");
    c.label = it->get<std::string>();
  } else {
    std::string label;
    for (const char* key : {"group_order", "v", "k"}) {
      if (auto f = j.find(key); f != j.end()) {
        if (!label.empty()) label += " ";
        label += std::string(key) + "=" + as_big(*f, key).str();
      }
    }
    c.label = label.empty() ? "case" : label;
  }
  return c;
}

json to_json(const lemmas::EliminationReport& r) {
  json w = json::object();
  for (const auto& [k, v] : r.witnesses) w[k] = to_string(v);
  return json{{"case", r.case_label}, {"lemma", r.lemma}, {"verdict", lemmas::to_string(r.verdict)}, {"witnesses", w}};
}

namespace {

std::string row(const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
  std::ostringstream os;
  os << std::left << std::setw(48) << a << "  " << std::setw(20) << b << "  " << std::setw(12) << c << "  " << d;
  return os.str();
}

}  // namespace

std::string table_header() { return row("case", "lemma", "verdict", "key witness"); }

std::string table_row(const lemmas::EliminationReport& r) {
  return row(r.case_label, r.lemma, std::string(lemmas::to_string(r.verdict)), r.key_witness_text());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Schema, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Schema, "cannot write " + path);
  out << text;
}

}  // namespace ltls::io
