#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mpham/constructions.hpp"
#include "mpham/errors.hpp"
#include "mpham/expansion.hpp"
#include "mpham/extremal.hpp"
#include "mpham/graph.hpp"
#include "mpham/hamiltonicity.hpp"
#include "mpham/matching.hpp"
#include "mpham/partition.hpp"

namespace mpham {

using Json = nlohmann::ordered_json;

inline Json to_json(VertexSet s) { return Json(s.to_vector()); }

// {"n":..,"parts":[[..],..],"edges":[[u,v],..]}: parts in input order, members
// ascending, edges canonical (u < v, sorted).
inline Json graph_to_json(const PartiteGraph& g) {
  Json j;
  j["n"] = g.order();
  j["parts"] = g.input_parts();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

inline std::string graph_to_string(const PartiteGraph& g) { return graph_to_json(g).dump() + "\n"; }

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Json parse_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    throw InvalidArguments(what + ": malformed JSON at " + line_col(text, at));
  }
}

inline int int_field(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InvalidArguments("field '" + path + "': expected an integer");
  return j.get<int>();
}

inline const Json& array_field(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InvalidArguments("field '" + path + "': expected an array");
  return j;
}

}  // namespace detail

inline PartiteGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArguments("graph: expected a JSON object");
  for (const char* key : {"n", "parts", "edges"})
    if (!j.contains(key)) throw InvalidArguments(std::string("field '") + key + "': missing");
  const int n = detail::int_field(j["n"], "n");
  if (n < 0 || n > kMaxVertices)
    throw InvalidArguments("field 'n': " + std::to_string(n) + " outside [0, " + std::to_string(kMaxVertices) + "]");

  std::vector<std::vector<int>> parts;
  const Json& jp = detail::array_field(j["parts"], "parts");
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::string path = "parts[" + std::to_string(i) + "]";
    const Json& part = detail::array_field(jp[i], path);
    if (part.empty()) throw InvalidArguments("field '" + path + "': empty part");
    std::vector<int> members;
    for (std::size_t m = 0; m < part.size(); ++m) {
      const std::string mpath = path + "[" + std::to_string(m) + "]";
      const int v = detail::int_field(part[m], mpath);
      if (v < 0 || v >= n) throw InvalidArguments("field '" + mpath + "': vertex " + std::to_string(v) + " outside [0, n)");
      if (owner[static_cast<std::size_t>(v)] != -1)
        throw InvalidArguments("field '" + mpath + "': vertex " + std::to_string(v) + " already in parts[" +
                               std::to_string(owner[static_cast<std::size_t>(v)]) + "]");
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
      members.push_back(v);
    }
    parts.push_back(std::move(members));
  }
  for (int v = 0; v < n; ++v)
    if (owner[static_cast<std::size_t>(v)] == -1)
      throw InvalidArguments("field 'parts': vertex " + std::to_string(v) + " is not covered");

  std::vector<Edge> edges;
  const Json& je = detail::array_field(j["edges"], "edges");
  for (std::size_t e = 0; e < je.size(); ++e) {
    const std::string path = "edges[" + std::to_string(e) + "]";
    const Json& pair = detail::array_field(je[e], path);
    if (pair.size() != 2) throw InvalidArguments("field '" + path + "': expected [u, v]");
    const int u = detail::int_field(pair[0], path + "[0]");
    const int v = detail::int_field(pair[1], path + "[1]");
    if (u < 0 || v >= n || v < 0 || u >= n) throw InvalidArguments("field '" + path + "': vertex outside [0, n)");
    if (!(u < v)) throw InvalidArguments("field '" + path + "': expected u < v");
    if (owner[static_cast<std::size_t>(u)] == owner[static_cast<std::size_t>(v)])
      throw InvalidArguments("field '" + path + "': endpoints share a part");
    edges.emplace_back(u, v);
  }
  try {
    return PartiteGraph(parts, edges);
  } catch (const InvalidArguments& e) {
    throw InvalidArguments(std::string("field 'edges': ") + e.what());
  }
}

inline PartiteGraph graph_from_string(const std::string& text) {
  return graph_from_json(detail::parse_text(text, "graph"));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArguments("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArguments("cannot write '" + path + "'");
  out << text;
}

inline PartiteGraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return graph_from_string(text);
  } catch (const InvalidArguments& e) {
    throw InvalidArguments(path + ": " + e.what());
  }
}

inline Json certificate_to_json(const NonHamiltonicityCertificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["s"] = to_json(c.s);
  return j;
}

inline NonHamiltonicityCertificate certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("s"))
    throw InvalidArguments("certificate: expected {\"kind\": ..., \"s\": [...]}");
  NonHamiltonicityCertificate c;
  const auto kind = j["kind"].is_string() ? j["kind"].get<std::string>() : std::string();
  if (kind == "small-neighborhood") c.kind = CertificateKind::small_neighborhood;
  else if (kind == "oversized-independent") c.kind = CertificateKind::oversized_independent;
  else throw InvalidArguments("field 'kind': unknown certificate kind");
  const Json& s = detail::array_field(j["s"], "s");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int v = detail::int_field(s[i], "s[" + std::to_string(i) + "]");
    if (v < 0 || v >= kMaxVertices) throw InvalidArguments("field 's[" + std::to_string(i) + "]': vertex out of range");
    c.s.insert(v);
  }
  return c;
}

inline Json matching_to_json(const FractionalMatching& m) {
  Json j;
  Json edges = Json::array();
  for (auto [u, v] : m.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["odd_cycles"] = m.odd_cycles;
  return j;
}

inline Json violation_to_json(const ExpansionViolation& v) {
  Json j;
  j["t"] = to_json(v.t);
  j["independent_core"] = to_json(v.independent_core);
  return j;
}

inline Json profile_to_json(const PartitionProfile& p) {
  Json j;
  j["partition"] = p.partition.to_string();
  j["mode"] = to_string(p.mode);
  j["lambda"] = p.lambda;
  j["mu"] = p.mu;
  Json f = Json::array();
  for (const auto& v : p.f_values) f.push_back(to_string(v));
  j["f_values"] = std::move(f);
  for (auto [name, value] : {std::pair<const char*, Rational>{"f", p.f}, {"g", p.g}, {"h1", p.h1}, {"h2", p.h2},
                             {"h", p.h}, {"phi", p.phi}})
    j[name] = to_string(value);
  Json thresholds = Json::array();
  for (int size : p.partition.parts()) thresholds.push_back(to_string(p.phi - size));
  j["thresholds"] = std::move(thresholds);
  return j;
}

inline Json degree_report_to_json(const DegreeReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["slack_per_part"] = r.slack_per_part;
  j["worst_part"] = r.worst_part;
  return j;
}

inline Json verdict_to_json(const HamiltonVerdict& v, const char* key = "cycle") {
  Json j;
  j["outcome"] = v.found() ? key : to_string(v.outcome);
  j["method"] = to_string(v.method);
  if (v.found()) j[key] = v.sequence;
  if (v.method == SearchMethod::backtracking) j["expansions"] = v.expansions;
  return j;
}

inline Json mode_to_json(const AuditMode& m) {
  Json j;
  j["kind"] = m.kind == AuditKind::exact ? "exact" : "sampled";
  if (m.kind == AuditKind::sampled) {
    j["seed"] = m.seed;
    j["samples"] = m.samples;
  }
  return j;
}

inline Json robust_report_to_json(const RobustReport& r) {
  Json j;
  j["verdict"] = r.expander ? "expander" : "not-expander";
  j["inconclusive"] = r.inconclusive;
  j["mode"] = mode_to_json(r.mode);
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

inline Json classification_to_json(const ClassificationVerdict& v) {
  Json j;
  j["outcome"] = to_string(v.outcome);
  if (v.outcome == Outcome::robust_expander) {
    j["robust_nu"] = to_string(v.robust_nu);
    j["robust_tau"] = to_string(v.robust_tau);
  }
  if (v.witness) j["witness"] = to_json(*v.witness);
  j["degree"] = degree_report_to_json(v.degree);
  j["exhaustive"] = v.exhaustive;
  j["trace"] = v.trace;
  Json hyp = Json::object();
  for (const auto& [name, ok] : v.hypotheses) hyp[name] = ok;
  j["hypotheses"] = std::move(hyp);
  return j;
}

inline Json stitch_to_json(const StitchState& s) {
  Json j;
  j["witness"] = to_json(s.witness);
  j["a_side"] = to_json(s.a_side);
  j["b_side"] = to_json(s.b_side);
  j["b_plus"] = to_json(s.b_plus);
  j["b_star"] = to_json(s.b_star);
  j["b_plus_threshold"] = to_string(s.b_plus_threshold);
  j["t"] = s.t;
  j["y"] = s.y;
  j["x"] = s.x;
  j["z"] = s.z;
  j["a"] = s.a;
  j["a_prime"] = s.a_prime;
  j["w"] = s.w;
  j["path"] = s.path;
  j["a_rest"] = to_json(s.a_rest);
  j["b_rest"] = to_json(s.b_rest);
  j["balanced"] = s.balanced;
  if (s.berge) j["berge"] = *s.berge;
  if (!s.failed_step.empty()) j["failed_step"] = s.failed_step;
  return j;
}

}  // namespace mpham
