#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpham/errors.hpp"
#include "mpham/graph.hpp"
#include "mpham/partition.hpp"

namespace mpham {

// Which of the four extremal families to build. f -> F1(index), g -> F2,
// h1 -> F3, h2 -> F4.
enum class CaseKind { f, g, h1, h2 };

struct TightnessCase {
  CaseKind kind = CaseKind::g;
  int index = 0;  // 1-based i for F1, unused otherwise

  friend bool operator==(const TightnessCase&, const TightnessCase&) = default;
};

inline std::string to_string(const TightnessCase& c) {
  switch (c.kind) {
    case CaseKind::f: return c.index > 0 ? "F1(i=" + std::to_string(c.index) + ")" : std::string("F1");
    case CaseKind::g: return "F2";
    case CaseKind::h1: return "F3";
    case CaseKind::h2: return "F4";
  }
  return "?";
}

enum class CertificateKind { small_neighborhood, oversized_independent };

inline const char* to_string(CertificateKind k) {
  return k == CertificateKind::small_neighborhood ? "small-neighborhood" : "oversized-independent";
}

// An independent set S with |N(S)| < |S| or |S| > n/2; either rules out a Hamiltonian cycle.
struct NonHamiltonicityCertificate {
  VertexSet s;
  CertificateKind kind = CertificateKind::small_neighborhood;
};

struct ConstructionResult {
  PartiteGraph graph;
  TightnessCase tcase;
  NonHamiltonicityCertificate certificate;
  std::vector<std::pair<std::string, VertexSet>> sets;
};

namespace detail {

inline void require_exact(const PartitionProfile& prof) {
  if (prof.mode != ProfileMode::exact) throw InvalidArguments("tightness cases need an exact-mode profile");
}

// floor(ceil((n+1)/2) / lambda)
inline int h2_share(const PartitionProfile& prof) { return ((prof.partition.n() + 2) / 2) / prof.lambda; }

}  // namespace detail

// Every case whose defining equality holds for this profile, in dispatch priority
// order: F1 (ascending i), F2, F4, F3.
inline std::vector<TightnessCase> applicable_cases(const PartitionProfile& prof) {
  detail::require_exact(prof);
  std::vector<TightnessCase> out;
  for (std::size_t i = 0; i < prof.f_values.size(); ++i)
    if (prof.f_values[i] == prof.phi) out.push_back({CaseKind::f, static_cast<int>(i) + 1});
  if (prof.g == prof.phi) out.push_back({CaseKind::g, 0});
  if (prof.h2 == prof.phi && prof.h2 <= prof.h1) out.push_back({CaseKind::h2, 0});
  if (prof.h1 == prof.phi && prof.h1 <= prof.h2) out.push_back({CaseKind::h1, 0});
  return out;
}

inline TightnessCase select_case(const PartitionProfile& prof) {
  detail::require_exact(prof);
  for (std::size_t i = 0; i < prof.f_values.size(); ++i)
    if (prof.f_values[i] == prof.phi) return {CaseKind::f, static_cast<int>(i) + 1};
  if (prof.g == prof.phi) return {CaseKind::g, 0};
  const int n_lambda = prof.partition.size(prof.lambda - 1);
  if (prof.h == prof.h2 && n_lambda >= detail::h2_share(prof)) return {CaseKind::h2, 0};
  return {CaseKind::h1, 0};
}

// Empty when `c` is buildable for this profile; otherwise the failing equality.
inline std::optional<std::string> case_inapplicable_reason(const PartitionProfile& prof, const TightnessCase& c) {
  const std::string phi = "Phi = " + to_string(prof.phi);
  switch (c.kind) {
    case CaseKind::f: {
      if (prof.f_values.empty()) return std::string("f is empty (mu = 1) so f = 0 != ") + phi;
      if (c.index == 0) {
        for (const auto& f : prof.f_values)
          if (f == prof.phi) return std::nullopt;
        return "f = " + to_string(prof.f) + " != " + phi;
      }
      if (c.index < 1 || c.index > static_cast<int>(prof.f_values.size()))
        return "f_" + std::to_string(c.index) + " is undefined (need 1 <= i <= mu-1 = " +
               std::to_string(prof.f_values.size()) + ")";
      const auto& fi = prof.f_values[static_cast<std::size_t>(c.index - 1)];
      if (fi != prof.phi) return "f_" + std::to_string(c.index) + " = " + to_string(fi) + " != " + phi;
      return std::nullopt;
    }
    case CaseKind::g:
      if (prof.g != prof.phi) return "g = " + to_string(prof.g) + " != " + phi;
      return std::nullopt;
    case CaseKind::h1:
      if (prof.h1 != prof.phi) return "h1 = " + to_string(prof.h1) + " != " + phi;
      if (prof.h1 > prof.h2) return "h1 = " + to_string(prof.h1) + " > h2 = " + to_string(prof.h2);
      return std::nullopt;
    case CaseKind::h2:
      if (prof.h2 != prof.phi) return "h2 = " + to_string(prof.h2) + " != " + phi;
      if (prof.h2 > prof.h1) return "h2 = " + to_string(prof.h2) + " > h1 = " + to_string(prof.h1);
      return std::nullopt;
  }
  return std::string("unknown case");
}

namespace detail {

inline VertexSet id_range(int from, int count) {
  VertexSet s;
  for (int v = from; v < from + count; ++v) s.insert(v);
  return s;
}

// Parts on consecutive ids; an edge uv between different parts is kept when
// `keep(u, v)` holds.
template <typename Keep>
PartiteGraph build_on_parts(const Partition& p, Keep&& keep) {
  std::vector<std::vector<int>> parts;
  std::vector<int> part_of;
  int next = 0;
  for (int i = 0; i < p.k(); ++i) {
    std::vector<int> part;
    for (int j = 0; j < p.size(i); ++j) {
      part.push_back(next++);
      part_of.push_back(i);
    }
    parts.push_back(std::move(part));
  }
  std::vector<Edge> edges;
  for (int u = 0; u < p.n(); ++u)
    for (int v = u + 1; v < p.n(); ++v)
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)] && keep(u, v))
        edges.emplace_back(u, v);
  return PartiteGraph(parts, edges);
}

// S joined only to T; everything not touching S is complete.
inline PartiteGraph join_only_to(const Partition& p, VertexSet s, VertexSet t) {
  return build_on_parts(p, [&](int u, int v) {
    const bool us = s.contains(u), vs = s.contains(v);
    if (!us && !vs) return true;
    if (us && vs) return false;
    return t.contains(us ? v : u);
  });
}

// |X_i| per part i < lambda: start at `base`, then fill the remainder into the
// lowest-index parts up to capacity.
inline std::vector<int> distribute(const Partition& p, int lambda, int base, int total) {
  std::vector<int> sizes(static_cast<std::size_t>(lambda), base);
  int remainder = total - lambda * base;
  for (int i = 0; i < lambda && remainder > 0; ++i) {
    const int extra = std::min(remainder, p.size(i) - base);
    sizes[static_cast<std::size_t>(i)] += extra;
    remainder -= extra;
  }
  if (remainder != 0) throw InvalidArguments("independent set does not fit into the lambda largest parts");
  return sizes;
}

}  // namespace detail

// Builds the tightness example for `p`: part degrees meet Phi - n_i - 1 yet the
// graph carries a non-Hamiltonicity certificate. With no forced case the
// dispatch of select_case is used.
inline ConstructionResult build_tightness(const Partition& p, std::optional<TightnessCase> forced = std::nullopt) {
  if (p.k() < 2) throw UnsupportedPartition("tightness examples need at least two parts");
  if (p.size(0) > p.n() / 2)
    throw UnsupportedPartition("largest part " + std::to_string(p.size(0)) + " exceeds floor(n/2) = " +
                               std::to_string(p.n() / 2) + " (lambda = 1)");
  const PartitionProfile prof = profile(p, ProfileMode::exact);
  TightnessCase c = forced.value_or(select_case(prof));
  if (forced) {
    if (auto why = case_inapplicable_reason(prof, c)) throw InvalidArguments("case " + to_string(c) + " inapplicable: " + *why);
    if (c.kind == CaseKind::f && c.index == 0) {
      for (std::size_t i = 0; i < prof.f_values.size(); ++i)
        if (prof.f_values[i] == prof.phi) {
          c.index = static_cast<int>(i) + 1;
          break;
        }
    }
  }

  ConstructionResult out;
  out.tcase = c;
  const int n = p.n();
  switch (c.kind) {
    case CaseKind::f: {
      const int s_size = p.prefix_sum(c.index);
      const VertexSet s = detail::id_range(0, s_size);
      const VertexSet t = detail::id_range(s_size, s_size - 1);
      out.graph = detail::join_only_to(p, s, t);
      out.certificate = {s, CertificateKind::small_neighborhood};
      out.sets = {{"S", s}, {"T", t}};
      break;
    }
    case CaseKind::g: {
      const int n_mu = p.size(prof.mu - 1);
      const int s_size = (n - n_mu) / 2 + 1;
      const VertexSet s = detail::id_range(0, s_size);
      const VertexSet t = detail::id_range(p.prefix_sum(prof.mu), s_size - 1);
      out.graph = detail::join_only_to(p, s, t);
      out.certificate = {s, CertificateKind::small_neighborhood};
      out.sets = {{"S", s}, {"T", t}};
      break;
    }
    case CaseKind::h1:
    case CaseKind::h2: {
      const int total = (n + 2) / 2;
      const int base = c.kind == CaseKind::h1 ? p.size(prof.lambda - 1) : detail::h2_share(prof);
      const auto sizes = detail::distribute(p, prof.lambda, base, total);
      VertexSet s;
      for (int i = 0; i < prof.lambda; ++i) {
        const VertexSet x = detail::id_range(p.prefix_sum(i), sizes[static_cast<std::size_t>(i)]);
        out.sets.emplace_back("X" + std::to_string(i + 1), x);
        s |= x;
      }
      out.sets.emplace_back("S", s);
      out.graph = detail::build_on_parts(p, [&](int u, int v) { return !(s.contains(u) && s.contains(v)); });
      out.certificate = {s, CertificateKind::oversized_independent};
      break;
    }
  }
  return out;
}

// True iff s is independent and its kind's inequality holds. Never throws.
inline bool verify_certificate(const PartiteGraph& g, const NonHamiltonicityCertificate& cert) {
  if (!cert.s.subset_of(g.vertices())) return false;
  if (!is_independent(g, cert.s)) return false;
  if (cert.kind == CertificateKind::small_neighborhood) return neighborhood(g, cert.s).size() < cert.s.size();
  return 2 * cert.s.size() > g.order();
}

}  // namespace mpham
