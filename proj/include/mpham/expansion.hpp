#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mpham/errors.hpp"
#include "mpham/graph.hpp"
#include "mpham/partition.hpp"
#include "mpham/rational.hpp"
#include "mpham/vertex_set.hpp"

namespace mpham {

inline constexpr int kDefaultExactCap = 20;

// nu: robust-neighborhood fraction; tau: admissible set-size margin; gamma:
// additive degree slack as a fraction of n. eta is carried for reporting only.
struct ExpanderParams {
  Rational nu{1, 20};
  Rational tau{1, 5};
  Rational gamma{1, 20};
  std::optional<Rational> eta;
};

enum class AuditKind { exact, sampled };

struct AuditMode {
  AuditKind kind = AuditKind::exact;
  std::uint64_t seed = 0;
  int samples = 1000;
  int cap = kDefaultExactCap;

  static AuditMode exact(int cap = kDefaultExactCap) { return {AuditKind::exact, 0, 0, cap}; }
  static AuditMode sampled(std::uint64_t seed, int samples) { return {AuditKind::sampled, seed, samples, kDefaultExactCap}; }
};

// Outcome of a subset audit. A witness is a violating set; without one the
// audit passed, conclusively only when `exhaustive`.
struct AuditResult {
  std::optional<VertexSet> witness;
  bool exhaustive = true;

  bool ok() const { return !witness.has_value(); }
};

struct RobustReport {
  bool expander = false;
  std::optional<VertexSet> witness;
  AuditMode mode;
  bool inconclusive = false;  // sampled pass: no refutation found
};

inline std::int64_t robust_threshold(int n, const Rational& nu) { return std::max<std::int64_t>(ceil_of(nu * n), 0); }

// Vertices with at least nu*n neighbours in s.
inline VertexSet robust_neighborhood(const PartiteGraph& g, VertexSet s, const Rational& nu) {
  g.check_set(s);
  const std::int64_t need = robust_threshold(g.order(), nu);
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if ((g.neighbors(v) & s).size() >= need) out.insert(v);
  return out;
}

inline bool robustly_expands(const PartiteGraph& g, VertexSet s, const Rational& nu) {
  return Rational(robust_neighborhood(g, s, nu).size()) >= Rational(s.size()) + nu * g.order();
}

// |RN_nu(S)| >= delta(S) - sqrt(nu) n, evaluated exactly by squaring. Requires
// |S| >= (sqrt(nu) + nu) n.
inline bool robust_degree_bound_check(const PartiteGraph& g, VertexSet s, const Rational& nu) {
  g.check_set(s);
  const int n = g.order();
  const Rational n_sq = Rational(n) * n;
  const Rational margin = Rational(s.size()) - nu * n;  // must be >= sqrt(nu) n
  if (margin < 0 || margin * margin < nu * n_sq || s.empty())
    throw InvalidArguments("robust degree bound needs |S| >= (sqrt(nu) + nu) n; |S| = " + std::to_string(s.size()));
  const Rational shortfall = Rational(delta_set(g, s) - robust_neighborhood(g, s, nu).size());
  if (shortfall <= 0) return true;
  return shortfall * shortfall <= nu * n_sq;
}

namespace detail {

inline int size_lower(const Rational& bound) { return static_cast<int>(std::max<std::int64_t>(ceil_of(bound), 0)); }
inline int size_upper(const Rational& bound, int n) {
  return static_cast<int>(std::min<std::int64_t>(floor_of(bound), n));
}

inline double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Searches subsets with lo <= |S| <= hi for one where `violates` holds. Exact
// mode goes by ascending size, colex within a size, so the witness is the first
// violator in that order. Sampled mode draws uniform admissible subsets.
template <typename Violates>
AuditResult subset_audit(const PartiteGraph& g, int lo, int hi, const AuditMode& mode, const char* what,
                         Violates&& violates) {
  const int n = g.order();
  AuditResult result;
  lo = std::max(lo, 0);
  hi = std::min(hi, n);
  if (lo > hi) return result;
  if (mode.kind == AuditKind::exact) {
    if (n > mode.cap)
      throw ResourceLimit(std::string(what) + " exact mode enumerates all subsets; n = " + std::to_string(n) +
                          " exceeds cap " + std::to_string(mode.cap));
    for (int size = lo; size <= hi && !result.witness; ++size) {
      for_each_subset_of_size(g.vertices(), size, [&](VertexSet s) {
        if (violates(s)) {
          result.witness = s;
          return false;
        }
        return true;
      });
    }
    return result;
  }

  result.exhaustive = false;
  std::mt19937_64 rng(mode.seed);
  std::vector<double> weights;
  const double top = log_binomial(n, n / 2);
  for (int size = lo; size <= hi; ++size) weights.push_back(std::exp(log_binomial(n, size) - top));
  std::discrete_distribution<int> pick_size(weights.begin(), weights.end());
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < mode.samples; ++i) {
    const int size = lo + pick_size(rng);
    std::iota(ids.begin(), ids.end(), 0);
    VertexSet s;
    for (int j = 0; j < size; ++j) {
      std::uniform_int_distribution<int> d(j, n - 1);
      std::swap(ids[static_cast<std::size_t>(j)], ids[static_cast<std::size_t>(d(rng))]);
      s.insert(ids[static_cast<std::size_t>(j)]);
    }
    if (violates(s)) {
      result.witness = s;
      break;
    }
  }
  return result;
}

}  // namespace detail

// (nu, tau)-robust expansion: |RN_nu(S)| >= |S| + nu n whenever tau n <= |S| <= (1 - tau) n.
inline RobustReport is_robust_expander(const PartiteGraph& g, const Rational& nu, const Rational& tau,
                                       const AuditMode& mode = AuditMode::exact()) {
  const int n = g.order();
  auto audit = detail::subset_audit(g, detail::size_lower(tau * n), detail::size_upper((1 - tau) * n, n), mode,
                                    "robust expander check",
                                    [&](VertexSet s) { return !robustly_expands(g, s, nu); });
  RobustReport report;
  report.mode = mode;
  report.expander = audit.ok();
  report.witness = audit.witness;
  report.inconclusive = audit.ok() && !audit.exhaustive;
  return report;
}

inline Rational sparse_cut_threshold(int n, const Rational& tau) { return 2 * tau * tau * n * n; }

// Every B with tau n <= |B| <= (1 - tau) n must send at least 2 tau^2 n^2 edges out.
inline AuditResult sparse_cut_audit(const PartiteGraph& g, const Rational& tau, const AuditMode& mode = AuditMode::exact()) {
  const int n = g.order();
  const Rational need = sparse_cut_threshold(n, tau);
  return detail::subset_audit(g, detail::size_lower(tau * n), detail::size_upper((1 - tau) * n, n), mode,
                              "sparse cut audit", [&](VertexSet b) {
                                return Rational(static_cast<std::int64_t>(edge_count_across(g, b, g.vertices() - b))) < need;
                              });
}

// Sets S' with tau^2 n <= |S'| <= (1 - tau^2) n and max induced degree below
// nu^2 n must robustly expand.
inline AuditResult near_independent_expansion_audit(const PartiteGraph& g, const Rational& nu, const Rational& tau,
                                                    const AuditMode& mode = AuditMode::exact()) {
  const int n = g.order();
  const Rational tau_sq = tau * tau;
  const Rational induced_cap = nu * nu * n;
  return detail::subset_audit(g, detail::size_lower(tau_sq * n), detail::size_upper((1 - tau_sq) * n, n), mode,
                              "near-independent expansion audit", [&](VertexSet s) {
                                if (Rational(max_induced_degree(g, s)) >= induced_cap) return false;
                                return !robustly_expands(g, s, nu);
                              });
}

// Sum of the sizes of the parts that meet s.
inline int parts_meeting_size(const PartiteGraph& g, VertexSet s) {
  int total = 0;
  for (VertexSet p : g.parts())
    if (p.intersects(s)) total += p.size();
  return total;
}

inline VertexSet parts_meeting(const PartiteGraph& g, VertexSet s) {
  VertexSet out;
  for (VertexSet p : g.parts())
    if (p.intersects(s)) out |= p;
  return out;
}

// max induced degree < nu^2 n and n/2 - nu n <= |S| <= (parts meeting S) <= n/2.
inline bool is_nu_extremal_witness(const PartiteGraph& g, VertexSet s, const Rational& nu) {
  if (!s.subset_of(g.vertices())) return false;
  const int n = g.order();
  if (!(Rational(max_induced_degree(g, s)) < nu * nu * n)) return false;
  if (Rational(s.size()) < Rational(n, 2) - nu * n) return false;
  const int meeting = parts_meeting_size(g, s);
  return s.size() <= meeting && Rational(meeting) <= Rational(n, 2);
}

struct ExtremalSearch {
  std::optional<VertexSet> witness;
  bool exhaustive = true;
};

// Exact mode scans sizes from floor(n/2) downward (colex within a size) so the
// witness is a largest one. Above the cap it falls back to a greedy scan over
// unions of consecutive parts, pruning high induced degree; that scan can miss.
inline ExtremalSearch nu_extremal_witness(const PartiteGraph& g, const Rational& nu, int cap = kDefaultExactCap) {
  const int n = g.order();
  ExtremalSearch out;
  const int lo = std::max(1, detail::size_lower(Rational(n, 2) - nu * n));
  const int hi = n / 2;
  if (n <= cap) {
    for (int size = hi; size >= lo && !out.witness; --size) {
      for_each_subset_of_size(g.vertices(), size, [&](VertexSet s) {
        if (is_nu_extremal_witness(g, s, nu)) {
          out.witness = s;
          return false;
        }
        return true;
      });
    }
    return out;
  }
  out.exhaustive = false;
  const Rational induced_cap = nu * nu * n;
  for (int first = 0; first < g.part_count() && !out.witness; ++first) {
    VertexSet s;
    int total = 0;
    for (int i = first; i < g.part_count(); ++i) {
      if (2 * (total + g.part(i).size()) > n) continue;
      total += g.part(i).size();
      s |= g.part(i);
    }
    while (!s.empty() && !(Rational(max_induced_degree(g, s)) < induced_cap)) {
      int worst = s.lowest();
      for (int v : s)
        if ((g.neighbors(v) & s).size() > (g.neighbors(worst) & s).size()) worst = v;
      s.erase(worst);
    }
    if (is_nu_extremal_witness(g, s, nu)) out.witness = s;
  }
  return out;
}

enum class Outcome { robust_expander, nu_extremal, degree_violation, unresolved };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::robust_expander: return "robust-expander";
    case Outcome::nu_extremal: return "nu-extremal";
    case Outcome::degree_violation: return "degree-violation";
    case Outcome::unresolved: return "unresolved";
  }
  return "?";
}

struct ClassifyOptions {
  int cap = kDefaultExactCap;
  bool require_exact = true;  // throw ResourceLimit above the cap instead of sampling
  std::uint64_t seed = 0;
  int samples = 2000;
};

// Outcome of the degree / extremal / expander dichotomy. `unresolved` covers the
// small-n cases the asymptotic argument does not reach: an audit refuted, or the
// cross-check found a non-expanding set.
struct ClassificationVerdict {
  Outcome outcome = Outcome::unresolved;
  DegreeReport degree;
  std::optional<VertexSet> witness;
  Rational robust_nu{0};
  Rational robust_tau{0};
  bool exhaustive = true;
  std::vector<std::string> trace;
  std::vector<std::pair<std::string, bool>> hypotheses;
};

// Which of the parameter relations the asymptotic argument assumes actually hold.
inline std::vector<std::pair<std::string, bool>> hypothesis_report(const ExpanderParams& p, int k, int lambda) {
  const Rational& nu = p.nu;
  const Rational& tau = p.tau;
  const Rational& gamma = p.gamma;
  std::vector<std::pair<std::string, bool>> out;
  out.emplace_back("0 < nu <= tau/2", nu > 0 && nu <= tau / 2);
  out.emplace_back("0 < tau < 1", tau > 0 && tau < 1);
  out.emplace_back("nu <= tau^2 <= 1/4", nu <= tau * tau && tau * tau <= Rational(1, 4));
  out.emplace_back("tau <= gamma/4", tau <= gamma / 4);
  const bool small_nu = (k < 2 || nu <= Rational(4, (k - 1) * (k - 1))) && nu <= gamma * gamma / 4 &&
                        nu <= tau * tau * tau * tau / (4 * k * k);
  out.emplace_back("nu <= min{4/(k-1)^2, gamma^2/4, tau^4/(4k^2)}", small_nu);
  out.emplace_back("nu < min{gamma/6, 1/(2 lambda)}", nu < gamma / 6 && nu < Rational(1, 2 * lambda));
  return out;
}

inline ClassificationVerdict classify(const PartiteGraph& g, const ExpanderParams& params,
                                      const ClassifyOptions& options = {}) {
  const int n = g.order();
  const bool exact = n <= options.cap;
  if (!exact && options.require_exact)
    throw ResourceLimit("classification needs exhaustive audits; n = " + std::to_string(n) + " exceeds cap " +
                        std::to_string(options.cap));
  ClassificationVerdict verdict;
  verdict.exhaustive = exact;
  const PartitionProfile prof = profile(g.partition(), ProfileMode::exact);
  verdict.hypotheses = hypothesis_report(params, g.part_count(), prof.lambda);
  if (2 * prof.partition.size(0) > n) verdict.trace.push_back("note: largest part exceeds n/2 (lambda = 1)");

  verdict.degree = check_degree_condition(g, prof, params.gamma * n);
  if (!verdict.degree.pass) {
    verdict.outcome = Outcome::degree_violation;
    verdict.trace.push_back("degree condition with slack gamma*n fails at part " +
                            std::to_string(verdict.degree.worst_part));
    return verdict;
  }
  verdict.trace.push_back("degree condition with slack gamma*n holds");

  const ExtremalSearch extremal = nu_extremal_witness(g, params.nu, options.cap);
  if (extremal.witness) {
    verdict.outcome = Outcome::nu_extremal;
    verdict.witness = extremal.witness;
    verdict.trace.push_back("nu-extremal witness found" + std::string(exact ? "" : " (greedy search)"));
    return verdict;
  }
  verdict.trace.push_back(exact ? "no nu-extremal set (exhaustive)" : "no nu-extremal set found (greedy search)");

  const AuditMode mode = exact ? AuditMode::exact(options.cap) : AuditMode::sampled(options.seed, options.samples);
  const AuditResult cuts = sparse_cut_audit(g, params.tau, mode);
  if (!cuts.ok()) {
    verdict.witness = cuts.witness;
    verdict.trace.push_back("sparse cut audit refuted");
    return verdict;
  }
  verdict.trace.push_back("sparse cut audit passed");
  const AuditResult near = near_independent_expansion_audit(g, params.nu, params.tau, mode);
  if (!near.ok()) {
    verdict.witness = near.witness;
    verdict.trace.push_back("near-independent expansion audit refuted");
    return verdict;
  }
  verdict.trace.push_back("near-independent expansion audit passed");

  verdict.robust_nu = params.nu * params.nu;
  verdict.robust_tau = params.tau;
  if (exact) {
    const RobustReport check = is_robust_expander(g, verdict.robust_nu, verdict.robust_tau, mode);
    if (!check.expander) {
      verdict.witness = check.witness;
      verdict.trace.push_back("cross-check refuted (nu^2, tau)-robust expansion");
      return verdict;
    }
    verdict.trace.push_back("cross-check confirmed (nu^2, tau)-robust expansion");
  }
  verdict.outcome = Outcome::robust_expander;
  return verdict;
}

}  // namespace mpham
