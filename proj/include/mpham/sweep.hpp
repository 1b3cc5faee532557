#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mpham/constructions.hpp"
#include "mpham/graph.hpp"
#include "mpham/hamiltonicity.hpp"
#include "mpham/partition.hpp"

namespace mpham {

inline constexpr int kDefaultSweepSolverMax = 16;

struct SweepRow {
  std::string partition;
  int lambda = 0;
  int mu = 0;
  Rational f, g, h1, h2, phi;
  std::string case_name;
  std::int64_t min_slack = 0;
  bool certificate_ok = false;
  std::string hamiltonian;  // yes | no | unknown
};

inline SweepRow sweep_row(const Partition& p, int max_n_solver) {
  const auto prof = profile(p);
  const auto built = build_tightness(p);
  SweepRow row;
  row.partition = p.to_string();
  row.lambda = prof.lambda;
  row.mu = prof.mu;
  row.f = prof.f;
  row.g = prof.g;
  row.h1 = prof.h1;
  row.h2 = prof.h2;
  row.phi = prof.phi;
  row.case_name = to_string(built.tcase);
  const auto report = check_degree_condition(built.graph, prof, Rational(-1));
  row.min_slack = *std::min_element(report.slack_per_part.begin(), report.slack_per_part.end());
  row.certificate_ok = verify_certificate(built.graph, built.certificate);
  if (p.n() <= max_n_solver) {
    const auto verdict = find_hamiltonian_cycle(built.graph);
    row.hamiltonian = verdict.outcome == SearchOutcome::found  ? "yes"
                      : verdict.outcome == SearchOutcome::none ? "no"
                                                               : "unknown";
  } else {
    row.hamiltonian = "unknown";
  }
  return row;
}

// Partitions of n with n1 <= n/2, for k parts or (k == 0) every k in [2, n].
inline std::vector<Partition> sweep_partitions(int n, int k) {
  if (n < 2) throw InvalidArguments("sweep needs n >= 2");
  if (k != 0 && (k < 2 || k > n)) throw InvalidArguments("sweep needs n >= k >= 2");
  std::vector<Partition> out;
  const int lo = k == 0 ? 2 : k, hi = k == 0 ? n : k;
  for (int kk = lo; kk <= hi; ++kk)
    for (auto& p : enumerate_partitions(n, kk, true)) out.push_back(std::move(p));
  return out;
}

// Rows come back in partition order whatever the worker count.
inline std::vector<SweepRow> run_sweep(int n, int k = 0, int max_n_solver = kDefaultSweepSolverMax, int jobs = 1) {
  const auto parts = sweep_partitions(n, k);
  std::vector<SweepRow> rows(parts.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < parts.size();) {
      try {
        rows[i] = sweep_row(parts[i], max_n_solver);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(parts.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "partition,lambda,mu,f,g,h1,h2,phi,case,min_slack,certificate_ok,hamiltonian\n";
  for (const auto& r : rows) {
    out += '"' + r.partition + "\",";
    out += std::to_string(r.lambda) + ',' + std::to_string(r.mu) + ',';
    for (const auto* v : {&r.f, &r.g, &r.h1, &r.h2, &r.phi}) out += to_string(*v) + ',';
    out += '"' + r.case_name + "\",";
    out += std::to_string(r.min_slack) + ',';
    out += r.certificate_ok ? "true," : "false,";
    out += r.hamiltonian + '\n';
  }
  return out;
}

}  // namespace mpham
