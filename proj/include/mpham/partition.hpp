#pragma once

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "mpham/errors.hpp"
#include "mpham/rational.hpp"

namespace mpham {

// A non-increasing list of positive part sizes. Index 0 holds the largest part;
// the mathematical n_i is `size(i - 1)`.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidArguments("partition needs at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw InvalidArguments("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw InvalidArguments("partition parts must be non-increasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  // "4,4,4" -> (4,4,4). Rejects increasing sequences rather than sorting them.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view token = text.substr(start, comma - start);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw InvalidArguments("cannot parse partition '" + std::string(text) + "'");
      parts.push_back(value);
      start = comma + 1;
    }
    return Partition(std::move(parts));
  }

  int n() const { return n_; }
  int k() const { return static_cast<int>(parts_.size()); }
  int size(int index) const { return parts_.at(static_cast<std::size_t>(index)); }
  const std::vector<int>& parts() const { return parts_; }
  // Sum of the `count` largest parts.
  int prefix_sum(int count) const {
    return std::accumulate(parts_.begin(), parts_.begin() + count, 0);
  }
  bool balanced() const { return parts_.front() == parts_.back(); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

enum class ProfileMode { exact, asymptotic };

inline const char* to_string(ProfileMode m) { return m == ProfileMode::exact ? "exact" : "asymptotic"; }

// Threshold parameters of a partition. f_values[i-1] holds f_i for i in [1, mu-1].
// Exact-mode values are integral rationals; asymptotic mode drops floors and ceilings.
struct PartitionProfile {
  Partition partition;
  ProfileMode mode = ProfileMode::exact;
  int lambda = 1;
  int mu = 1;
  std::vector<Rational> f_values;
  Rational f{0};
  Rational g{0};
  Rational h1{0};
  Rational h2{0};
  Rational h{0};
  Rational phi{0};
};

// Least lambda with n_1 + ... + n_lambda >= ceil((n+1)/2).
inline int compute_lambda(const Partition& p) {
  const int target = (p.n() + 2) / 2;
  int sum = 0;
  for (int i = 0; i < p.k(); ++i) {
    sum += p.size(i);
    if (sum >= target) return i + 1;
  }
  return p.k();
}

// Least mu with n_1 + ... + n_mu >= floor((n+1)/2 - n_mu/2) + 1, each candidate
// tested against its own n_mu.
inline int compute_mu(const Partition& p) {
  int sum = 0;
  for (int i = 0; i < p.k(); ++i) {
    sum += p.size(i);
    const int threshold = (p.n() + 1 - p.size(i)) / 2 + 1;
    if (sum >= threshold) return i + 1;
  }
  return p.k();
}

inline PartitionProfile profile(const Partition& p, ProfileMode mode = ProfileMode::exact) {
  PartitionProfile out;
  out.partition = p;
  out.mode = mode;
  out.lambda = compute_lambda(p);
  out.mu = compute_mu(p);
  const int n = p.n();
  const int n_mu = p.size(out.mu - 1);
  const int n_lambda = p.size(out.lambda - 1);

  for (int i = 1; i < out.mu; ++i) out.f_values.emplace_back(p.size(i - 1) + p.prefix_sum(i));
  out.f = out.f_values.empty() ? Rational(0)
                               : *std::max_element(out.f_values.begin(), out.f_values.end());

  if (mode == ProfileMode::exact) {
    const int half_up = (n + 1) / 2;         // ceil(n/2)
    const int half_plus = (n + 2) / 2;       // ceil((n+1)/2)
    out.g = Rational((n + n_mu + 1) / 2);    // ceil((n + n_mu)/2)
    out.h1 = Rational(half_up + n_lambda);
    out.h2 = Rational(half_up + half_plus / out.lambda);
  } else {
    out.g = Rational(n + n_mu, 2);
    out.h1 = Rational(n, 2) + n_lambda;
    out.h2 = Rational(n, 2) + Rational(n, 2 * out.lambda);
  }
  out.h = std::min(out.h1, out.h2);
  out.phi = std::max({out.f, out.g, out.h});
  return out;
}

// All partitions of n into exactly k parts, lexicographically decreasing. With
// cap_half, only those whose largest part is at most floor(n/2).
inline std::vector<Partition> enumerate_partitions(int n, int k, bool cap_half) {
  if (k < 1 || n < 1 || k > n)
    throw InvalidArguments("enumerate_partitions needs 1 <= k <= n (got n=" + std::to_string(n) +
                           ", k=" + std::to_string(k) + ")");
  std::vector<Partition> out;
  std::vector<int> current;
  const int first_cap = cap_half ? n / 2 : n;
  // Fill position by position, trying larger values first.
  auto recurse = [&](auto&& self, int remaining, int slots, int cap) -> void {
    if (slots == 0) {
      if (remaining == 0) out.emplace_back(current);
      return;
    }
    const int hi = std::min(cap, remaining - (slots - 1));
    const int lo = (remaining + slots - 1) / slots;
    for (int v = hi; v >= lo; --v) {
      current.push_back(v);
      self(self, remaining - v, slots - 1, v);
      current.pop_back();
    }
  };
  recurse(recurse, n, k, first_cap);
  return out;
}

}  // namespace mpham
