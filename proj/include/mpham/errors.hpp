#pragma once

#include <stdexcept>
#include <string>

namespace mpham {

// Malformed input: out-of-range vertices, overlapping sets, mismatched profiles.
struct InvalidArguments : std::invalid_argument {
  explicit InvalidArguments(const std::string& what) : std::invalid_argument(what) {}
};

// An exhaustive search was asked to run above its configured vertex cap.
struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// Partition outside the range a construction is defined for (largest part > n/2).
struct UnsupportedPartition : std::domain_error {
  explicit UnsupportedPartition(const std::string& what) : std::domain_error(what) {}
};

}  // namespace mpham
