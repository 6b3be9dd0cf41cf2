#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace repst {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violations: mismatched boundaries, bad sizes, non-subgroups.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration or memory budget would be exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Division by zero or evaluation at a pole.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Runtime limits. Defaults can be overridden by environment variables
/// (see Limits::from_env) so the CLI and tests share one source of truth.
struct Limits {
  std::size_t max_ground = 64;           // points per partition
  std::size_t enumeration_limit = 12;    // largest n for enumerate_partitions
  std::size_t hom_basis_limit = 4140;    // Bell(8)
  std::size_t distinct_idem_limit = 5;   // largest k for e_k
  std::size_t equivariant_dim_limit = 300;
  std::size_t fiber_entry_budget = 4'000'000;  // n^(a+b) cap for fiber matrices
  std::size_t subgroup_degree_limit = 6;       // exhaustive classification
  std::size_t lemma_degree_limit = 7;
  std::size_t sign_degree_limit = 8;

  /// Reads REPST_ENUM_LIMIT, REPST_HOM_LIMIT, REPST_IDEM_LIMIT,
  /// REPST_EQUIV_DIM_LIMIT and REPST_FIBER_BUDGET.
  static Limits from_env();
};

/// Process-wide limits. Read once from the environment on first use.
const Limits& limits();

/// Replaces the process-wide limits (tests, CLI overrides).
void set_limits(const Limits& l);

inline constexpr const char* kVersion = "0.3.0";

}  // namespace repst
