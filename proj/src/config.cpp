#include "repst/config.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

namespace repst {

namespace {

void read_env(const char* name, std::size_t& field) {
  const char* v = std::getenv(name);
  if (!v || !*v) return;
  try {
    std::size_t pos = 0;
    unsigned long long x = std::stoull(v, &pos);
    if (pos == std::string(v).size()) field = static_cast<std::size_t>(x);
  } catch (const std::exception&) {
    // Malformed values keep the default.
  }
}

std::mutex g_mutex;
Limits g_limits = Limits::from_env();

}  // namespace

Limits Limits::from_env() {
  Limits l;
  read_env("REPST_ENUM_LIMIT", l.enumeration_limit);
  read_env("REPST_HOM_LIMIT", l.hom_basis_limit);
  read_env("REPST_IDEM_LIMIT", l.distinct_idem_limit);
  read_env("REPST_EQUIV_DIM_LIMIT", l.equivariant_dim_limit);
  read_env("REPST_FIBER_BUDGET", l.fiber_entry_budget);
  return l;
}

const Limits& limits() { return g_limits; }

void set_limits(const Limits& l) {
  std::lock_guard lock(g_mutex);
  g_limits = l;
}

}  // namespace repst
