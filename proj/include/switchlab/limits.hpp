#pragma once

#include <string>

namespace switchlab {

// Resource caps for the exponential parts (realization enumeration and
// Hamiltonian search). Exceeding a cap raises BoundExceededError rather than
// silently truncating.
struct Limits {
  int max_n = 10;                        // largest sequence length to enumerate
  long long max_realizations = 100000;   // cap on |R(d)|
  long long hamilton_budget = 5000000;   // node expansions before "unknown"
};

// Reads key=value lines (max_n, max_realizations, hamilton_budget).
// Unknown keys are an error; '#' starts a comment.
Limits load_config_file(const std::string& path, Limits base = Limits{});

// SWITCHLAB_MAX_N overrides max_n when set.
void apply_env_overrides(Limits& lim);

}  // namespace switchlab
