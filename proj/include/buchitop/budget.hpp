#pragma once

#include <cstdint>

#include "buchitop/errors.hpp"

namespace buchitop {

/// State budget for constructions with worst-case exponential output
/// (complementation and everything built on it). Exceeding the cap raises
/// BudgetExceeded instead of silently truncating.
struct Budget {
  std::uint64_t max_states = 1'000'000;

  void charge(std::uint64_t states, const char* where) const {
    if (states > max_states)
      throw BudgetExceeded(std::string(where) + ": state budget exceeded (" +
                           std::to_string(states) + " > " + std::to_string(max_states) + ")");
  }
};

} // namespace buchitop
