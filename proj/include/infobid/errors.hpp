#pragma once

#include <stdexcept>
#include <string>

namespace infobid {

// Invalid or inconsistent configuration: mismatched grids, missing
// assignments, malformed weights.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A requested object does not exist: empty feasible set, no deviation
// class, unbounded fee extraction.
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace infobid
