#pragma once

#include <stdexcept>
#include <string>

namespace gfg {

// Malformed input: bad letters, rank mismatches, violated preconditions.
struct input_error : std::invalid_argument {
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A configured resource cap was hit. Deliberately distinct from input_error:
// hitting a budget is never a mathematical verdict.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gfg
