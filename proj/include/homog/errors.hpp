#pragma once

#include <stdexcept>
#include <string>

namespace homog {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed input text (presentation files, scalar literals, CLI values)
struct parse_error : error {
  using error::error;
};

// structurally invalid request (bad subcommand, wrong flag combination)
struct usage_error : error {
  using error::error;
};

// a computation would exceed the user-supplied work budget
struct budget_error : error {
  using error::error;
};

}  // namespace homog
