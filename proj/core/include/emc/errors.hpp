#pragma once

#include <stdexcept>
#include <string>

namespace emc {

// A state variable declaration cannot be laid out (zero or oversized width).
class LayoutError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Programming error in a caller or a model: unknown variable, element or
// value out of range, obligation naming a nonexistent transition, ...
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The run configuration asks for something the model cannot do.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The model raised its err_msg during a callback.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Engine self-check failed (e.g. stage-2 re-firing disagrees with stage 1).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace emc
