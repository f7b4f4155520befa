#pragma once

#include <cstdint>
#include <vector>

#include "emc/model.hpp"

namespace emc {

// Replaces states by the model's symmetry representative.
//
// With debug checks on, every canonical state is canonicalized a second time
// and compared. A representative function that is not idempotent still
// yields a correct (if weaker) reduction, so violations are only counted.
class Canonicalizer {
 public:
  Canonicalizer(Model& model, bool debug_checks)
      : model_(model), debug_checks_(debug_checks) {}

  void apply(StateWords state);

  std::uint64_t idempotence_violations() const { return violations_; }

 private:
  Model& model_;
  bool debug_checks_;
  std::vector<Word> again_;
  std::uint64_t violations_ = 0;
};

// One-shot form of Canonicalizer::apply.
void canonicalize(Model& model, StateWords state);

}  // namespace emc
