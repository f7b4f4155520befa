#include "emc/symmetry.hpp"

#include <algorithm>

namespace emc {

void Canonicalizer::apply(StateWords state) {
  model_.symmetry_representative(state);
  raise_if_err_msg(model_);
  if (!debug_checks_) return;

  again_.assign(state.begin(), state.end());
  model_.symmetry_representative(again_);
  raise_if_err_msg(model_);
  if (!std::equal(again_.begin(), again_.end(), state.begin())) ++violations_;
}

void canonicalize(Model& model, StateWords state) {
  Canonicalizer(model, false).apply(state);
}

}  // namespace emc
