#pragma once

#include <cstdint>
#include <vector>

#include "emc/model.hpp"
#include "emc/state_layout.hpp"

namespace emc {

struct StubbornSelection {
  bool terminal = false;
  std::vector<unsigned> members;  // sorted; the whole closure
  std::vector<unsigned> enabled;  // sorted; members that are enabled
};

// Computes basic strong stubborn sets from a model's next_stubborn rules.
//
// For a state, every transition is trial-fired (and the state restored) to
// find the enabled ones. For each enabled root, in increasing order, the
// closure of {root} under the obligations emitted in this state is built by
// depth-first traversal; obligations are evaluated at most once per
// transition per state. The closure with the fewest enabled members wins,
// ties going to the lowest root. stb_all() anywhere makes the closure the
// full transition set.
//
// Holds scratch buffers; one selector per exploration thread.
class StubbornSelector {
 public:
  StubbornSelector(Model& model, unsigned transitions, bool debug_checks);

  StubbornSelection select(ConstStateWords state);

  // Smallest set containing root and closed under the obligations emitted
  // in `state`. Sorted.
  std::vector<unsigned> closure(ConstStateWords state, unsigned root);

 private:
  void begin_state(ConstStateWords state);
  const std::vector<unsigned>* obligations(unsigned t);  // nullptr = all
  // Returns false when the traversal hit stb_all(). Stops early once the
  // enabled count exceeds `budget`.
  bool traverse(unsigned root, std::size_t budget, std::size_t& enabled_count);
  void check_closure(const std::vector<unsigned>& members);

  Model& model_;
  unsigned transitions_;
  bool debug_checks_;

  ConstStateWords state_;
  std::vector<Word> scratch_;
  std::vector<char> enabled_;
  ObligationEmitter emitter_;

  // memoized emissions of the current state
  std::vector<std::uint32_t> memo_stamp_;
  std::vector<char> memo_all_;
  std::vector<std::vector<unsigned>> memo_;
  std::uint32_t stamp_ = 0;

  std::vector<std::uint32_t> visit_stamp_;
  std::uint32_t visit_ = 0;
  std::vector<unsigned> stack_;
  std::vector<unsigned> members_;
};

}  // namespace emc
