#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emc/state_layout.hpp"

namespace emc {

// Sink for a model's stubborn-set obligation rules: "if the queried
// transition is in the stubborn set, these transitions must be too".
class ObligationEmitter {
 public:
  template <class... More>
  void stb(unsigned t, More... more) {
    collected_.push_back(t);
    (collected_.push_back(static_cast<unsigned>(more)), ...);
  }
  void stb_all() { all_ = true; }

  bool all() const { return all_; }
  const std::vector<unsigned>& collected() const { return collected_; }
  void clear() {
    collected_.clear();
    all_ = false;
  }

 private:
  std::vector<unsigned> collected_;
  bool all_ = false;
};

// Optional model capabilities.
enum class Capability : std::uint8_t {
  check_state = 1u << 0,
  check_deadlock = 1u << 1,
  may_progress = 1u << 2,
  must_progress = 1u << 3,
  stubborn = 1u << 4,
  symmetry = 1u << 5,
};

class Capabilities {
 public:
  constexpr Capabilities() = default;

  // Declares `c` as implemented; `on_by_default` makes the matching check
  // run unless the configuration switches it off.
  constexpr Capabilities& provide(Capability c, bool on_by_default = false) {
    provided_ |= bit(c);
    if (on_by_default) defaults_ |= bit(c);
    return *this;
  }
  constexpr bool provides(Capability c) const { return (provided_ & bit(c)) != 0; }
  constexpr bool on_by_default(Capability c) const { return (defaults_ & bit(c)) != 0; }

 private:
  static constexpr unsigned bit(Capability c) { return static_cast<unsigned>(c); }
  unsigned provided_ = 0;
  unsigned defaults_ = 0;
};

// The contract a model under verification implements. The engine owns the
// state words; every callback receives the current state explicitly.
//
// Transitions are numbered 0..m-1, where m is what init() returns. fire()
// must be deterministic and must leave the state untouched when it returns
// false. A model may call set_err_msg() from any callback to abort the run.
class Model {
 public:
  virtual ~Model() = default;

  virtual std::string name() const = 0;
  virtual std::vector<VarDecl> declarations() const = 0;

  // Called once with the layout built from declarations(), before init().
  virtual void bind(const StateLayout& layout) = 0;

  // Receives the all-zero state; may adjust it. Returns the number of
  // transitions.
  virtual unsigned init(StateWords state) = 0;

  virtual bool fire(StateWords state, unsigned t) = 0;
  virtual std::string format_state(ConstStateWords state) const = 0;

  virtual Capabilities capabilities() const { return {}; }

  virtual std::optional<std::string_view> check_state(ConstStateWords) {
    return std::nullopt;
  }
  virtual std::optional<std::string_view> check_deadlock(ConstStateWords) {
    return std::nullopt;
  }
  virtual bool is_may_progress(ConstStateWords) { return false; }
  virtual bool is_must_progress(ConstStateWords) { return false; }
  virtual void next_stubborn(ConstStateWords, unsigned /*t*/,
                             ObligationEmitter& /*out*/) {}
  virtual void symmetry_representative(StateWords) {}

  bool has_err_msg() const { return err_msg_.has_value(); }
  const std::string& err_msg() const { return *err_msg_; }
  void clear_err_msg() { err_msg_.reset(); }

 protected:
  void set_err_msg(std::string msg) { err_msg_ = std::move(msg); }

 private:
  std::optional<std::string> err_msg_;
};

[[noreturn]] void throw_model_error(const Model& model);

// Throws ModelError if the model raised err_msg.
inline void raise_if_err_msg(const Model& model) {
  if (model.has_err_msg()) throw_model_error(model);
}

}  // namespace emc
