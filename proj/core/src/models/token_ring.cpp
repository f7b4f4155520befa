#include "emc/models/token_ring.hpp"

#include <vector>

#include "emc/errors.hpp"

namespace emc::models {

TokenRingVariant parse_token_ring_variant(std::string_view name) {
  if (name == "correct") return TokenRingVariant::correct;
  if (name == "faulty-guard" || name == "faulty_guard") {
    return TokenRingVariant::faulty_guard;
  }
  if (name == "modified-progress" || name == "modified_progress") {
    return TokenRingVariant::modified_progress;
  }
  if (name == "broken-mutex" || name == "broken_mutex") {
    return TokenRingVariant::broken_mutex;
  }
  throw ConfigError("unknown token ring variant '" + std::string(name) + "'");
}

std::string_view to_string(TokenRingVariant v) {
  switch (v) {
    case TokenRingVariant::correct: return "correct";
    case TokenRingVariant::faulty_guard: return "faulty-guard";
    case TokenRingVariant::modified_progress: return "modified-progress";
    case TokenRingVariant::broken_mutex: return "broken-mutex";
  }
  return "?";
}

TokenRing::TokenRing(unsigned n, TokenRingVariant variant, bool symm_must)
    : n_(n), variant_(variant), symm_must_(symm_must) {
  if (n < 2) throw ConfigError("token ring needs n >= 2");
  // c0now keeps the default 8-bit width
  if (symm_must && n > 256) {
    throw ConfigError("token ring with symm_must supports n <= 256");
  }
}

std::vector<VarDecl> TokenRing::declarations() const {
  std::vector<VarDecl> decls = {{"C", n_, 2}, {"S", n_, 2}, {"T", n_, 1}};
  if (symm_must_) decls.push_back({"c0now", 1, 8});
  return decls;
}

void TokenRing::bind(const StateLayout& layout) {
  C_ = layout.var("C");
  S_ = layout.var("S");
  T_ = layout.var("T");
  if (symm_must_) c0now_ = layout.var("c0now");
}

Capabilities TokenRing::capabilities() const {
  return Capabilities()
      .provide(Capability::check_state, true)
      .provide(Capability::check_deadlock, true)
      .provide(Capability::must_progress)
      .provide(Capability::stubborn)
      .provide(Capability::symmetry);
}

unsigned TokenRing::init(StateWords s) {
  T_.set(s, 1, 1);
  return 3 * n_;
}

bool TokenRing::fire(StateWords s, unsigned t) {
  if (t >= 2 * n_) return fire_server(s, t - 2 * n_);
  return fire_customer(s, t);
}

bool TokenRing::fire_server(StateWords s, unsigned i) {
  const auto go = [&](Word local) {
    S_.set(s, i, local);
    return true;
  };
  const unsigned nx = next(i);

  switch (S_.get(s, i)) {
    case 0: {
      const bool next_waits = S_.get(s, nx) == 1;
      const bool guard = variant_ == TokenRingVariant::faulty_guard
                             ? next_waits
                             : next_waits && !T_.get(s, nx);
      if (C_.get(s, i) == 1 || guard) return go(1);
      return false;
    }
    case 1:
      if (variant_ == TokenRingVariant::broken_mutex && C_.get(s, i) == 1) {
        C_.set(s, i, 2);
        return go(2);
      }
      if (!T_.get(s, i)) return false;
      if (C_.get(s, i) == 1) {
        C_.set(s, i, 2);
        return go(2);
      }
      if (S_.get(s, nx) == 1) {
        T_.set(s, i, 0);
        T_.set(s, nx, 1);
        return go(0);
      }
      return false;
    case 2:
      if (C_.get(s, i) == 2) return false;
      if (variant_ == TokenRingVariant::modified_progress) return go(1);
      T_.set(s, i, 0);
      T_.set(s, nx, 1);
      return go(0);
    default:
      set_err_msg("Illegal local state");
      return false;
  }
}

bool TokenRing::fire_customer(StateWords s, unsigned t) {
  if (t >= n_) {
    const unsigned i = t - n_;
    if (C_.get(s, i) == 0) {
      C_.set(s, i, 3);
      return true;
    }
    return false;
  }
  switch (C_.get(s, t)) {
    case 0:
      C_.set(s, t, 1);
      return true;
    case 2:
      C_.set(s, t, 0);
      return true;
    default:
      return false;
  }
}

std::string TokenRing::format_state(ConstStateWords s) const {
  static constexpr char kCustomer[] = {'-', 'R', 'C', ' '};
  static constexpr char kServer[] = {'i', 'w', 't'};
  std::string line;
  line.reserve(3 * n_);
  for (unsigned i = 0; i < n_; ++i) {
    const Word c = C_.get(s, i);
    const Word v = S_.get(s, i);
    line += kCustomer[c];
    line += v < 3 ? kServer[v] : '?';
    line += T_.get(s, i) ? '*' : ' ';
  }
  return line;
}

std::optional<std::string_view> TokenRing::check_state(ConstStateWords s) {
  unsigned critical = 0;
  for (unsigned i = 0; i < n_; ++i) {
    if (C_.get(s, i) == 2) ++critical;
  }
  if (critical >= 2) return "Mutual exclusion violated";
  return std::nullopt;
}

std::optional<std::string_view> TokenRing::check_deadlock(ConstStateWords s) {
  for (unsigned i = 0; i < n_; ++i) {
    if (C_.get(s, i) != 3) return "Customer not terminated";
  }
  return std::nullopt;
}

unsigned TokenRing::customer0_index(ConstStateWords s) const {
  return symm_must_ ? static_cast<unsigned>(c0now_.get(s)) : 0;
}

bool TokenRing::is_must_progress(ConstStateWords s) {
  return C_.get(s, customer0_index(s)) != 1;
}

void TokenRing::next_stubborn(ConstStateWords s, unsigned t,
                              ObligationEmitter& out) {
  if (t >= 2 * n_) {
    const unsigned i = t - 2 * n_;
    const unsigned nx = next(i);
    switch (S_.get(s, i)) {
      case 0: {
        const bool next_waits = S_.get(s, nx) == 1;
        const bool guard = variant_ == TokenRingVariant::faulty_guard
                               ? next_waits
                               : next_waits && !T_.get(s, nx);
        if (C_.get(s, i) == 1 || guard) return;
        out.stb(i, nx + 2 * n_);
        return;
      }
      case 1:
        if (!T_.get(s, i)) {
          out.stb(prev(i) + 2 * n_);
          return;
        }
        if (C_.get(s, i) == 1) return;
        if (S_.get(s, nx) == 1) {
          out.stb(i);
          return;
        }
        out.stb(i, nx + 2 * n_);
        return;
      case 2:
        if (C_.get(s, i) == 2) out.stb(i);
        return;
      default:
        return;
    }
  }

  if (t >= n_) {
    out.stb(t - n_);
    return;
  }
  switch (C_.get(s, t)) {
    case 0: out.stb(t + n_, t + 2 * n_); return;
    case 1: out.stb(t + 2 * n_); return;
    case 2: out.stb_all(); return;
    default: return;
  }
}

void TokenRing::symmetry_representative(StateWords s) {
  unsigned holder = 0;
  while (holder < n_ && !T_.get(s, holder)) ++holder;
  if (holder == n_) {
    set_err_msg("No server has the token");
    return;
  }
  const unsigned shift = prev(holder);
  if (shift == 0) return;

  std::vector<Word>& rotated = rotation_scratch_;
  rotated.resize(n_);
  for (const VarRef* v : {&C_, &S_, &T_}) {
    for (unsigned j = 0; j < n_; ++j) rotated[j] = v->get(s, (shift + j) % n_);
    for (unsigned j = 0; j < n_; ++j) v->set(s, j, rotated[j]);
  }
  if (symm_must_) c0now_.set(s, (c0now_.get(s) + n_ - shift) % n_);
}

}  // namespace emc::models
