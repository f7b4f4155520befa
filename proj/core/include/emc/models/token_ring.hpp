#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "emc/model.hpp"

namespace emc::models {

enum class TokenRingVariant {
  correct,
  // server case 0 forwards a wait request even when the next server already
  // holds the token
  faulty_guard,
  // a server leaving local state 2 keeps the token and returns to state 1
  modified_progress,
  // a waiting server admits its customer without holding the token
  broken_mutex,
};

TokenRingVariant parse_token_ring_variant(std::string_view name);
std::string_view to_string(TokenRingVariant v);

// Demand-driven token ring: n customers, n servers, one token.
//
// Customer i: 0 idle, 1 requested, 2 critical, 3 terminated.
// Server i:   0 idle, 1 waiting for token, 2 waiting for customer.
// Transitions: 0..n-1 customer request/leave, n..2n-1 customer terminate,
// 2n..3n-1 servers. Server 1 holds the token initially.
//
// With symm_must the state also tracks c0now, the current position of the
// original customer 0 under symmetry rotations.
class TokenRing final : public Model {
 public:
  TokenRing(unsigned n, TokenRingVariant variant = TokenRingVariant::correct,
            bool symm_must = false);

  std::string name() const override { return "tokenring"; }
  std::vector<VarDecl> declarations() const override;
  void bind(const StateLayout& layout) override;
  unsigned init(StateWords state) override;
  bool fire(StateWords state, unsigned t) override;
  std::string format_state(ConstStateWords state) const override;
  Capabilities capabilities() const override;

  std::optional<std::string_view> check_state(ConstStateWords state) override;
  std::optional<std::string_view> check_deadlock(ConstStateWords state) override;
  bool is_must_progress(ConstStateWords state) override;
  void next_stubborn(ConstStateWords state, unsigned t,
                     ObligationEmitter& out) override;
  void symmetry_representative(StateWords state) override;

  unsigned n() const { return n_; }
  TokenRingVariant variant() const { return variant_; }
  bool symm_must() const { return symm_must_; }

  // Field accessors, valid after bind(). Tests use these to build states.
  const VarRef& customer() const { return C_; }
  const VarRef& server() const { return S_; }
  const VarRef& token() const { return T_; }
  // Only meaningful with symm_must.
  const VarRef& c0now() const { return c0now_; }
  unsigned customer0_index(ConstStateWords state) const;

 private:
  unsigned next(unsigned i) const { return (i + 1) % n_; }
  unsigned prev(unsigned i) const { return (i + n_ - 1) % n_; }

  bool fire_server(StateWords s, unsigned i);
  bool fire_customer(StateWords s, unsigned t);

  unsigned n_;
  TokenRingVariant variant_;
  bool symm_must_;
  VarRef C_, S_, T_, c0now_;
  std::vector<Word> rotation_scratch_;
};

}  // namespace emc::models
