#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schreier/tower.hpp"
#include "schreier/word.hpp"

namespace schreier {

struct PolicySpec {
  enum class Kind { Id, Q, QPrime, Dyadic, Word, Random, Far, Line, FlipFlop };

  Kind kind = Kind::Id;
  std::uint64_t j = 0;    // dyadic: starting level
  std::uint64_t ell = 0;  // dyadic: exponent at level j
  std::string word;       // word: fixed thread w_k = word
  std::uint64_t seed = 0; // random
  std::string label = "a";  // line: cycle label

  // Canonical text form, accepted back by make_policy.
  std::string to_string() const;

  friend bool operator==(const PolicySpec&, const PolicySpec&) = default;
};

// Accepts: id, q, qprime, dyadic:J:L (or dyadic(J,L)), word:W, random:SEED
// (or random(SEED)), far, line:LABEL, flipflop. Throws ConfigError listing the
// known names on anything else.
PolicySpec make_policy(std::string_view text);
std::vector<std::string> policy_names();

// A point of the inverse limit, realized level by level on demand.
//
//   id        basepoint at every level
//   q/qprime  q_j = c_j^{L} q_{j-1}, c_j alternating a,b (b,a for qprime),
//             L the c_j-cycle length through the base one level down
//   dyadic    a^{l_k}: l_k = l_J mod L_k below J, then l_m = l_{m-1} + L_{m-1}
//             at even m and l_m = l_{m-1} at odd m
//   word      the fixed word w at every level
//   random    uniform preimage at each level
//   far       preimage farthest from the basepoint
//   line      a^{l_k} with l_k the lift of l_{k-1} farthest from the base
//   flipflop  transverse preimage at even steps, base-sheet line preimage at odd
class FiberPoint {
 public:
  FiberPoint(Tower tower, PolicySpec policy);

  const Tower& tower() const { return tower_; }
  const PolicySpec& policy() const { return policy_; }
  std::string id() const { return policy_.to_string(); }

  // Throws BudgetExhausted beyond the tower depth.
  std::uint64_t vertex(std::size_t k);
  std::size_t realized() const { return vertices_.size(); }
  const std::vector<std::uint64_t>& prefix() const { return vertices_; }

  // w_k with v_k = trace(id_k, w_k), for word-thread policies.
  std::optional<Word> word(std::size_t k);

 private:
  void extend();
  std::uint64_t cycle_length(std::size_t k, Letter g) const;

  Tower tower_;
  PolicySpec policy_;
  std::vector<std::uint64_t> vertices_;
  // q/qprime: block added at level k+1 is blocks_[k] (letter, exponent).
  std::vector<std::pair<Letter, std::uint64_t>> blocks_;
  // dyadic/line: exponent per level.
  std::vector<std::uint64_t> ells_;
  std::mt19937_64 rng_;
  Word fixed_word_;
};

}  // namespace schreier
