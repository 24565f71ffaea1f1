#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schreier/fiber.hpp"
#include "schreier/tower.hpp"

namespace schreier {

// Component of level k+1 minus the preimages of the base of level k.
// Line pieces are numbered along the label's cycle through the basepoint
// (A^1 = A^+, A^2 = A^- on a 3-fold level); transverse pieces by the preimage
// c^{index * m} they hang from.
struct Tag {
  enum class Kind { AtBase, Line, Transverse };

  Kind kind = Kind::AtBase;
  std::uint32_t label = 0;
  std::uint32_t index = 0;
  // Number of pieces of this kind on this label at this level.
  std::uint32_t of = 0;

  // Aplus, Aminus, TA, B3, TB2, AtBase, ...
  std::string name(const Alphabet& alphabet) const;

  friend bool operator==(const Tag&, const Tag&) = default;
};

// Requires x mod |V_k| == v_k. Uses the voltage structure when the tower has
// one and component decomposition of the materialized level otherwise.
Tag classify_level(const Tower& tower, std::size_t k, std::uint64_t v_k, std::uint64_t v_k1);

// Reference implementation: explicit component decomposition after deleting
// the preimages of the base. Needs level k+1 materialized.
Tag classify_level_by_components(const Tower& tower, std::size_t k, std::uint64_t v_k, std::uint64_t v_k1);

enum class Verdict { Special, Dyadic, FlipFlopping, Undetermined };

std::string to_string(Verdict v);

struct ClassificationTrace {
  std::string point;
  std::size_t budget = 0;
  // tags[i] is the tag of v_{i+1} over v_i, i = 0..budget-1.
  std::vector<Tag> tags;
  std::vector<std::string> tag_names;
  Verdict verdict = Verdict::Undetermined;
};

// special: v_budget is the basepoint. Otherwise, over the tail window
// (budget/2, budget]: dyadic when no transverse tag occurs there,
// flipflopping when both halves of the window contain one, undetermined otherwise.
ClassificationTrace classify_fiber_point(FiberPoint& p, std::size_t budget);

}  // namespace schreier
