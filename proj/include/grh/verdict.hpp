#pragma once

#include <optional>

namespace grh {

enum class Stability { Hurwitz, NotHurwitz, Inconclusive };

struct StabilityVerdict {
  Stability status = Stability::Inconclusive;
  // Least k whose pivot is not classified positive.
  std::optional<int> first_failing_index;
  // Set when the deciding pivot is exactly zero: the polynomial has a root
  // on or right of the imaginary axis, but the criterion alone cannot tell
  // which.
  bool marginal = false;
};

const char* to_string(Stability s);

}  // namespace grh
