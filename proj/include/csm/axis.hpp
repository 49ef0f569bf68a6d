#pragma once

#include <string_view>

#include "csm/types.hpp"

namespace csm {

/// One of the six single-spin eigenstates of the Pauli matrices.
enum class Axis { PlusX, MinusX, PlusY, MinusY, PlusZ, MinusZ };

/// Components of a single-spin state along |+z> and |-z>.
struct Spinor {
  Complex up;
  Complex down;
};

/// Fixed phase conventions: |+x> = (1,1)/sqrt2, |-x> = (1,-1)/sqrt2,
/// |+y> = (1,i)/sqrt2, |-y> = (1,-i)/sqrt2, |+z> = (1,0), |-z> = (0,1).
Spinor spinor(Axis axis) noexcept;

Axis opposite(Axis axis) noexcept;

/// Accepts "+x", "-x", "x" (= +x), case-insensitive.
Axis parse_axis(std::string_view text);

std::string_view axis_name(Axis axis) noexcept;

}  // namespace csm
