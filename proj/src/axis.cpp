#include "csm/axis.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace csm {

Spinor spinor(Axis axis) noexcept {
  constexpr double r = 0.70710678118654752440;
  switch (axis) {
    case Axis::PlusX: return {{r, 0.0}, {r, 0.0}};
    case Axis::MinusX: return {{r, 0.0}, {-r, 0.0}};
    case Axis::PlusY: return {{r, 0.0}, {0.0, r}};
    case Axis::MinusY: return {{r, 0.0}, {0.0, -r}};
    case Axis::PlusZ: return {{1.0, 0.0}, {0.0, 0.0}};
    case Axis::MinusZ: return {{0.0, 0.0}, {1.0, 0.0}};
  }
  return {{1.0, 0.0}, {0.0, 0.0}};
}

Axis opposite(Axis axis) noexcept {
  switch (axis) {
    case Axis::PlusX: return Axis::MinusX;
    case Axis::MinusX: return Axis::PlusX;
    case Axis::PlusY: return Axis::MinusY;
    case Axis::MinusY: return Axis::PlusY;
    case Axis::PlusZ: return Axis::MinusZ;
    case Axis::MinusZ: return Axis::PlusZ;
  }
  return axis;
}

Axis parse_axis(std::string_view text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  if (t.size() == 1) t.insert(t.begin(), '+');
  if (t == "+x") return Axis::PlusX;
  if (t == "-x") return Axis::MinusX;
  if (t == "+y") return Axis::PlusY;
  if (t == "-y") return Axis::MinusY;
  if (t == "+z") return Axis::PlusZ;
  if (t == "-z") return Axis::MinusZ;
  throw std::invalid_argument("unknown axis '" + std::string(text) + "'");
}

std::string_view axis_name(Axis axis) noexcept {
  switch (axis) {
    case Axis::PlusX: return "+x";
    case Axis::MinusX: return "-x";
    case Axis::PlusY: return "+y";
    case Axis::MinusY: return "-y";
    case Axis::PlusZ: return "+z";
    case Axis::MinusZ: return "-z";
  }
  return "?";
}

}  // namespace csm
