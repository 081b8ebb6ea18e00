#pragma once

#include <string>

#include "cutoperad/operad.hpp"

namespace cutoperad {

/// Static SVG drawing of a two-dimensional element: the numbered boxes, the
/// cut segments in per-generator stroke styles, and a legend.  Direction 1
/// runs left to right, direction 2 bottom to top.  Throws StructuralError
/// for d != 2.
std::string renderSvg(const Signature& sig, const CutOperadElement& e);

}  // namespace cutoperad
