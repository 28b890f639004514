#pragma once

#include <string>
#include <string_view>

#include "shiftfact/complex.hpp"
#include "shiftfact/rational.hpp"

namespace shiftfact {

/// Shortest "%.15g" rendering; "-0" is printed as "0".
std::string format_real(double v, int digits = 15);

/// "a", "bi" or "a+bi" / "a-bi" with format_real for both parts.
std::string format_complex(Complex v, int digits = 15);

/// Parses complex literals of the form "a+bi" with optional parts:
/// "3", "-2.5", "1e-3", "2i", "-i", "1-2i", "0.5+1e2i". A real part may
/// also be an exact fraction "p/q".
Complex parse_complex(std::string_view text);

/// True when `text` is an integer or a "p/q" fraction (no decimal point,
/// exponent or imaginary unit), i.e. it denotes an exact rational.
bool looks_rational(std::string_view text);

}  // namespace shiftfact
