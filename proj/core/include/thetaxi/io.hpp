#pragma once

#include <string>

#include "thetaxi/types.hpp"

namespace thetaxi {

/// Serialize as "a+bi" / "a-bi" with 17 significant digits (lossless).
std::string format_complex(Complex value);

/// Parse "a+bi", "a", "bi", "i", "-i" (also accepts a trailing 'j').
/// Throws DomainError "MalformedComplex" on anything else.
Complex parse_complex(const std::string& text);

}  // namespace thetaxi
