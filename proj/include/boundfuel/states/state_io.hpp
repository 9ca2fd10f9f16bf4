#pragma once

#include <string>

#include "boundfuel/core/operators.hpp"

namespace boundfuel {

/// {"dims": [...], "re": [[...]], "im": [[...]]}, row-major.
std::string state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const std::string& text);

}  // namespace boundfuel
