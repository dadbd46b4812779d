#pragma once

#include <json.hpp>

#include "shiftmon/monoid.hpp"
#include "shiftmon/presentations.hpp"

namespace shiftmon {

// {"generators":[...], "betti_elements":[...],
//  "relations":[{"betti":b, "left":[...], "right":[...]}, ...]}
nlohmann::ordered_json presentation_to_json(const NumericalMonoid& m,
                                            const Presentation& p);

// Reads the "relations" array; Betti tags are recomputed from the generators.
Presentation presentation_from_json(const nlohmann::json& j,
                                    const NumericalMonoid& m);

}  // namespace shiftmon
