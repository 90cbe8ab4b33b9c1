#pragma once

#include "skeinrep/diagram.hpp"

namespace skeinrep {

/// Throws InvalidDiagram on any defect except an inadmissible vertex.
void check_evaluable(const GraphDiagram& d, const Level& L);

}  // namespace skeinrep
