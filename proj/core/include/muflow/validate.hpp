#pragma once

#include <optional>
#include <string>

#include "muflow/graph.hpp"
#include "muflow/realization.hpp"

namespace muflow {

struct ValidationReport {
  std::optional<VertexId> violating_vertex;
  std::string reason;

  bool ok() const { return !violating_vertex.has_value(); }
};

// Checks the Eulerian condition at every inner vertex and every complex
// terminal. Structural mismatches (a terminal without subtree, a subtree for a
// non-terminal, no terminals) throw InputError instead.
ValidationReport validate_instance(const Network& net,
                                   const RealizationTree& real);

}  // namespace muflow
