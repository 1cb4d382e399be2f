#include "muflow/validate.hpp"

namespace muflow {

ValidationReport validate_instance(const Network& net,
                                   const RealizationTree& real) {
  if (net.terminals().empty()) {
    throw InputError(InputErrorCode::kInvalidArgument,
                     "network has no terminals");
  }
  for (VertexId t : net.terminals()) {
    if (!real.has_subtree(t)) {
      throw InputError(
          InputErrorCode::kDanglingReference,
          "terminal " + std::to_string(t.value()) + " has no subtree");
    }
  }
  for (const auto& [terminal, sub] : real.subtrees()) {
    if (!net.graph().has_vertex(terminal) || !net.is_terminal(terminal)) {
      throw InputError(
          InputErrorCode::kDanglingReference,
          "subtree given for non-terminal " + std::to_string(terminal.value()));
    }
  }
  for (VertexId v : net.graph().vertices()) {
    if (is_eulerian_at(net, v)) continue;
    if (!net.is_terminal(v)) {
      return {v,
              "inner vertex " + std::to_string(v.value()) + " is not Eulerian"};
    }
    if (classify_terminal(real, v) == TerminalKind::kComplex) {
      return {v, "complex terminal " + std::to_string(v.value()) +
                     " is not Eulerian"};
    }
  }
  return {};
}

}  // namespace muflow
