#pragma once

#include <string>

#include "yaps/ir.hpp"

namespace yaps {

/// Graphical model as a DOT digraph. Nodes are the top-level declarations
/// of the data block (double circles) and of the parameters and
/// transformed parameters blocks (circles). Every sampling statement adds
/// an edge from each node read by its distribution to the sampled
/// variable. Indexed variables collapse to their base; output order is
/// lexicographic.
std::string to_dot(const Program& program, const std::string& graph_name = "model");

}  // namespace yaps
