#pragma once

#include <set>
#include <string>
#include <vector>

#include "yaps/ir.hpp"

namespace yaps {

/// Identifiers read by a node: every variable occurrence, minus loop
/// variables and local declarations bound inside it. Function and
/// distribution names are call targets, not variables, and never appear.
/// A plain `=` assignment does not read its target variable, though it does
/// read the target's index expressions; a sampling statement reads its
/// left-hand side.
std::set<std::string> free_vars(const Expr& expr);
std::set<std::string> free_vars(const Stmt& stmt);
/// Treats the list as one scope: names declared in it are bound from the
/// declaration onwards.
std::set<std::string> free_vars(const std::vector<Stmt>& stmts);
std::set<std::string> free_vars(const DistCall& dist);

}  // namespace yaps
