#pragma once

#include "yaps/builtins.hpp"
#include "yaps/diagnostic.hpp"
#include "yaps/surface.hpp"

namespace yaps {

/// Reports reads of undeclared variables (E_UNDEF), declared variables that
/// are never used (W_UNUSED) and calls of unknown functions or distributions
/// (W_UNKNOWN_FN). Result is sorted by span.
///
/// A variable counts as used when it is read, appears on the left of a
/// sampling statement, or is assigned. The prior of a declare-and-sample
/// statement does not count as a use. Dependent type variables are visible
/// only inside formal argument types.
Diagnostics check_scopes(const SurfaceModel& model,
                         const Builtins& builtins = Builtins::standard());

}  // namespace yaps
