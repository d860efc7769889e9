#pragma once

#include <set>
#include <string>

#include "hott/term.hpp"

namespace hott {

// Renders kernel syntax back to the surface grammar with minimal parentheses.
// Free variables are named by their context hints; binder hints are freshened
// against everything in scope plus the given global names, so the output
// reparses and re-elaborates to a structurally equal term.
std::string pretty_print(const TermPtr& t, const Context& ctx,
                         const std::set<std::string>& globals = {});

} // namespace hott
