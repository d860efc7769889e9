#pragma once

#include <variant>
#include <vector>

#include "hott/lexer.hpp"
#include "hott/raw.hpp"

namespace hott {

// Both entry points report the first syntax error only.
std::variant<std::vector<Decl>, Diagnostic> parse_module(const std::string& source,
                                                         const std::string& file);
std::variant<RawPtr, Diagnostic> parse_term(const std::string& source, const std::string& file);

} // namespace hott
