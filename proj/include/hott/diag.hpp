#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hott {

struct Span {
  uint32_t line = 0; // 1-based, 0 when unknown
  uint32_t col = 0;  // 1-based byte column
  uint32_t len = 0;
};

// Ordered by the exit-code severity ranking the driver applies.
enum class DiagKind : uint8_t { Type, Budget, Parse, Io };

struct Diagnostic {
  std::string file;
  Span span;
  std::string message;
  std::vector<std::string> notes; // rendered indented beneath the main line
  DiagKind kind = DiagKind::Type;

  std::string render() const {
    std::string out = file + ":" + std::to_string(span.line) + ":" + std::to_string(span.col) +
                      ": error: " + message;
    for (const auto& n : notes) out += "\n  " + n;
    return out;
  }
};

} // namespace hott
