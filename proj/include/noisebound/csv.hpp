#pragma once

#include <charconv>
#include <cmath>
#include <initializer_list>
#include <ostream>
#include <string>

#include "noisebound/errors.hpp"

namespace noisebound {

inline void write_csv_header(std::ostream& out, std::initializer_list<const char*> columns) {
  bool first = true;
  for (const char* c : columns) {
    if (!first) out << ',';
    out << c;
    first = false;
  }
  out << '\n';
}

// Shortest round-trip formatting; NaN and infinities are refused.
inline std::string format_number(double value) {
  if (!std::isfinite(value)) throw ComputationError("refusing to serialize a non-finite number");
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

inline void write_csv_row(std::ostream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out << ',';
    out << format_number(v);
    first = false;
  }
  out << '\n';
}

}  // namespace noisebound
