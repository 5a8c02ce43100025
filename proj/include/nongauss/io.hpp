#pragma once

#include <string>

#include "nongauss/sweeps.hpp"

namespace nongauss {

// Shortest decimal that parses back to the same double, probing upward from
// 12 significant digits.
std::string format_double(double value);

// Write via a temporary file and rename, so failures leave no partial file.
// Throws std::runtime_error on I/O failure.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

// CSV: '#'-prefixed metadata lines, a mandatory header row, LF endings.
std::string to_csv(const SweepResult& result);
SweepResult parse_csv(const std::string& text);

std::string to_json(const SweepResult& result);
SweepResult parse_json(const std::string& text);

}  // namespace nongauss
