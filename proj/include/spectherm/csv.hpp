#pragma once

#include <string>
#include <vector>

namespace spectherm {

// Fixed CSV number format: 9 significant digits, '.' decimal separator.
std::string csv_number(double v);

// Shortest exact decimal representation (round-trips through parsing).
std::string exact_number(double v);

std::string join_csv(const std::vector<std::string>& fields);

// Writes content verbatim; callers terminate lines with '\n' (LF only).
void write_text_file(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

} // namespace spectherm
