#pragma once

#include <string>
#include <vector>

#include "liespec/rational.hpp"

namespace liespec {

// 17 significant digits: re-ingesting reproduces the double bit-exactly.
std::string fmt_double(double v);

// Exact parameter column: plain decimal for integers, "p/q" for rationals
// with small denominators, shortest-roundtrip decimal otherwise (doubles
// carried through exact arithmetic).
std::string fmt_param(const Rat& q);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string str() const;
};

// Atomic write (temp file + rename). Throws std::runtime_error on I/O errors.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace liespec
