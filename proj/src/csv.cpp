#include "liespec/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace liespec {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_param(const Rat& q) {
  const Int& den = q.get_den();
  if (den == 1) return q.get_num().get_str();
  if (den < 1000000) return rat_str(q);
  return fmt_double(to_double(q));  // came in as a float; print as one
}

std::string CsvTable::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) os << ",";
    os << header[i];
  }
  os << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << row[i];
    }
    os << "\n";
  }
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.good()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw std::runtime_error("rename to " + path + " failed: " + ec.message());
}

}  // namespace liespec
