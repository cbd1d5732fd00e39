#include "fpspectral/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

#include "fpspectral/errors.hpp"

namespace fpspectral {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  row += '\n';
  return row;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoFailure("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  const std::filesystem::path tmp = path.parent_path() / (".tmp." + path.filename().string());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoFailure("cannot open " + tmp.string() + " for writing");
    os << content;
    os.flush();
    if (!os) throw IoFailure("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoFailure("cannot rename into " + path.string());
  }
}

}  // namespace fpspectral
