#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace fpspectral {

// Fixed 17-significant-digit float formatting used for every CSV and SVG
// value; identical inputs produce byte-identical files.
std::string format_g17(double v);

std::string csv_row(const std::vector<std::string>& cells);

// Writes content to a temporary file in the target directory and renames it
// into place, so a crash or error never leaves a partially written file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace fpspectral
