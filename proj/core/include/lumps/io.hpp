#pragma once

#include <map>
#include <string>

namespace lumps {

inline constexpr const char* kVersion = "0.1.0";

/// Prepend `# key = value` metadata lines (sorted by key, plus the code
/// version) to a CSV or JSON payload so every output file is reproducible
/// from its own header.
std::string with_metadata(const std::map<std::string, std::string>& meta,
                          const std::string& payload);

/// Write a file atomically-ish (temp + rename); throws on failure.
void write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

} // namespace lumps
