#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace sslab {

inline constexpr const char* kToolVersion = "sslab 1.0.0";

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Floats are printed with 17 significant digits so re-parsing reproduces the
// in-memory values exactly. All writes go to a temporary in the target
// directory and are renamed into place.
void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

void write_text_atomic(const std::filesystem::path& path, const std::string& text);

std::string format_double(double value);  // %.17g

struct RunManifest {
  std::string command;
  std::string versions = kToolVersion;
  std::uint64_t seed = 0;
  std::map<std::string, std::map<std::string, std::string>> config_echo;  // section -> key -> value
  std::vector<std::string> outputs;  // paths relative to the manifest's directory
};

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);
RunManifest read_manifest(const std::filesystem::path& path);

}  // namespace sslab
