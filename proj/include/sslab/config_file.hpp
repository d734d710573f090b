#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sslab {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat sectioned key-value text:
//   [section]
//   key = value        # trailing comments allowed
// Lines starting with # or ; are comments. Duplicate keys within a section
// are an error. Typed getters record which keys were consumed so
// reject_unknown() can name any leftover (misspelled) key.
class ConfigFile {
 public:
  static ConfigFile parse_file(const std::string& path);
  static ConfigFile parse_string(const std::string& text, const std::string& origin = "<string>");

  bool has(const std::string& section, const std::string& key) const;

  std::string get_string(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;
  int get_int(const std::string& section, const std::string& key) const;
  int get_int(const std::string& section, const std::string& key, int fallback) const;
  std::uint64_t get_uint64(const std::string& section, const std::string& key,
                           std::uint64_t fallback) const;
  bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
  // Whitespace-separated list of numbers.
  std::vector<double> get_double_list(const std::string& section, const std::string& key) const;

  // Throws ConfigError naming the first key never consumed by a getter.
  void reject_unknown() const;

  const std::map<std::string, std::map<std::string, std::string>>& raw() const { return data_; }

 private:
  const std::string* find(const std::string& section, const std::string& key) const;
  std::string origin_;
  std::map<std::string, std::map<std::string, std::string>> data_;
  mutable std::set<std::string> consumed_;  // "section/key"
};

}  // namespace sslab
