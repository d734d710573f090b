#include "sslab/config_file.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sslab {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string strip_comment(const std::string& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '#' || s[i] == ';') return s.substr(0, i);
  }
  return s;
}

}  // namespace

ConfigFile ConfigFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str(), path);
}

ConfigFile ConfigFile::parse_string(const std::string& text, const std::string& origin) {
  ConfigFile cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(line_no) + ": malformed section header");
      section = trim(body.substr(1, body.size() - 2));
      if (section.empty())
        throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty section name");
      cfg.data_[section];  // a section may legitimately stay empty
      continue;
    }
    const std::size_t eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty key");
    auto& sec = cfg.data_[section];
    if (sec.count(key))
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": duplicate key '" + key +
                        "' in section [" + section + "]");
    sec[key] = value;
  }
  return cfg;
}

const std::string* ConfigFile::find(const std::string& section, const std::string& key) const {
  auto sit = data_.find(section);
  if (sit == data_.end()) return nullptr;
  auto kit = sit->second.find(key);
  if (kit == sit->second.end()) return nullptr;
  consumed_.insert(section + "/" + key);
  return &kit->second;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
  return find(section, key) != nullptr;
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key) const {
  const std::string* v = find(section, key);
  if (!v) throw ConfigError(origin_ + ": missing required key '" + key + "' in section [" + section + "]");
  return *v;
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key,
                                   const std::string& fallback) const {
  const std::string* v = find(section, key);
  return v ? *v : fallback;
}

double ConfigFile::get_double(const std::string& section, const std::string& key) const {
  const std::string raw = get_string(section, key);
  char* end = nullptr;
  const double val = std::strtod(raw.c_str(), &end);
  if (end == raw.c_str() || *end != '\0')
    throw ConfigError(origin_ + ": key '" + key + "' in [" + section + "] is not a number: '" +
                      raw + "'");
  return val;
}

double ConfigFile::get_double(const std::string& section, const std::string& key,
                              double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

int ConfigFile::get_int(const std::string& section, const std::string& key) const {
  const std::string raw = get_string(section, key);
  char* end = nullptr;
  const long long val = std::strtoll(raw.c_str(), &end, 10);
  if (end == raw.c_str() || *end != '\0' || val < INT32_MIN || val > INT32_MAX)
    throw ConfigError(origin_ + ": key '" + key + "' in [" + section + "] is not an integer: '" +
                      raw + "'");
  return static_cast<int>(val);
}

int ConfigFile::get_int(const std::string& section, const std::string& key, int fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

std::uint64_t ConfigFile::get_uint64(const std::string& section, const std::string& key,
                                     std::uint64_t fallback) const {
  if (!has(section, key)) return fallback;
  const std::string raw = get_string(section, key);
  char* end = nullptr;
  const unsigned long long val = std::strtoull(raw.c_str(), &end, 10);
  if (end == raw.c_str() || *end != '\0')
    throw ConfigError(origin_ + ": key '" + key + "' in [" + section +
                      "] is not an unsigned integer: '" + raw + "'");
  return val;
}

bool ConfigFile::get_bool(const std::string& section, const std::string& key,
                          bool fallback) const {
  if (!has(section, key)) return fallback;
  std::string raw = get_string(section, key);
  for (char& c : raw) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (raw == "true" || raw == "yes" || raw == "1") return true;
  if (raw == "false" || raw == "no" || raw == "0") return false;
  throw ConfigError(origin_ + ": key '" + key + "' in [" + section + "] is not a boolean: '" +
                    raw + "'");
}

std::vector<double> ConfigFile::get_double_list(const std::string& section,
                                                const std::string& key) const {
  const std::string raw = get_string(section, key);
  std::istringstream in(raw);
  std::vector<double> out;
  std::string tok;
  while (in >> tok) {
    char* end = nullptr;
    const double val = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
      throw ConfigError(origin_ + ": key '" + key + "' in [" + section +
                        "] has a non-numeric entry: '" + tok + "'");
    out.push_back(val);
  }
  return out;
}

void ConfigFile::reject_unknown() const {
  for (const auto& [section, entries] : data_) {
    for (const auto& [key, value] : entries) {
      (void)value;
      if (!consumed_.count(section + "/" + key))
        throw ConfigError(origin_ + ": unknown config key '" + key + "' in section [" + section +
                          "]");
    }
  }
}

}  // namespace sslab
