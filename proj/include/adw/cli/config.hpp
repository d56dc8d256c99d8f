#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "adw/core/tolerances.hpp"

namespace adw {

struct ConfigEntry {
  std::string value;
  int line = 0;  // 0 when injected by --set or programmatically
};

// Sectioned key = value configuration. Lines are '#' comments, [section]
// headers, or key = value pairs under the most recent header. Diagnostics
// carry the file path and line number where one is known.
class RunConfig {
 public:
  RunConfig() = default;
  static RunConfig load(const std::string& path);

  // --set section.key=value, overriding any file value
  void set_override(const std::string& spec);
  void set_value(const std::string& sec, const std::string& key,
                 const std::string& value);

  bool has(const std::string& sec, const std::string& key) const;
  const ConfigEntry* find(const std::string& sec, const std::string& key) const;

  std::string require(const std::string& sec, const std::string& key) const;
  std::string get(const std::string& sec, const std::string& key,
                  const std::string& fallback) const;
  double require_double(const std::string& sec, const std::string& key) const;
  double get_double(const std::string& sec, const std::string& key,
                    double fallback) const;
  int get_int(const std::string& sec, const std::string& key,
              int fallback) const;

  struct Range {
    double lo = 0.0, hi = 0.0;
    int n = 0;
  };
  // value grammar "lo:hi:n"
  Range require_range(const std::string& sec, const std::string& key) const;
  Range get_range(const std::string& sec, const std::string& key,
                  const Range& fallback) const;

  // [tolerances] keys applied over the defaults; unknown keys rejected
  Tolerances tolerances() const;

  // sorted "section.key=value" lines; its FNV-1a hash is the config
  // identity recorded in every manifest
  std::string canonical() const;
  std::uint64_t hash() const;

  const std::map<std::string, std::map<std::string, ConfigEntry>>& sections()
      const {
    return sections_;
  }
  const std::string& path() const { return path_; }

 private:
  [[noreturn]] void fail_missing(const std::string& sec,
                                 const std::string& key) const;
  double parse_number(const std::string& sec, const std::string& key,
                      const ConfigEntry& e) const;

  std::string path_ = "<memory>";
  std::map<std::string, std::map<std::string, ConfigEntry>> sections_;
};

}  // namespace adw
