#include "adw/cli/config.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <utility>

#include "adw/cli/formats.hpp"
#include "adw/core/error.hpp"

namespace adw {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::islower(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::islower(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

std::string at_line(const std::string& path, int line) {
  return path + ":" + std::to_string(line) + ": ";
}

}  // namespace

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  RunConfig cfg;
  cfg.path_ = path;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.front() == '[') {
      if (s.size() < 3 || s.back() != ']')
        throw ConfigError(at_line(path, lineno) + "malformed section header");
      section = trim(s.substr(1, s.size() - 2));
      if (!valid_name(section))
        throw ConfigError(at_line(path, lineno) + "bad section name '" +
                          section + "'");
      cfg.sections_[section];
      continue;
    }
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError(at_line(path, lineno) + "expected key = value");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (section.empty())
      throw ConfigError(at_line(path, lineno) + "key before any [section]");
    if (!valid_name(key))
      throw ConfigError(at_line(path, lineno) + "bad key name '" + key + "'");
    if (value.empty())
      throw ConfigError(at_line(path, lineno) + "empty value for key '" + key +
                        "'");
    auto [it, fresh] = cfg.sections_[section].emplace(
        key, ConfigEntry{value, lineno});
    if (!fresh)
      throw ConfigError(at_line(path, lineno) + "duplicate key '" + key +
                        "' in [" + section + "] (first at line " +
                        std::to_string(it->second.line) + ")");
  }
  return cfg;
}

void RunConfig::set_override(const std::string& spec) {
  size_t eq = spec.find('=');
  if (eq == std::string::npos)
    throw ConfigError("--set expects section.key=value, got '" + spec + "'");
  std::string addr = trim(spec.substr(0, eq));
  std::string value = trim(spec.substr(eq + 1));
  size_t dot = addr.find('.');
  if (dot == std::string::npos)
    throw ConfigError("--set expects section.key=value, got '" + spec + "'");
  std::string sec = addr.substr(0, dot);
  std::string key = addr.substr(dot + 1);
  if (!valid_name(sec) || !valid_name(key))
    throw ConfigError("--set: bad address '" + addr + "'");
  if (value.empty()) throw ConfigError("--set: empty value for '" + addr + "'");
  set_value(sec, key, value);
}

void RunConfig::set_value(const std::string& sec, const std::string& key,
                          const std::string& value) {
  sections_[sec][key] = ConfigEntry{value, 0};
}

bool RunConfig::has(const std::string& sec, const std::string& key) const {
  return find(sec, key) != nullptr;
}

const ConfigEntry* RunConfig::find(const std::string& sec,
                                   const std::string& key) const {
  auto s = sections_.find(sec);
  if (s == sections_.end()) return nullptr;
  auto k = s->second.find(key);
  return k == s->second.end() ? nullptr : &k->second;
}

void RunConfig::fail_missing(const std::string& sec,
                             const std::string& key) const {
  throw ConfigError(path_ + ": missing required key '" + key + "' in [" + sec +
                    "]");
}

std::string RunConfig::require(const std::string& sec,
                               const std::string& key) const {
  const ConfigEntry* e = find(sec, key);
  if (!e) fail_missing(sec, key);
  return e->value;
}

std::string RunConfig::get(const std::string& sec, const std::string& key,
                           const std::string& fallback) const {
  const ConfigEntry* e = find(sec, key);
  return e ? e->value : fallback;
}

double RunConfig::parse_number(const std::string& sec, const std::string& key,
                               const ConfigEntry& e) const {
  const char* s = e.value.c_str();
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || *end != '\0')
    throw ConfigError((e.line ? at_line(path_, e.line) : path_ + ": ") +
                      "expected a number for [" + sec + "] " + key + ", got '" +
                      e.value + "'");
  return v;
}

double RunConfig::require_double(const std::string& sec,
                                 const std::string& key) const {
  const ConfigEntry* e = find(sec, key);
  if (!e) fail_missing(sec, key);
  return parse_number(sec, key, *e);
}

double RunConfig::get_double(const std::string& sec, const std::string& key,
                             double fallback) const {
  const ConfigEntry* e = find(sec, key);
  return e ? parse_number(sec, key, *e) : fallback;
}

int RunConfig::get_int(const std::string& sec, const std::string& key,
                       int fallback) const {
  const ConfigEntry* e = find(sec, key);
  if (!e) return fallback;
  double v = parse_number(sec, key, *e);
  int i = static_cast<int>(v);
  if (static_cast<double>(i) != v)
    throw ConfigError((e->line ? at_line(path_, e->line) : path_ + ": ") +
                      "expected an integer for [" + sec + "] " + key +
                      ", got '" + e->value + "'");
  return i;
}

RunConfig::Range RunConfig::require_range(const std::string& sec,
                                          const std::string& key) const {
  const ConfigEntry* e = find(sec, key);
  if (!e) fail_missing(sec, key);
  const std::string& v = e->value;
  size_t c1 = v.find(':');
  size_t c2 = c1 == std::string::npos ? std::string::npos : v.find(':', c1 + 1);
  std::string where =
      (e->line ? at_line(path_, e->line) : path_ + ": ") + "[" + sec + "] " +
      key + ": expected lo:hi:n, got '" + v + "'";
  if (c2 == std::string::npos) throw ConfigError(where);
  Range r;
  try {
    size_t used = 0;
    r.lo = std::stod(v.substr(0, c1), &used);
    if (used != c1) throw std::invalid_argument("");
    std::string mid = v.substr(c1 + 1, c2 - c1 - 1);
    r.hi = std::stod(mid, &used);
    if (used != mid.size()) throw std::invalid_argument("");
    std::string tail = v.substr(c2 + 1);
    r.n = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ConfigError(where);
  }
  if (r.n < 1 || r.hi < r.lo)
    throw ConfigError(where + " (need n >= 1 and hi >= lo)");
  return r;
}

RunConfig::Range RunConfig::get_range(const std::string& sec,
                                      const std::string& key,
                                      const Range& fallback) const {
  return has(sec, key) ? require_range(sec, key) : fallback;
}

Tolerances RunConfig::tolerances() const {
  Tolerances tol;
  static const std::array<std::pair<const char*, double Tolerances::*>, 13>
      kKeys{{{"root_residual_scale", &Tolerances::root_residual_scale},
             {"cluster_radius_scale", &Tolerances::cluster_radius_scale},
             {"infinity_lc_scale", &Tolerances::infinity_lc_scale},
             {"collision_eps", &Tolerances::collision_eps},
             {"locus_tol", &Tolerances::locus_tol},
             {"real_class_eps", &Tolerances::real_class_eps},
             {"fd_step_scale", &Tolerances::fd_step_scale},
             {"bispinor_tol", &Tolerances::bispinor_tol},
             {"caustic_det_scale", &Tolerances::caustic_det_scale},
             {"unimodular_tol", &Tolerances::unimodular_tol},
             {"hermitian_tol", &Tolerances::hermitian_tol},
             {"congruence_reject", &Tolerances::congruence_reject},
             {"rank_sv_scale", &Tolerances::rank_sv_scale}}};
  auto s = sections_.find("tolerances");
  if (s == sections_.end()) return tol;
  for (const auto& [key, entry] : s->second) {
    bool known = false;
    for (const auto& [name, member] : kKeys)
      if (key == name) {
        double v = parse_number("tolerances", key, entry);
        if (v <= 0.0)
          throw ConfigError(
              (entry.line ? at_line(path_, entry.line) : path_ + ": ") +
              "tolerance '" + key + "' must be positive");
        tol.*member = v;
        known = true;
        break;
      }
    if (!known)
      throw ConfigError(
          (entry.line ? at_line(path_, entry.line) : path_ + ": ") +
          "unknown tolerance key '" + key + "'");
  }
  return tol;
}

std::string RunConfig::canonical() const {
  std::string out;
  for (const auto& [sec, keys] : sections_)
    for (const auto& [key, entry] : keys)
      out += sec + "." + key + "=" + entry.value + "\n";
  return out;
}

std::uint64_t RunConfig::hash() const { return fnv1a64(canonical()); }

}  // namespace adw
