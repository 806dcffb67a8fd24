#include "switchlab/limits.hpp"

#include <cstdlib>
#include <fstream>

#include "switchlab/errors.hpp"

namespace switchlab {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

long long parse_value(const std::string& key, const std::string& text) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(text, &pos);
    if (pos != text.size() || v < 1) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError(ParseError::Kind::BadFormat,
                     "bad value for " + key + ": '" + text + "'");
  }
}

}  // namespace

Limits load_config_file(const std::string& path, Limits base) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(ParseError::Kind::BadFormat,
                       "config line without '=': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "max_n")
      base.max_n = static_cast<int>(parse_value(key, value));
    else if (key == "max_realizations")
      base.max_realizations = parse_value(key, value);
    else if (key == "hamilton_budget")
      base.hamilton_budget = parse_value(key, value);
    else
      throw ParseError(ParseError::Kind::BadFormat, "unknown config key: " + key);
  }
  return base;
}

void apply_env_overrides(Limits& lim) {
  if (const char* v = std::getenv("SWITCHLAB_MAX_N"))
    lim.max_n = static_cast<int>(parse_value("SWITCHLAB_MAX_N", v));
}

}  // namespace switchlab
