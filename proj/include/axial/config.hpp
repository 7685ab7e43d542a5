#pragma once

#include <map>
#include <string>
#include <vector>

#include "axial/errors.hpp"

namespace axial {

// Minimal sectioned key/value format:
//   [section]
//   key = value
//   list = ["a", "b"]    or    list = [1, 2]
// '#' starts a comment outside quotes.
class Config {
 public:
  static Config parse_file(const std::string& path);   // throws ConfigError
  static Config parse_string(const std::string& text);

  bool has(const std::string& key) const;
  std::string str(const std::string& key, const std::string& fallback = "") const;
  long integer(const std::string& key, long fallback) const;
  double real(const std::string& key, double fallback) const;
  bool boolean(const std::string& key, bool fallback) const;
  std::vector<std::string> list(const std::string& key) const;

 private:
  // "section.key" -> values (scalars hold exactly one entry)
  std::map<std::string, std::vector<std::string>> values_;
};

}  // namespace axial
