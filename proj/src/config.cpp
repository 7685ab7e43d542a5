#include "axial/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace axial {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Strip a trailing comment, respecting double quotes.
std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::string unquote(const std::string& s, int line_no) {
  if (s.size() >= 2 && s.front() == '"') {
    if (s.back() != '"') {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": unterminated string");
    }
    return s.substr(1, s.size() - 2);
  }
  if (!s.empty() && s.front() == '"') {
    throw ConfigError("line " + std::to_string(line_no) +
                      ": unterminated string");
  }
  return s;
}

std::vector<std::string> parse_list(const std::string& body, int line_no) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : body) {
    if (c == '"') {
      quoted = !quoted;
      cur += c;
    } else if (c == ',' && !quoted) {
      std::string item = trim(cur);
      if (!item.empty()) out.push_back(unquote(item, line_no));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) {
    throw ConfigError("line " + std::to_string(line_no) +
                      ": unterminated string");
  }
  std::string item = trim(cur);
  if (!item.empty()) out.push_back(unquote(item, line_no));
  return out;
}

}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str());
}

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line, section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ConfigError("line " + std::to_string(line_no) +
                          ": malformed section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) {
        throw ConfigError("line " + std::to_string(line_no) +
                          ": empty section name");
      }
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    }
    if (value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty value");
    }
    std::string full = section.empty() ? key : section + "." + key;
    if (cfg.values_.count(full)) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key " +
                        full);
    }
    if (value.front() == '[') {
      if (value.back() != ']') {
        throw ConfigError("line " + std::to_string(line_no) +
                          ": unterminated list");
      }
      cfg.values_[full] = parse_list(value.substr(1, value.size() - 2), line_no);
    } else {
      cfg.values_[full] = {unquote(value, line_no)};
    }
  }
  return cfg;
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

std::string Config::str(const std::string& key,
                        const std::string& fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (it->second.size() != 1) {
    throw ConfigError("key " + key + ": expected a scalar, got a list");
  }
  return it->second.front();
}

long Config::integer(const std::string& key, long fallback) const {
  if (!has(key)) return fallback;
  const std::string s = str(key);
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw ConfigError("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key " + key + ": not an integer: " + s);
  }
}

double Config::real(const std::string& key, double fallback) const {
  if (!has(key)) return fallback;
  const std::string s = str(key);
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw ConfigError("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key " + key + ": not a number: " + s);
  }
}

bool Config::boolean(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string s = str(key);
  if (s == "true") return true;
  if (s == "false") return false;
  throw ConfigError("key " + key + ": expected true/false, got " + s);
}

std::vector<std::string> Config::list(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return {};
  return it->second;
}

}  // namespace axial
