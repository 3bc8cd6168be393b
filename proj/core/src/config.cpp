#include "euler1d/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace euler1d {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& origin) {
  Config cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw Error(Errc::bad_params,
                    origin + ":" + std::to_string(lineno) + ": unterminated section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      cfg.sections_[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::bad_params,
                  origin + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw Error(Errc::bad_params, origin + ":" + std::to_string(lineno) + ": empty key");
    }
    cfg.sections_[section][key] = value;
  }
  return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
  if (std::getenv(("EULER1D_" + upper(section) + "_" + upper(key)).c_str())) return true;
  auto sit = sections_.find(section);
  return sit != sections_.end() && sit->second.count(key) > 0;
}

bool Config::has_section(const std::string& section) const {
  return sections_.count(section) > 0;
}

std::string Config::get_str(const std::string& section, const std::string& key) const {
  if (const char* env = std::getenv(("EULER1D_" + upper(section) + "_" + upper(key)).c_str())) {
    return env;
  }
  auto sit = sections_.find(section);
  if (sit != sections_.end()) {
    auto kit = sit->second.find(key);
    if (kit != sit->second.end()) return kit->second;
  }
  throw Error(Errc::bad_params, "config: missing [" + section + "] " + key);
}

std::string Config::get_str_or(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
  return has(section, key) ? get_str(section, key) : fallback;
}

double Config::get_num(const std::string& section, const std::string& key) const {
  const std::string v = get_str(section, key);
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw Error(Errc::bad_params, "config: [" + section + "] " + key + " is not a number: " + v);
  }
}

double Config::get_num_or(const std::string& section, const std::string& key,
                          double fallback) const {
  return has(section, key) ? get_num(section, key) : fallback;
}

long Config::get_int(const std::string& section, const std::string& key) const {
  const std::string v = get_str(section, key);
  try {
    std::size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw Error(Errc::bad_params, "config: [" + section + "] " + key + " is not an integer: " + v);
  }
}

long Config::get_int_or(const std::string& section, const std::string& key, long fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

std::vector<double> Config::get_nums(const std::string& section, const std::string& key) const {
  std::istringstream in(get_str(section, key));
  std::vector<double> out;
  std::string tok;
  while (in >> tok) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw Error(Errc::bad_params,
                  "config: [" + section + "] " + key + " has a non-numeric entry: " + tok);
    }
  }
  return out;
}

std::vector<double> Config::get_nums_or(const std::string& section, const std::string& key,
                                        std::vector<double> fallback) const {
  return has(section, key) ? get_nums(section, key) : fallback;
}

}  // namespace euler1d
