#pragma once

#include <map>
#include <string>
#include <vector>

#include "euler1d/errors.hpp"

namespace euler1d {

/// Flat key-value configuration: `key = value` lines grouped under
/// `[section]` headers, `#` comments. Environment variables named
/// EULER1D_<SECTION>_<KEY> (upper case) override file values.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text, const std::string& origin = "<string>");

  bool has(const std::string& section, const std::string& key) const;
  bool has_section(const std::string& section) const;

  std::string get_str(const std::string& section, const std::string& key) const;
  std::string get_str_or(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  double get_num(const std::string& section, const std::string& key) const;
  double get_num_or(const std::string& section, const std::string& key, double fallback) const;
  long get_int(const std::string& section, const std::string& key) const;
  long get_int_or(const std::string& section, const std::string& key, long fallback) const;
  std::vector<double> get_nums(const std::string& section, const std::string& key) const;
  std::vector<double> get_nums_or(const std::string& section, const std::string& key,
                                  std::vector<double> fallback) const;

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace euler1d
