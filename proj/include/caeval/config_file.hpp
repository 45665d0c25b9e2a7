// caeval/config_file.hpp

// Copyright 2026  caeval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CAEVAL_CONFIG_FILE_HPP_
#define CAEVAL_CONFIG_FILE_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "caeval/errors.hpp"
#include "caeval/text.hpp"

namespace caeval {

// Shared reader for the sectioned plain-text configuration grammar used
// by lexicon, rule, template and inventory files:
//
//   # comment (whole line)
//   [section]
//   entry line
//
// Blank lines are ignored; entries keep their 1-based line numbers so
// loaders can report precise ConfigErrors.

struct ConfigEntry {
  std::size_t line = 0;
  std::string text;
};

struct ConfigSection {
  std::string name;  // "" for entries before the first [section] header
  std::vector<ConfigEntry> entries;
};

struct ConfigFile {
  std::string source;  // path or "<built-in>"
  std::vector<ConfigSection> sections;

  const ConfigSection *find(std::string_view name) const {
    for (const auto &s : sections) {
      if (s.name == name) return &s;
    }
    return nullptr;
  }
};

inline ConfigFile parse_config_text(std::string_view text,
                                    const std::string &source) {
  ConfigFile file;
  file.source = source;
  file.sections.push_back(ConfigSection{});
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      const std::size_t close = line.find(']');
      if (close == std::string::npos || close < 2) {
        throw ConfigError(source, line_no, "malformed section header: " + line);
      }
      file.sections.push_back(ConfigSection{trim(line.substr(1, close - 1)), {}});
      // Entries may share the header line: "[cities] bonn, berlin".
      const std::string rest = trim(line.substr(close + 1));
      if (!rest.empty()) {
        file.sections.back().entries.push_back(ConfigEntry{line_no, rest});
      }
      continue;
    }
    file.sections.back().entries.push_back(ConfigEntry{line_no, line});
  }
  return file;
}

inline ConfigFile read_config_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

}  // namespace caeval

#endif  // CAEVAL_CONFIG_FILE_HPP_
