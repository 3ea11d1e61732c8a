#pragma once

// Minimal XML well-formedness check for test assertions: declaration,
// comments, balanced tags, quoted attribute values. Not a validator.

#include <cctype>
#include <string>
#include <vector>

namespace testsupport {

inline bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool seen_element = false;

  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  while (i < n) {
    if (text[i] != '<') {
      if (stack.empty()) {
        // character data outside the root element
        if (!std::isspace(static_cast<unsigned char>(text[i]))) return false;
      }
      ++i;
      continue;
    }
    if (text.compare(i, 5, "<?xml") == 0) {
      const auto end = text.find("?>", i);
      if (end == std::string::npos) return false;
      i = end + 2;
      continue;
    }
    if (text.compare(i, 4, "<!--") == 0) {
      const auto end = text.find("-->", i);
      if (end == std::string::npos) return false;
      i = end + 3;
      continue;
    }
    if (text.compare(i, 2, "</") == 0) {
      const auto end = text.find('>', i);
      if (end == std::string::npos) return false;
      const std::string name = text.substr(i + 2, end - i - 2);
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
      i = end + 1;
      continue;
    }
    // opening or self-closing tag
    std::size_t j = i + 1;
    while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == ':' ||
                     text[j] == '-' || text[j] == '_')) {
      ++j;
    }
    if (j == i + 1) return false;
    const std::string name = text.substr(i + 1, j - i - 1);
    // scan attributes respecting quotes
    bool self_closing = false;
    char quote = 0;
    while (j < n) {
      const char ch = text[j];
      if (quote != 0) {
        if (ch == quote) quote = 0;
      } else if (ch == '"' || ch == '\'') {
        quote = ch;
      } else if (ch == '>') {
        break;
      } else if (ch == '/' && j + 1 < n && text[j + 1] == '>') {
        self_closing = true;
      }
      ++j;
    }
    if (j >= n || quote != 0) return false;
    if (!self_closing) stack.push_back(name);
    seen_element = true;
    i = j + 1;
  }
  return stack.empty() && seen_element;
}

inline std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace testsupport
