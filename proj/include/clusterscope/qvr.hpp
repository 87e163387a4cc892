#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "clusterscope/quiver.hpp"

namespace clusterscope {

/// Malformed input in one of the text formats; `line` is 1-based, 0 if
/// unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct NamedQuiver {
  std::string name;
  IceQuiver quiver;
};

/// Reads one `.qvr` block starting at the current position of `in`.
/// `line` tracks the line counter across blocks when several are embedded in
/// a larger file.
NamedQuiver read_qvr(std::istream& in, int* line = nullptr);

NamedQuiver parse_qvr(std::string_view text);

/// `.qvr` text, ending with "end\n".
std::string to_qvr(const IceQuiver& q, std::string_view name);

}  // namespace clusterscope
