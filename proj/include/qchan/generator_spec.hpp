#pragma once

#include <stdexcept>
#include <string_view>

#include "qchan/channels.hpp"

namespace qchan {

/// Parse failure in a generator spec file; `line` is 1-based.
class SpecParseError : public std::runtime_error {
 public:
  SpecParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Line-oriented generator description:
///   # comment
///   H <hx> <hy> <hz>                      (at most once)
///   J <rate> <c0re> <c0im> <c1re> <c1im> <c2re> <c2im> <c3re> <c3im>
/// Jump operators are L = c0*I + c1*s1 + c2*s2 + c3*s3 at the given
/// nonnegative rate. An empty file is the zero generator.
LindbladGenerator parse_generator_spec(std::string_view text);

}  // namespace qchan
