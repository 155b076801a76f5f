#pragma once

#include <string>

#include "ellrank/weierstrass.hpp"

namespace ellrank {

/// Integer polynomial in t: sums, products (`*` optional), `^` with a
/// nonnegative integer exponent, parentheses, unary minus. Errors carry the
/// given line and a 1-based column.
IntPoly parse_polynomial(const std::string& text, int line = 1, const std::string& var = "t");

struct ModelFile {
  std::string path;
  std::string label;
  WeierstrassModel model{IntPoly(), IntPoly(1)};
};

/// Lines "A = ...", "B = ...", optional "label = ..."; '#' starts a comment.
ModelFile parse_model_text(const std::string& text);
ModelFile read_model_file(const std::string& path);

std::string model_text(const WeierstrassModel& m, const std::string& label = "");

}  // namespace ellrank
