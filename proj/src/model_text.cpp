#include "ellrank/model_text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ellrank/errors.hpp"

namespace ellrank {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class PolyParser {
 public:
  PolyParser(const std::string& s, int line, int column0, const std::string& var)
      : s_(s), line_(line), col0_(column0), var_(var) {}

  IntPoly parse() {
    IntPoly p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col0_ + static_cast<int>(i_) + 1, msg);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  bool starts_atom() {
    skip();
    if (i_ >= s_.size()) return false;
    const char c = s_[i_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || s_.compare(i_, var_.size(), var_) == 0;
  }

  IntPoly expr() {
    IntPoly acc;
    bool first = true;
    for (;;) {
      bool negate = false;
      if (peek('+') || peek('-')) {
        negate = s_[i_] == '-';
        ++i_;
      } else if (!first) {
        break;
      }
      IntPoly t = term();
      acc += negate ? -t : t;
      first = false;
    }
    return acc;
  }

  IntPoly term() {
    IntPoly acc = power_factor();
    for (;;) {
      if (peek('*')) {
        ++i_;
        acc *= power_factor();
      } else if (starts_atom()) {
        acc *= power_factor();
      } else {
        return acc;
      }
    }
  }

  IntPoly power_factor() {
    IntPoly base = atom();
    if (peek('^')) {
      ++i_;
      skip();
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected a nonnegative integer exponent");
      const unsigned long e = std::stoul(s_.substr(start, i_ - start));
      if (e > kMaxExponent) fail("exponent too large");
      base = power(base, static_cast<unsigned>(e));
    }
    return base;
  }

  IntPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of polynomial");
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return IntPoly(Integer(s_.substr(start, i_ - start)));
    }
    if (s_.compare(i_, var_.size(), var_) == 0) {
      i_ += var_.size();
      return IntPoly::x();
    }
    if (c == '(') {
      ++i_;
      IntPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return inner;
    }
    if (c == '-' || c == '+') {
      ++i_;
      IntPoly inner = power_factor();
      return c == '-' ? -inner : inner;
    }
    if (c == '/' || c == '.') fail("coefficients must be integers");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t i_ = 0;
  int line_;
  int col0_;
  std::string var_;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

IntPoly parse_polynomial(const std::string& text, int line, const std::string& var) {
  return PolyParser(text, line, 0, var).parse();
}

ModelFile parse_model_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool have_a = false, have_b = false;
  IntPoly a, b;
  ModelFile out;
  while (std::getline(in, raw)) {
    ++line;
    const std::string content = raw.substr(0, raw.find('#'));
    if (trim(content).empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line, static_cast<int>(content.find_first_not_of(" \t")) + 1, "expected 'key = value'");
    }
    const std::string key = trim(content.substr(0, eq));
    const std::string value = content.substr(eq + 1);
    const int col0 = static_cast<int>(eq) + 1;
    if (key == "A" || key == "B") {
      bool& seen = key == "A" ? have_a : have_b;
      if (seen) throw ParseError(line, 1, "duplicate " + key);
      if (trim(value).empty()) throw ParseError(line, col0 + 1, "empty polynomial");
      (key == "A" ? a : b) = PolyParser(value, line, col0, "t").parse();
      seen = true;
    } else if (key == "label") {
      out.label = trim(value);
    } else {
      throw ParseError(line, static_cast<int>(content.find_first_not_of(" \t")) + 1, "unknown key '" + key + "'");
    }
  }
  if (!have_a || !have_b) throw ParseError(line + 1, 1, have_a ? "missing B" : "missing A");
  out.model = WeierstrassModel(a, b);
  return out;
}

ModelFile read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  ModelFile f = parse_model_text(ss.str());
  f.path = path;
  return f;
}

std::string model_text(const WeierstrassModel& m, const std::string& label) {
  std::string s;
  if (!label.empty()) s += "label = " + label + "\n";
  return s + to_string(m);
}

}  // namespace ellrank
