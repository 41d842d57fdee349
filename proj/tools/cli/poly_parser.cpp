#include "poly_parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>

namespace traceform::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  Poly run() {
    if (s_.empty()) fail("empty polynomial");
    if (s_.find(',') != std::string::npos || s_.front() == '[') return coefficient_list();
    return expression();
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  Int integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Int(s_.substr(start, pos_ - start));
  }

  Int signed_integer() {
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = s_[pos_++] == '-';
    Int v = integer();
    return neg ? Int(-v) : v;
  }

  Poly coefficient_list() {
    bool bracket = peek() == '[';
    if (bracket) ++pos_;
    std::vector<Rat> coeffs;
    for (;;) {
      coeffs.emplace_back(signed_integer());
      if (peek() != ',') break;
      ++pos_;
    }
    if (bracket) {
      if (peek() != ']') fail("expected ']'");
      ++pos_;
    }
    if (!at_end()) fail("unexpected character");
    return Poly(std::move(coeffs));
  }

  unsigned power() {
    char v = peek();
    if (!std::isalpha(static_cast<unsigned char>(v))) fail("expected a variable");
    if (var_ && *var_ != v) fail(std::string("mixed variables '") + *var_ + "' and '" + v + "'");
    var_ = v;
    ++pos_;
    if (peek() != '^') return 1;
    ++pos_;
    Int e = integer();
    if (e > 1000) fail("exponent too large");
    return static_cast<unsigned>(e.get_ui());
  }

  Poly expression() {
    std::map<unsigned, Int> terms;
    bool first = true;
    while (!at_end()) {
      bool neg = false;
      if (peek() == '+' || peek() == '-') {
        neg = s_[pos_++] == '-';
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Int c = 1;
      unsigned e = 0;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c = integer();
        if (peek() == '*') {
          ++pos_;
          e = power();
        } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
          e = power();
        }
      } else {
        e = power();
      }
      terms[e] += neg ? Int(-c) : c;
    }
    if (first) fail("empty polynomial");
    std::vector<Rat> coeffs(terms.rbegin()->first + 1);
    for (const auto& [e, c] : terms) coeffs[e] = c;
    return Poly(std::move(coeffs));
  }

  std::string s_;
  std::size_t pos_ = 0;
  std::optional<char> var_;
};

}  // namespace

Poly parse_polynomial(std::string_view text) { return Parser(text).run(); }

Int parse_integer(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::size_t e = s.find_first_of("eE");
  std::string mant = s.substr(0, e);
  std::size_t digits = mant.find_first_not_of("+-");
  bool ok = digits <= 1 && digits < mant.size() &&
            mant.find_first_not_of("0123456789", digits) == std::string::npos;
  unsigned long exponent = 0;
  if (ok && e != std::string::npos) {
    std::string ex = s.substr(e + 1);
    ok = !ex.empty() && ex.size() <= 4 && ex.find_first_not_of("0123456789") == std::string::npos;
    if (ok) exponent = std::stoul(ex);
  }
  if (!ok) throw Error(ErrorKind::Parse, "not an integer: '" + std::string(text) + "'");
  Int v(mant[0] == '+' ? mant.substr(1) : mant);
  return v * ipow(Int(10), static_cast<unsigned>(exponent));
}

std::string coefficient_list(const Poly& f) {
  std::string out;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i) out += ',';
    out += f.coeff(i).get_str();
  }
  return out;
}

}  // namespace traceform::cli
