#include "delpezzo/parse.hpp"

#include <cctype>
#include <string>

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

class TermReader {
 public:
  TermReader(std::string text, char var, std::string_view original)
      : s_(std::move(text)), var_(var), original_(original) {}

  Poly read_all() {
    if (s_.empty()) fail("empty polynomial");
    Poly out;
    bool first = true;
    while (pos_ < s_.size()) {
      out += read_term(first);
      first = false;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " in '" + std::string(original_) + "'");
  }

  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool at_digit() const {
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Poly read_term(bool first) {
    bool negative = false;
    if (at('+') || at('-')) {
      negative = at('-');
      ++pos_;
    } else if (!first) {
      fail("expected '+' or '-' at position " + std::to_string(pos_));
    }

    Rational coefficient(1);
    bool has_coefficient = false;
    if (at_digit()) {
      std::string text = digits();
      if (at('/')) {
        ++pos_;
        if (!at_digit()) fail("expected denominator");
        text += "/" + digits();
      }
      coefficient = Rational::parse(text);
      has_coefficient = true;
      if (at('*')) {
        ++pos_;
        if (!at(var_)) fail(std::string("expected '") + var_ + "' after '*'");
      }
    }

    std::size_t power = 0;
    if (at(var_)) {
      ++pos_;
      power = 1;
      if (at('^')) {
        ++pos_;
        if (!at_digit()) fail("expected exponent after '^'");
        const std::string e = digits();
        if (e.size() > 4) fail("exponent too large");
        power = std::stoul(e);
      }
    } else if (!has_coefficient) {
      fail("expected a term at position " + std::to_string(pos_));
    }
    if (pos_ < s_.size() && !at('+') && !at('-')) {
      fail(std::string("unexpected character '") + s_[pos_] + "'");
    }
    if (negative) coefficient = -coefficient;
    return Poly::monomial(coefficient, power);
  }

  std::string s_;
  char var_;
  std::string_view original_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_polynomial(std::string_view text, char var) {
  std::string compact;
  compact.reserve(text.size());
  bool gap = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      gap = !compact.empty();
      continue;
    }
    // "z^5 1" must not silently become z^51.
    if (gap && std::isdigit(static_cast<unsigned char>(c)) &&
        std::isdigit(static_cast<unsigned char>(compact.back()))) {
      throw ParseError("whitespace inside a number in '" + std::string(text) + "'");
    }
    gap = false;
    compact.push_back(c);
  }
  return TermReader(std::move(compact), var, text).read_all();
}

}  // namespace delpezzo
