#include "sarkisov/parse.hpp"

#include <cctype>
#include <sstream>

namespace sarkisov {

namespace {

struct Scanner {
  const std::string& s;
  size_t pos = 0;
  explicit Scanner(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg + " at position " + std::to_string(pos));
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }
};

}  // namespace

MoriFibreSpace parse_space(const std::string& text) {
  Scanner sc(text);
  sc.skip_ws();
  size_t start = sc.pos;
  while (sc.pos < sc.s.size() &&
         (std::isalnum(static_cast<unsigned char>(sc.s[sc.pos]))))
    ++sc.pos;
  std::string head = text.substr(start, sc.pos - start);
  if (head.empty()) sc.fail("expected a space expression");

  auto finish = [&sc](MoriFibreSpace s) {
    sc.skip_ws();
    if (sc.pos != sc.s.size()) sc.fail("trailing input");
    ValidationResult v = validate(s);
    if (!v.ok) {
      std::string msg = "error:";
      for (const auto& m : v.violations) msg += " " + m;
      throw space_error(msg);
    }
    return s;
  };

  if (head == "P3") return finish(MoriFibreSpace::make(Family::P3));
  if (head == "Q3") return finish(MoriFibreSpace::make(Family::Q3));
  if (head == "P1112") return finish(MoriFibreSpace::make(Family::P1112));
  if (head == "P1123") return finish(MoriFibreSpace::make(Family::P1123));

  if (head.size() != 1) sc.fail("unknown family '" + head + "'");
  char fam = head[0];
  sc.expect('[');
  switch (fam) {
    case 'F': {
      long long a = sc.integer();
      sc.expect(',');
      long long b = sc.integer();
      sc.expect(',');
      long long c = sc.integer();
      sc.expect(']');
      return finish(MoriFibreSpace::F(a, b, c));
    }
    case 'U': {
      long long a = sc.integer();
      sc.expect(',');
      long long b = sc.integer();
      sc.expect(',');
      long long c = sc.integer();
      sc.expect(']');
      return finish(MoriFibreSpace::U(a, b, c));
    }
    case 'R': {
      long long m = sc.integer();
      sc.expect(',');
      long long n = sc.integer();
      sc.expect(']');
      return finish(MoriFibreSpace::R(m, n));
    }
    case 'P': case 'S': case 'V': case 'W': {
      long long b = sc.integer();
      sc.expect(']');
      if (fam == 'P') return finish(MoriFibreSpace::P(b));
      if (fam == 'S') return finish(MoriFibreSpace::S(b));
      if (fam == 'V') return finish(MoriFibreSpace::V(b));
      return finish(MoriFibreSpace::W(b));
    }
    case 'Q': {
      // The form runs to the matching closing bracket.
      size_t depth = 1;
      size_t form_start = sc.pos;
      while (sc.pos < sc.s.size() && depth > 0) {
        if (sc.s[sc.pos] == '[') ++depth;
        else if (sc.s[sc.pos] == ']') --depth;
        if (depth > 0) ++sc.pos;
      }
      if (depth != 0) sc.fail("unterminated form");
      std::string form_text = sc.s.substr(form_start, sc.pos - form_start);
      ++sc.pos;  // ']'
      BinaryForm g;
      try {
        g = parse_form(form_text);
      } catch (const form_error& e) {
        throw parse_error(std::string("bad form: ") + e.what());
      }
      return finish(MoriFibreSpace::Q(std::move(g)));
    }
    default:
      sc.fail("unknown family '" + head + "'");
  }
}

std::string render_space(const MoriFibreSpace& s) {
  std::ostringstream os;
  os << family_name(s.family);
  switch (s.family) {
    case Family::F:
    case Family::U:
      os << "[" << s.a << "," << s.b << "," << s.c << "]";
      break;
    case Family::P:
    case Family::S:
    case Family::V:
    case Family::W:
      os << "[" << s.b << "]";
      break;
    case Family::R:
      os << "[" << s.a << "," << s.b << "]";
      break;
    case Family::Q:
      os << "[" << s.g.str() << "]";
      break;
    default:
      break;
  }
  return os.str();
}

}  // namespace sarkisov
