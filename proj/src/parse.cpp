#include "parse.hpp"

#include <cctype>
#include <sstream>

namespace su2curv {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  int line;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() { return pos < s.size() ? s[pos] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, int(pos) + 1); }
};

Rational parse_rational(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  if (c.peek() == '+' || c.peek() == '-') ++c.pos;
  size_t digits = c.pos;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == digits) c.fail("expected a number");
  if (c.peek() == '/') {
    ++c.pos;
    size_t den = c.pos;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == den) c.fail("expected a denominator");
  }
  return Rational::parse(c.s.substr(start, c.pos - start));
}

Mono parse_indices(Cursor& c, int line) {
  c.skip_ws();
  if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected index digits");
  Mono m = 0;
  int prev = 0;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    int idx = c.peek() - '0';
    if (idx < 1 || idx > 5)
      throw ParseError("index out of range 1..5: '" + std::string(1, c.peek()) + "'", line,
                       int(c.pos) + 1);
    if (idx <= prev)
      throw ParseError("indices must be strictly increasing", line, int(c.pos) + 1);
    m |= Mono(1u << (idx - 1));
    prev = idx;
    ++c.pos;
  }
  return m;
}

}  // namespace

Form parse_form_expr(const std::string& text, int expected_degree, int line) {
  Cursor c{text, 0, line};
  c.skip_ws();
  if (c.done()) c.fail("empty expression");

  // Collect (coefficient, monomial) terms; all must share one degree.
  std::vector<std::pair<Rational, Mono>> terms;
  bool first = true;
  while (!c.done()) {
    Rational sign(1);
    c.skip_ws();
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = Rational(-1);
      ++c.pos;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    c.skip_ws();
    Rational coef(1);
    Mono m = 0;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      // Either a coefficient followed by '*', or bare index digits, or a
      // lone scalar (degree 0). Disambiguate by what follows the digits.
      size_t save = c.pos;
      while (std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
      bool rationalish = c.peek() == '/' || c.peek() == '*';
      c.pos = save;
      if (rationalish) {
        coef = parse_rational(c);
        have_coef = true;
        c.skip_ws();
        if (c.peek() == '*') {
          ++c.pos;
          m = parse_indices(c, line);
        }  // else: a lone scalar like "1/2"
      } else {
        // bare digits: "12" is w^1 ^ w^2 unless a 0-form is expected
        if (expected_degree == 0) {
          coef = parse_rational(c);
          have_coef = true;
        } else {
          m = parse_indices(c, line);
        }
      }
    } else {
      c.fail("expected a term");
    }
    if (!have_coef && m == 0) c.fail("expected a term");
    terms.emplace_back(sign * coef, m);
    first = false;
  }

  // "0" alone denotes the zero form of the expected degree.
  if (terms.size() == 1 && terms[0].second == 0 && terms[0].first.is_zero())
    return Form(expected_degree < 0 ? 0 : expected_degree);

  int degree = mono_degree(terms[0].second);
  for (auto& [coef, m] : terms)
    if (mono_degree(m) != degree) c.fail("mixed degrees in one expression");
  if (expected_degree >= 0 && degree != expected_degree)
    throw ParseError("expected a " + std::to_string(expected_degree) + "-form", line);
  Form f(degree);
  for (auto& [coef, m] : terms) f.add(m, coef);
  return f;
}

StructureFile parse_structure_file(const std::string& text) {
  std::array<Form, 5> d{Form(2), Form(2), Form(2), Form(2), Form(2)};
  std::array<bool, 5> seen{};
  std::string name;
  std::vector<Expectation> expected;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    // trim
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    if (line.rfind("name:", 0) == 0) {
      name = line.substr(5);
      auto nb = name.find_first_not_of(" \t");
      name = nb == std::string::npos ? "" : name.substr(nb);
      continue;
    }
    if (line.rfind("expect", 0) == 0 && (line.size() == 6 || std::isspace((unsigned char)line[6]))) {
      auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("expect line needs '='", lineno);
      std::string key = line.substr(6, eq - 6);
      std::string value = line.substr(eq + 1);
      auto trim = [](std::string& s) {
        auto b2 = s.find_first_not_of(" \t");
        auto e2 = s.find_last_not_of(" \t");
        s = b2 == std::string::npos ? "" : s.substr(b2, e2 - b2 + 1);
      };
      trim(key);
      trim(value);
      if (key.empty() || value.empty()) throw ParseError("expect line needs key and value", lineno);
      expected.push_back({key, value});
      continue;
    }
    if (line.size() >= 2 && line[0] == 'd' && std::isdigit((unsigned char)line[1])) {
      int k = line[1] - '0';
      if (k < 1 || k > 5) throw ParseError("dK: K must be 1..5", lineno);
      auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("dK line needs '='", lineno);
      if (seen[k - 1]) throw ParseError("duplicate d" + std::to_string(k) + " line", lineno);
      seen[k - 1] = true;
      d[k - 1] = parse_form_expr(line.substr(eq + 1), 2, lineno);
      continue;
    }
    throw ParseError("unrecognized line: '" + line + "'", lineno);
  }

  Coframe5 cf(name.empty() ? "unnamed" : name, d);
  if (auto fail = cf.validate_jacobi())
    throw ParseError("Jacobi identity fails: d(dw^" + std::to_string(fail->index) +
                     ") = " + fail->d2.str());
  return StructureFile{cf.name(), cf, expected};
}

std::string print_structure_file(const Coframe5& cf) {
  std::ostringstream os;
  os << "name: " << cf.name() << "\n";
  for (int i = 1; i <= kDim; ++i)
    if (!cf.d_basis(i).is_zero()) os << "d" << i << " = " << cf.d_basis(i).str() << "\n";
  return os.str();
}

}  // namespace su2curv
