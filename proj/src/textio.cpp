#include "skein/textio.hpp"

#include <cctype>
#include <functional>
#include <utility>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

namespace {

struct ParsedKey {
  bool present = false;
  bool eta = false;       // punctured e-key
  bool has_pair = false;  // (p,q) part
  long k = 0;             // annulus index or boundary exponent
  long p = 0, q = 0;
  long a = 0, b = 0, c = 0;  // pants slots
};

class Parser {
 public:
  Parser(const std::string& text, int level_n, Surface surf)
      : text_(text), surf_(surf), ctx_(&CycloContext::get(level_n)) {}

  using TermSink = std::function<void(const CycloScalar&, const ParsedKey&)>;

  void parse_element(const TermSink& sink) {
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = take() == '-';
    parse_term(neg, sink);
    while (peek() == '+' || peek() == '-') {
      neg = take() == '-';
      parse_term(neg, sink);
    }
    expect_end();
  }

  CycloScalar parse_scalar_top() {
    CycloScalar v = parse_scalar_expr();
    expect_end();
    return v;
  }

 private:
  const std::string& text_;
  Surface surf_;
  const CycloContext* ctx_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw parse_error(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  char take() { return text_[pos_++]; }

  void expect(char ch, const char* what) {
    if (peek() != ch) fail(std::string("expected ") + what, pos_);
    ++pos_;
  }

  void expect_end() {
    if (peek() != '\0') fail("unexpected trailing input", pos_);
  }

  // From a '(' at the cursor: a comma at depth one before the matching
  // close marks a curve key rather than a parenthesized coefficient.
  bool pair_ahead() {
    long depth = 0;
    for (std::size_t i = pos_; i < text_.size(); ++i) {
      const char ch = text_[i];
      if (ch == '(') {
        ++depth;
      } else if (ch == ')') {
        if (--depth == 0) return false;
      } else if (ch == ',' && depth == 1) {
        return true;
      }
    }
    return false;
  }

  bool key_start() {
    const char ch = peek();
    switch (surf_) {
      case Surface::annulus: return ch == 'T';
      case Surface::pants: return ch == 'P';
      case Surface::torus: return ch == '(' && pair_ahead();
      case Surface::punctured:
        return ch == 'd' || ch == 'e' || (ch == '(' && pair_ahead());
    }
    return false;
  }

  void parse_term(bool neg, const TermSink& sink) {
    ParsedKey key;
    CycloScalar coeff = ctx_->one();
    if (key_start()) {
      key = parse_key();
    } else {
      coeff = parse_factor();
      while (peek() == '*') {
        const std::size_t save = pos_;
        ++pos_;
        if (key_start()) {
          pos_ = save;
          break;
        }
        coeff *= parse_factor();
      }
      if (peek() == '*') {
        ++pos_;
        key = parse_key();
      }
    }
    sink(neg ? -coeff : coeff, key);
  }

  CycloScalar parse_factor() {
    const char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch)))
      return ctx_->rational(parse_rational());
    if (ch == 'A') {
      ++pos_;
      long e = 1;
      if (peek() == '^') {
        ++pos_;
        e = parse_int();
      }
      return ctx_->a(e);
    }
    if (ch == '(') {
      ++pos_;
      CycloScalar v = parse_scalar_expr();
      expect(')', "')'");
      return v;
    }
    fail("expected a coefficient", pos_);
  }

  CycloScalar parse_scalar_expr() {
    CycloScalar acc = ctx_->zero();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = take() == '-';
    for (;;) {
      CycloScalar v = parse_factor();
      while (peek() == '*') {
        ++pos_;
        v *= parse_factor();
      }
      acc = neg ? acc - v : acc + v;
      const char ch = peek();
      if (ch != '+' && ch != '-') break;
      neg = take() == '-';
    }
    return acc;
  }

  Integer parse_digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a number", start);
    return Integer(text_.substr(start, pos_ - start));
  }

  Rational parse_rational() {
    Integer num = parse_digits();
    if (peek() == '/') {
      ++pos_;
      const std::size_t at = pos_;
      Integer den = parse_digits();
      if (den == 0) fail("zero denominator", at);
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  long parse_int() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = take() == '-';
    const std::size_t at = pos_;
    Integer d = parse_digits();
    if (!d.fits_slong_p()) fail("number out of range", at);
    const long v = d.get_si();
    return neg ? -v : v;
  }

  void parse_pair(ParsedKey& key) {
    expect('(', "'('");
    key.p = parse_int();
    expect(',', "','");
    key.q = parse_int();
    expect(')', "')'");
    key.has_pair = true;
  }

  ParsedKey parse_key() {
    ParsedKey key;
    key.present = true;
    switch (surf_) {
      case Surface::annulus: {
        expect('T', "'T'");
        expect('[', "'['");
        const std::size_t at = pos_;
        key.k = parse_int();
        if (key.k < 0) fail("negative Chebyshev index", at);
        expect(']', "']'");
        return key;
      }
      case Surface::pants: {
        expect('P', "'P'");
        expect('(', "'('");
        const std::size_t at = pos_;
        key.a = parse_int();
        expect(',', "','");
        key.b = parse_int();
        expect(',', "','");
        key.c = parse_int();
        expect(')', "')'");
        if (key.a < 0 || key.b < 0 || key.c < 0)
          fail("negative Chebyshev index", at);
        return key;
      }
      case Surface::torus: {
        parse_pair(key);
        return key;
      }
      case Surface::punctured: {
        const char ch = peek();
        if (ch == 'd' || ch == 'e') {
          key.eta = ch == 'e';
          ++pos_;
          key.k = 1;
          if (peek() == '^') {
            ++pos_;
            const std::size_t at = pos_;
            key.k = parse_int();
            if (key.k < 0) fail("negative boundary exponent", at);
          }
          if (peek() == '*') {
            ++pos_;
            parse_pair(key);
          }
        } else {
          parse_pair(key);
        }
        return key;
      }
    }
    fail("expected a key", pos_);
  }
};

}  // namespace

AnnulusSkein parse_annulus(const std::string& text, int level_n) {
  Parser p(text, level_n, Surface::annulus);
  AnnulusSkein out(level_n);
  p.parse_element([&](const CycloScalar& c, const ParsedKey& key) {
    if (!key.present)
      out.add_term(0, c);
    else if (key.k == 0)
      out.add_term(0, c + c);
    else
      out.add_term(key.k, c);
  });
  return out;
}

PantsSkein parse_pants(const std::string& text, int level_n) {
  Parser p(text, level_n, Surface::pants);
  PantsSkein out(level_n);
  p.parse_element([&](const CycloScalar& c, const ParsedKey& key) {
    if (!key.present)
      out.add_term({0, 0, 0}, c);
    else
      out.add_term({key.a, key.b, key.c}, c);
  });
  return out;
}

TorusSkein parse_torus(const std::string& text, int level_n) {
  Parser p(text, level_n, Surface::torus);
  TorusSkein out(level_n);
  p.parse_element([&](const CycloScalar& c, const ParsedKey& key) {
    if (!key.present)
      out.add_unit(c);
    else
      out.add_curve(static_cast<int>(key.p), static_cast<int>(key.q), c);
  });
  return out;
}

PuncturedSkein parse_punctured(const std::string& text, int level_n) {
  Parser p(text, level_n, Surface::punctured);
  PuncturedSkein plain(level_n), eta(level_n);
  p.parse_element([&](const CycloScalar& c, const ParsedKey& key) {
    PuncturedSkein& dst = key.eta ? eta : plain;
    if (!key.present)
      dst.add_boundary(0, c);
    else if (!key.has_pair)
      dst.add_boundary(key.k, c);
    else
      dst.add_curve(key.k, key.p, key.q, c);
  });
  if (eta.is_zero()) return plain;
  return plain + eta_delta_convert(eta, BoundaryBasis::delta_power);
}

CycloScalar parse_scalar(const std::string& text, int level_n) {
  Parser p(text, level_n, Surface::annulus);
  return p.parse_scalar_top();
}

// ---------------------------------------------------------------------------
// printing

namespace {

std::string rational_abs(const Rational& r) {
  Rational a = r < 0 ? Rational(-r) : r;
  return a.get_str();
}

std::string a_power_label(long k) {
  return k == 1 ? "A" : "A^" + std::to_string(k);
}

// Sign/body split: rationals and A-monomials carry the sign in the flag;
// anything else prints in parentheses with the sign inside.
std::pair<bool, std::string> scalar_term(const CycloScalar& s) {
  if (s.is_rational()) {
    const Rational r = s.rational_part();
    return {r < 0, rational_abs(r)};
  }
  const CycloContext& ctx = *s.context();
  for (long k = 1; k < ctx.order(); ++k) {
    const CycloScalar t = s * ctx.a(-k);
    if (!t.is_rational()) continue;
    const Rational r = t.rational_part();
    std::string body = a_power_label(k);
    if (r != 1 && r != -1) body = rational_abs(r) + "*" + body;
    return {r < 0, body};
  }
  std::string out = "(";
  bool first = true;
  for (long i = 0; i < ctx.degree(); ++i) {
    const Rational c = s.coefficient(i);
    if (c == 0) continue;
    std::string piece;
    if (i == 0)
      piece = rational_abs(c);
    else if (c == 1 || c == -1)
      piece = a_power_label(i);
    else
      piece = rational_abs(c) + "*" + a_power_label(i);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += piece;
  }
  out += ")";
  return {false, out};
}

using Terms = std::vector<std::pair<bool, std::string>>;

std::string join_terms(const Terms& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [neg, body] : terms) {
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += body;
  }
  return out;
}

std::pair<bool, std::string> keyed_term(const CycloScalar& c, const std::string& label) {
  auto [neg, body] = scalar_term(c);
  if (label.empty()) return {neg, body};
  if (body == "1") return {neg, label};
  return {neg, body + "*" + label};
}

std::string pair_label(long p, long q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace

std::string scalar_string(const CycloScalar& c) {
  auto [neg, body] = scalar_term(c);
  return neg ? "-" + body : body;
}

std::string annulus_key_label(long k) {
  return k == 0 ? "" : "T[" + std::to_string(k) + "]";
}

std::string pants_key_label(const PantsSkein::Key& k) {
  if (k == PantsSkein::Key{0, 0, 0}) return "";
  return "P(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
         std::to_string(k[2]) + ")";
}

std::string torus_key_label(const TorusSkein::Key& k) {
  if (k == TorusSkein::Key{0, 0}) return "";
  return pair_label(k.first, k.second);
}

std::string punctured_key_label(const PuncturedSkein::Key& k) {
  std::string label;
  if (k[0] > 0) label = k[0] == 1 ? "d" : "d^" + std::to_string(k[0]);
  if (k[1] != 0 || k[2] != 0) {
    if (!label.empty()) label += "*";
    label += pair_label(k[1], k[2]);
  }
  return label;
}

std::string char_key_label(Surface s, int level_n, const CharKey& key) {
  const long n = level_n;
  std::string label;
  switch (s) {
    case Surface::annulus:
      if (key.v[0] != 0) label = "T[" + std::to_string(n * key.v[0]) + "]";
      break;
    case Surface::pants:
      if (key.v[0] != 0 || key.v[1] != 0 || key.v[2] != 0)
        label = "P(" + std::to_string(n * key.v[0]) + "," +
                std::to_string(n * key.v[1]) + "," + std::to_string(n * key.v[2]) +
                ")";
      break;
    case Surface::torus:
      if (key.v[0] != 0 || key.v[1] != 0)
        label = pair_label(n * key.v[0], n * key.v[1]);
      break;
    case Surface::punctured:
      if (key.v[0] != 0) label = "Td[" + std::to_string(n * key.v[0]) + "]";
      if (key.v[1] != 0 || key.v[2] != 0) {
        if (!label.empty()) label += "*";
        label += pair_label(n * key.v[1], n * key.v[2]);
      }
      break;
  }
  return label;
}

std::string annulus_string(const AnnulusSkein& u) {
  Terms terms;
  for (const auto& [k, c] : u.terms()) terms.push_back(keyed_term(c, annulus_key_label(k)));
  return join_terms(terms);
}

std::string pants_string(const PantsSkein& u) {
  Terms terms;
  for (const auto& [key, c] : u.terms()) terms.push_back(keyed_term(c, pants_key_label(key)));
  return join_terms(terms);
}

std::string torus_string(const TorusSkein& u) {
  Terms terms;
  for (const auto& [key, c] : u.terms()) terms.push_back(keyed_term(c, torus_key_label(key)));
  return join_terms(terms);
}

std::string punctured_string(const PuncturedSkein& u) {
  Terms terms;
  for (const auto& [key, c] : u.terms())
    terms.push_back(keyed_term(c, punctured_key_label(key)));
  return join_terms(terms);
}

std::string char_string(const CharElement& u) {
  Terms terms;
  for (const auto& [key, c] : u.terms())
    terms.push_back(keyed_term(c, char_key_label(u.surface(), u.level(), key)));
  return join_terms(terms);
}

std::string laurent_string(const LaurentElement& e) {
  Terms terms;
  for (const auto& [ij, c] : e.terms()) {
    std::string label;
    if (ij.first != 0) label = "l^" + std::to_string(ij.first);
    if (ij.second != 0) {
      if (!label.empty()) label += "*";
      label += "m^" + std::to_string(ij.second);
    }
    terms.push_back(keyed_term(c, label));
  }
  return join_terms(terms);
}

std::string fraction_string(const CharFraction& f) {
  if (f.is_zero()) return "0";
  if (f.den_is_unit()) {
    const Rational r = f.den().unit_coefficient().rational_part();
    return char_string(f.num().scaled(Rational(1) / r));
  }
  return "(" + char_string(f.num()) + ") / (" + char_string(f.den()) + ")";
}

}  // namespace skein
