#include "skein/cli.hpp"

#include <cctype>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "skein/annulus.hpp"
#include "skein/charring.hpp"
#include "skein/cyclotomic.hpp"
#include "skein/errors.hpp"
#include "skein/linalg.hpp"
#include "skein/pants.hpp"
#include "skein/places.hpp"
#include "skein/punctured.hpp"
#include "skein/textio.hpp"
#include "skein/torus.hpp"

namespace skein {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Scalars serialize as [numerator, denominator, exponent] triples over the
// reduced representative, ascending in the exponent; zero gives [].
ordered_json scalar_json(const CycloScalar& c) {
  ordered_json arr = ordered_json::array();
  if (c.is_zero()) return arr;
  const CycloContext& ctx = *c.context();
  for (long i = 0; i < ctx.degree(); ++i) {
    const Rational r = c.coefficient(i);
    if (r == 0) continue;
    arr.push_back(
        ordered_json::array({r.get_num().get_str(), r.get_den().get_str(), i}));
  }
  return arr;
}

template <class TermMap, class LabelFn>
ordered_json terms_json(const TermMap& terms, LabelFn&& label) {
  ordered_json arr = ordered_json::array();
  for (const auto& [key, c] : terms) {
    ordered_json t;
    const std::string l = label(key);
    t["key"] = l.empty() ? "1" : l;
    t["coeff"] = scalar_json(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

ordered_json char_json(const CharElement& u) {
  return terms_json(u.terms(), [&](const CharKey& k) {
    return char_key_label(u.surface(), u.level(), k);
  });
}

ordered_json fraction_json(const CharFraction& f) {
  ordered_json j;
  j["num"] = char_json(f.num());
  j["den"] = char_json(f.den());
  return j;
}

ordered_json doc_head(const Command& cmd) {
  ordered_json doc;
  doc["surface"] = surface_name(cmd.surface);
  doc["N"] = cmd.level;
  return doc;
}

void emit_json(std::ostream& out, const ordered_json& doc) {
  out << doc.dump(2) << "\n";
}

void emit_result(const Command& cmd, std::ostream& out, const std::string& text,
                 ordered_json value) {
  if (!cmd.json) {
    out << text << "\n";
    return;
  }
  ordered_json doc = doc_head(cmd);
  doc["result"] = std::move(value);
  emit_json(out, doc);
}

void emit_annulus(const Command& cmd, std::ostream& out, const AnnulusSkein& u) {
  emit_result(cmd, out, annulus_string(u),
              terms_json(u.terms(), [](long k) { return annulus_key_label(k); }));
}

void emit_pants(const Command& cmd, std::ostream& out, const PantsSkein& u) {
  emit_result(cmd, out, pants_string(u),
              terms_json(u.terms(),
                         [](const PantsSkein::Key& k) { return pants_key_label(k); }));
}

void emit_torus(const Command& cmd, std::ostream& out, const TorusSkein& u) {
  emit_result(cmd, out, torus_string(u),
              terms_json(u.terms(),
                         [](const TorusSkein::Key& k) { return torus_key_label(k); }));
}

void emit_punctured(const Command& cmd, std::ostream& out, const PuncturedSkein& u) {
  emit_result(cmd, out, punctured_string(u),
              terms_json(u.terms(), [](const PuncturedSkein::Key& k) {
                return punctured_key_label(k);
              }));
}

void emit_char(const Command& cmd, std::ostream& out, const CharElement& u) {
  emit_result(cmd, out, char_string(u), char_json(u));
}

void emit_scalar(const Command& cmd, std::ostream& out, const CycloScalar& c) {
  if (!cmd.json) {
    out << scalar_string(c) << "\n";
    return;
  }
  ordered_json doc = doc_head(cmd);
  doc["value"] = scalar_json(c);
  emit_json(out, doc);
}

void require_operands(const Command& cmd, std::size_t count) {
  if (cmd.operands.size() == count) return;
  throw domain_error("the '" + cmd.verb + "' verb takes " + std::to_string(count) +
                     (count == 1 ? " operand" : " operands"));
}

void reject_place(const Command& cmd) {
  if (!cmd.place.empty())
    throw domain_error("the '" + cmd.verb + "' verb does not take --place");
}

Place parse_place_spec(const std::string& spec, Surface s, int n) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = spec.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(spec.substr(start));
      break;
    }
    parts.push_back(spec.substr(start, comma - start));
    start = comma + 1;
  }
  std::map<std::string, CycloScalar> vals;
  for (const std::string& part : parts) {
    if (trim(part).empty()) continue;
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw domain_error("place parameters must look like name=value");
    const std::string name = trim(part.substr(0, eq));
    const CycloScalar value = parse_scalar(part.substr(eq + 1), n);
    if (!vals.emplace(name, value).second)
      throw domain_error("duplicate place parameter " + name);
  }
  auto take = [&](const char* name) {
    auto it = vals.find(name);
    if (it == vals.end())
      throw domain_error(std::string("missing place parameter ") + name);
    CycloScalar v = it->second;
    vals.erase(it);
    return v;
  };
  auto done = [&] {
    if (!vals.empty())
      throw domain_error("unknown place parameter " + vals.begin()->first);
  };
  switch (s) {
    case Surface::annulus: {
      if (vals.count("q")) {
        const CycloScalar q = take("q");
        done();
        return Place::annulus_place(n, annulus_z_from_q(n, q));
      }
      const CycloScalar z = take("z");
      done();
      return Place::annulus_place(n, z);
    }
    case Surface::pants: {
      const CycloScalar z1 = take("z1");
      const CycloScalar z2 = take("z2");
      const CycloScalar z3 = take("z3");
      done();
      return Place::pants_place(n, z1, z2, z3);
    }
    case Surface::torus: {
      const CycloScalar lambda = take("lambda");
      const CycloScalar mu = take("mu");
      done();
      return Place::torus_place(n, lambda, mu);
    }
    case Surface::punctured: {
      const CycloScalar lambda = take("lambda");
      const CycloScalar mu = take("mu");
      const CycloScalar w = take("w");
      done();
      return Place::punctured_place(n, lambda, mu, w);
    }
  }
  throw internal_check_error("unhandled surface tag in place parsing");
}

// Basis label "(p,q)" for reduce --basis C.
std::pair<int, int> parse_c_label(const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) {
    throw parse_error(msg, 1, i + 1);
  };
  auto read_int = [&]() -> int {
    skip();
    std::size_t j = i;
    if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
    std::size_t digits = j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == digits) fail("expected an integer");
    const int v = std::stoi(text.substr(i, j - i));
    i = j;
    return v;
  };
  skip();
  if (i >= text.size() || text[i] != '(') fail("expected a basis label like (p,q)");
  ++i;
  const int p = read_int();
  skip();
  if (i >= text.size() || text[i] != ',') fail("expected ','");
  ++i;
  const int q = read_int();
  skip();
  if (i >= text.size() || text[i] != ')') fail("expected ')'");
  ++i;
  skip();
  if (i < text.size()) fail("unexpected trailing input");
  return {p, q};
}

void print_char_matrix(std::ostream& out, const RingMatrix<CharElement>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << " | ";
      out << char_string(m.at(i, j));
    }
    out << "\n";
  }
}

ordered_json char_matrix_json(const RingMatrix<CharElement>& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(char_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit_char_matrix(const Command& cmd, std::ostream& out,
                      const RingMatrix<CharElement>& m) {
  if (!cmd.json) {
    print_char_matrix(out, m);
    return;
  }
  ordered_json doc = doc_head(cmd);
  doc["rows"] = char_matrix_json(m);
  emit_json(out, doc);
}

void emit_scalar_matrix(const Command& cmd, std::ostream& out,
                        const RingMatrix<CycloScalar>& m) {
  if (!cmd.json) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j) out << " | ";
        out << scalar_string(m.at(i, j));
      }
      out << "\n";
    }
    return;
  }
  ordered_json doc = doc_head(cmd);
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  emit_json(out, doc);
}

void emit_fraction_matrix(const Command& cmd, std::ostream& out,
                          const RingMatrix<CharFraction>& m) {
  if (!cmd.json) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j) out << " | ";
        out << fraction_string(m.at(i, j));
      }
      out << "\n";
    }
    return;
  }
  ordered_json doc = doc_head(cmd);
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(fraction_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  emit_json(out, doc);
}

RingMatrix<CycloScalar> specialize_matrix(const RingMatrix<CharElement>& m,
                                          const Place& phi) {
  return mat_convert(m, phi.context().zero(), [&](const CharElement& e) {
    return specialize_char(e, phi);
  });
}

// Coordinate listings (reduce, invert) print one "label: value" line per
// basis vector; in JSON they become {"key", ...} objects.
void emit_char_coords(const Command& cmd, std::ostream& out, const std::string& basis,
                      const std::vector<std::pair<std::string, CharElement>>& coords) {
  if (!cmd.json) {
    for (const auto& [label, value] : coords)
      out << label << ": " << char_string(value) << "\n";
    return;
  }
  ordered_json doc = doc_head(cmd);
  doc["basis"] = basis;
  ordered_json arr = ordered_json::array();
  for (const auto& [label, value] : coords) {
    ordered_json t;
    t["key"] = label;
    t["coeff"] = char_json(value);
    arr.push_back(std::move(t));
  }
  doc["coordinates"] = std::move(arr);
  emit_json(out, doc);
}

void emit_fraction_coords(
    const Command& cmd, std::ostream& out, const std::string& basis,
    const std::vector<std::pair<std::string, CharFraction>>& coords) {
  if (!cmd.json) {
    for (const auto& [label, value] : coords)
      out << label << ": " << fraction_string(value) << "\n";
    return;
  }
  ordered_json doc = doc_head(cmd);
  doc["basis"] = basis;
  ordered_json arr = ordered_json::array();
  for (const auto& [label, value] : coords) {
    ordered_json t;
    t["key"] = label;
    t["num"] = char_json(value.num());
    t["den"] = char_json(value.den());
    arr.push_back(std::move(t));
  }
  doc["coordinates"] = std::move(arr);
  emit_json(out, doc);
}

std::string slot_label(const TorusSkein::Key& k) {
  return "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
}

std::vector<std::pair<std::string, CharFraction>> reduced_coords(
    const TorusReduced& red) {
  std::vector<std::pair<std::string, CharFraction>> coords;
  for (const auto& [key, value] : red.slots)
    coords.emplace_back(slot_label(key), value);
  return coords;
}

void do_mul(const Command& cmd, std::ostream& out) {
  require_operands(cmd, 2);
  reject_place(cmd);
  const int n = cmd.level;
  switch (cmd.surface) {
    case Surface::annulus:
      emit_annulus(cmd, out, ann_mul(parse_annulus(cmd.operands[0], n),
                                     parse_annulus(cmd.operands[1], n)));
      return;
    case Surface::pants:
      emit_pants(cmd, out, pants_mul(parse_pants(cmd.operands[0], n),
                                     parse_pants(cmd.operands[1], n)));
      return;
    case Surface::torus:
      emit_torus(cmd, out, torus_mul(parse_torus(cmd.operands[0], n),
                                     parse_torus(cmd.operands[1], n)));
      return;
    case Surface::punctured:
      // Only the boundary-polynomial fragment of the product is defined.
      emit_punctured(cmd, out,
                     delta_poly_mul(parse_punctured(cmd.operands[0], n),
                                    parse_punctured(cmd.operands[1], n)));
      return;
  }
}

void do_trace(const Command& cmd, std::ostream& out) {
  require_operands(cmd, 1);
  const int n = cmd.level;
  CharElement t(cmd.surface, n);
  switch (cmd.surface) {
    case Surface::annulus:
      t = ann_trace(parse_annulus(cmd.operands[0], n));
      break;
    case Surface::pants:
      t = pants_trace(parse_pants(cmd.operands[0], n));
      break;
    case Surface::torus:
      t = torus_trace_raw(parse_torus(cmd.operands[0], n));
      break;
    case Surface::punctured:
      t = punctured_trace(parse_punctured(cmd.operands[0], n));
      break;
  }
  if (!cmd.place.empty()) {
    const Place phi = parse_place_spec(cmd.place, cmd.surface, n);
    emit_scalar(cmd, out, specialize_char(t, phi));
    return;
  }
  emit_char(cmd, out, t);
}

void do_reduce(const Command& cmd, std::ostream& out) {
  require_operands(cmd, 1);
  reject_place(cmd);
  const int n = cmd.level;
  if (cmd.surface == Surface::annulus) {
    const std::vector<CharElement> coords = ann_reduce(parse_annulus(cmd.operands[0], n));
    std::vector<std::pair<std::string, CharElement>> labeled;
    for (std::size_t k = 0; k < coords.size(); ++k)
      labeled.emplace_back("T[" + std::to_string(k) + "]", coords[k]);
    emit_char_coords(cmd, out, "T", labeled);
    return;
  }
  if (cmd.surface != Surface::torus)
    throw domain_error("basis reduction is implemented for the annulus and torus");
  if (cmd.basis == "B") {
    const auto comb = torus_reduce_to_B(parse_torus(cmd.operands[0], n));
    std::vector<std::pair<std::string, CharElement>> labeled;
    for (const auto& [key, value] : comb) labeled.emplace_back(slot_label(key), value);
    emit_char_coords(cmd, out, "B", labeled);
    return;
  }
  if (cmd.basis == "Bprime") {
    const TorusReduced red = torus_reduce_to_Bprime(parse_torus(cmd.operands[0], n));
    emit_fraction_coords(cmd, out, "Bprime", reduced_coords(red));
    return;
  }
  if (cmd.basis == "C") {
    const auto [p, q] = parse_c_label(cmd.operands[0]);
    if (p < 0 || p >= n || q < 0 || q >= n)
      throw domain_error("basis C labels range over 0 <= p,q < N");
    emit_fraction_coords(cmd, out, "C", reduced_coords(basis_C_expand(n, p, q)));
    return;
  }
  throw domain_error("unknown basis '" + cmd.basis + "' (expected B, Bprime, or C)");
}

void do_invert(const Command& cmd, std::ostream& out) {
  require_operands(cmd, 1);
  reject_place(cmd);
  const int n = cmd.level;
  if (cmd.surface == Surface::annulus) {
    const std::vector<CharFraction> coords = ann_invert(parse_annulus(cmd.operands[0], n));
    std::vector<std::pair<std::string, CharFraction>> labeled;
    for (std::size_t k = 0; k < coords.size(); ++k)
      labeled.emplace_back("T[" + std::to_string(k) + "]", coords[k]);
    emit_fraction_coords(cmd, out, "T", labeled);
    return;
  }
  if (cmd.surface == Surface::torus) {
    const TorusReduced red = torus_invert(parse_torus(cmd.operands[0], n));
    emit_fraction_coords(cmd, out, "Bprime", reduced_coords(red));
    return;
  }
  throw domain_error("inversion is implemented for the annulus and torus");
}

void do_leftmat(const Command& cmd, std::ostream& out) {
  require_operands(cmd, 1);
  const int n = cmd.level;
  if (cmd.surface == Surface::annulus) {
    const RingMatrix<CharElement> m = ann_left_matrix(parse_annulus(cmd.operands[0], n));
    if (!cmd.place.empty()) {
      const Place phi = parse_place_spec(cmd.place, cmd.surface, n);
      emit_scalar_matrix(cmd, out, specialize_matrix(m, phi));
      return;
    }
    emit_char_matrix(cmd, out, m);
    return;
  }
  if (cmd.surface == Surface::torus) {
    reject_place(cmd);
    emit_fraction_matrix(cmd, out, torus_left_matrix(parse_torus(cmd.operands[0], n)));
    return;
  }
  throw domain_error("left multiplication matrices are implemented for the annulus and torus");
}

RingMatrix<CharElement> pairing_matrix_for(Surface s, int n) {
  switch (s) {
    case Surface::annulus:
      return ann_pairing_matrix(n);
    case Surface::pants:
      return pants_pairing_matrix(n);
    case Surface::torus:
      return torus_pairing_matrix(n);
    case Surface::punctured:
      break;
  }
  throw domain_error("the punctured torus has no pairing matrix in this model");
}

void do_pairing(const Command& cmd, std::ostream& out) {
  require_operands(cmd, 0);
  reject_place(cmd);
  emit_char_matrix(cmd, out, pairing_matrix_for(cmd.surface, cmd.level));
}

void do_pairing_det(const Command& cmd, std::ostream& out) {
  require_operands(cmd, 0);
  const int n = cmd.level;
  if (!cmd.place.empty()) {
    const Place phi = parse_place_spec(cmd.place, cmd.surface, n);
    const FrobeniusResult r = specialized_frobenius_check(phi);
    if (r.verdict == FrobeniusVerdict::not_computable)
      throw domain_error("the pairing determinant of the punctured torus is not computed");
    if (!cmd.json) {
      out << scalar_string(r.det) << "\n";
      return;
    }
    ordered_json doc = doc_head(cmd);
    doc["det"] = scalar_json(r.det);
    emit_json(out, doc);
    return;
  }
  CharElement det(cmd.surface, n);
  switch (cmd.surface) {
    case Surface::annulus:
      det = ann_pairing_det(n);
      break;
    case Surface::pants:
      det = pants_pairing_det(n);
      break;
    case Surface::torus:
      det = torus_pairing_det(n);
      break;
    case Surface::punctured:
      throw domain_error("the pairing determinant of the punctured torus is not computed");
  }
  if (!cmd.json) {
    out << char_string(det) << "\n";
    return;
  }
  ordered_json doc = doc_head(cmd);
  doc["det"] = char_json(det);
  emit_json(out, doc);
}

int do_frobenius(const Command& cmd, std::ostream& out) {
  require_operands(cmd, 0);
  if (cmd.place.empty()) throw domain_error("the 'frobenius' verb needs --place");
  const Place phi = parse_place_spec(cmd.place, cmd.surface, cmd.level);
  const FrobeniusResult r = specialized_frobenius_check(phi);
  if (!cmd.json) {
    out << "verdict: " << verdict_name(r.verdict) << "\n";
    if (r.verdict == FrobeniusVerdict::not_computable)
      out << "det: not computed\n";
    else
      out << "det: " << scalar_string(r.det) << "\n";
  } else {
    ordered_json doc = doc_head(cmd);
    doc["place"] = cmd.place;
    doc["verdict"] = verdict_name(r.verdict);
    if (r.verdict == FrobeniusVerdict::not_computable)
      doc["det"] = nullptr;
    else
      doc["det"] = scalar_json(r.det);
    emit_json(out, doc);
  }
  if (cmd.fail_degenerate && r.verdict == FrobeniusVerdict::degenerate) return 4;
  return 0;
}

void do_embed(const Command& cmd, std::ostream& out) {
  require_operands(cmd, 1);
  reject_place(cmd);
  if (cmd.surface != Surface::torus)
    throw domain_error("the Laurent embedding is a torus operation");
  const int n = cmd.level;
  const TorusSkein u = parse_torus(cmd.operands[0], n);
  const CycloContext& ctx = CycloContext::get(n);
  LaurentElement e(ctx);
  for (const auto& [key, c] : u.terms()) {
    if (key == TorusSkein::Key{0, 0}) {
      e.add_term(0, 0, c);
      continue;
    }
    LaurentElement part = laurent_embed_curve(ctx, key.first, key.second);
    e = e + part * LaurentElement::monomial(ctx, 0, 0, c);
  }
  if (!cmd.json) {
    out << laurent_string(e) << "\n";
    return;
  }
  ordered_json doc = doc_head(cmd);
  ordered_json arr = ordered_json::array();
  for (const auto& [ij, c] : e.terms()) {
    ordered_json t;
    t["l"] = ij.first;
    t["m"] = ij.second;
    t["coeff"] = scalar_json(c);
    arr.push_back(std::move(t));
  }
  doc["result"] = std::move(arr);
  emit_json(out, doc);
}

int do_verify_identities(const Command& cmd, std::ostream& out) {
  require_operands(cmd, 0);
  reject_place(cmd);
  if (cmd.surface != Surface::torus)
    throw domain_error("identity verification is a torus operation");
  const std::vector<IdentityReport> reports = torus_verify_identities(cmd.level);
  bool all_ok = true;
  if (!cmd.json) {
    for (const IdentityReport& r : reports) {
      if (r.ok) {
        out << r.family << ": ok (" << r.instances << " instances)\n";
      } else {
        out << r.family << ": FAIL " << r.detail << "\n";
        all_ok = false;
      }
    }
  } else {
    ordered_json doc = doc_head(cmd);
    ordered_json arr = ordered_json::array();
    for (const IdentityReport& r : reports) {
      ordered_json t;
      t["family"] = r.family;
      t["instances"] = r.instances;
      t["ok"] = r.ok;
      if (!r.ok) t["detail"] = r.detail;
      arr.push_back(std::move(t));
      all_ok = all_ok && r.ok;
    }
    doc["identities"] = std::move(arr);
    emit_json(out, doc);
  }
  return all_ok ? 0 : 1;
}

// Keys of the parsed operand are read as character-ring labels: T[a] means
// the a-th threaded generator, (p,q) the threaded curve class, P(a,b,c) the
// threaded triple, d^k the k-th threaded boundary generator.
void do_thread(const Command& cmd, std::ostream& out) {
  require_operands(cmd, 1);
  reject_place(cmd);
  const int n = cmd.level;
  CharElement u(cmd.surface, n);
  switch (cmd.surface) {
    case Surface::annulus: {
      const AnnulusSkein s = parse_annulus(cmd.operands[0], n);
      for (const auto& [k, c] : s.terms())
        u.add_term(char_key_annulus(static_cast<int>(k)), c);
      emit_annulus(cmd, out, ann_thread(u));
      return;
    }
    case Surface::pants: {
      const PantsSkein s = parse_pants(cmd.operands[0], n);
      for (const auto& [key, c] : s.terms())
        u.add_term(char_key_pants(static_cast<int>(key[0]), static_cast<int>(key[1]),
                                  static_cast<int>(key[2])),
                   c);
      emit_pants(cmd, out, pants_thread(u));
      return;
    }
    case Surface::torus: {
      const TorusSkein s = parse_torus(cmd.operands[0], n);
      for (const auto& [key, c] : s.terms())
        u.add_term(char_key_torus(key.first, key.second), c);
      emit_torus(cmd, out, torus_thread(u));
      return;
    }
    case Surface::punctured: {
      const PuncturedSkein s = parse_punctured(cmd.operands[0], n);
      PuncturedSkein r(n);
      for (const auto& [key, c] : s.terms()) {
        PuncturedSkein part = key[1] == 0 && key[2] == 0
                                  ? PuncturedSkein::unit(n)
                                  : PuncturedSkein::curve(n, n * key[1], n * key[2]);
        if (key[0] > 0) part = delta_poly_mul(cheb_delta(n, n * key[0]), part);
        r = r + part.scaled(c);
      }
      emit_punctured(cmd, out, r);
      return;
    }
  }
}

void do_quotient(const Command& cmd, std::ostream& out) {
  require_operands(cmd, 1);
  reject_place(cmd);
  if (cmd.surface != Surface::punctured)
    throw domain_error("the boundary quotient maps the punctured torus to the torus");
  emit_torus(cmd, out, quotient_to_torus(parse_punctured(cmd.operands[0], cmd.level)));
}

int run_checked(const Command& cmd, std::ostream& out) {
  if (cmd.level < 3 || cmd.level % 2 == 0)
    throw domain_error("the level must be odd and at least 3");
  if (cmd.verb == "mul") {
    do_mul(cmd, out);
  } else if (cmd.verb == "reduce") {
    do_reduce(cmd, out);
  } else if (cmd.verb == "trace") {
    do_trace(cmd, out);
  } else if (cmd.verb == "invert") {
    do_invert(cmd, out);
  } else if (cmd.verb == "leftmat") {
    do_leftmat(cmd, out);
  } else if (cmd.verb == "pairing") {
    do_pairing(cmd, out);
  } else if (cmd.verb == "pairing-det") {
    do_pairing_det(cmd, out);
  } else if (cmd.verb == "frobenius") {
    return do_frobenius(cmd, out);
  } else if (cmd.verb == "embed") {
    do_embed(cmd, out);
  } else if (cmd.verb == "verify-identities") {
    return do_verify_identities(cmd, out);
  } else if (cmd.verb == "thread") {
    do_thread(cmd, out);
  } else if (cmd.verb == "quotient") {
    do_quotient(cmd, out);
  } else {
    throw domain_error("unknown verb '" + cmd.verb + "'");
  }
  return 0;
}

}  // namespace

Surface surface_from_name(const std::string& name) {
  if (name == "annulus") return Surface::annulus;
  if (name == "pants") return Surface::pants;
  if (name == "torus") return Surface::torus;
  if (name == "ptorus") return Surface::punctured;
  throw domain_error("unknown surface '" + name +
                     "' (expected annulus, pants, torus, or ptorus)");
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    return run_checked(cmd, out);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const internal_check_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace skein
