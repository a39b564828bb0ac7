#include "tlab/workspace.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "tlab/errors.hpp"
#include "tlab/homology.hpp"
#include "tlab/resolution.hpp"

namespace tlab {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars, const PrimeField& field)
      : text_(text), vars_(vars), field_(field) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 1, static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    skip_space();
    bool negate = accept('-');
    if (!negate) accept('+');
    Polynomial acc = term();
    if (negate) acc = scale(acc, field_.neg(1), field_);
    for (;;) {
      if (accept('+')) {
        acc = add(acc, term(), field_);
      } else if (accept('-')) {
        acc = sub(acc, term(), field_);
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = power();
    while (accept('*')) acc = mul(acc, power(), field_);
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      std::uint64_t e = number();
      if (e > 1000) fail("exponent too large");
      Polynomial r = Polynomial::constant(1);
      for (std::uint64_t i = 0; i < e; ++i) r = mul(r, base, field_);
      return r;
    }
    return base;
  }

  std::uint64_t number() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a number");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (1ULL << 40)) fail("number too large");
      ++pos_;
    }
    return v;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of polynomial");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expression();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(field_.from_int(static_cast<std::int64_t>(number())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return Polynomial::term(Monomial::variable(i));
      }
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  const PrimeField& field_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Field {
  std::string_view text;
  int column;  // 1-based column of text's first character
};

/// Splits on top-level commas, keeping track of columns.
std::vector<Field> split_commas(std::string_view text, int column) {
  std::vector<Field> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string_view piece = text.substr(start, i - start);
      std::size_t lead = 0;
      while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
      out.push_back({trim(piece), column + static_cast<int>(start + lead)});
      start = i + 1;
    }
  }
  return out;
}

Polynomial parse_at(const Field& f, const std::vector<std::string>& vars, const PrimeField& field,
                    int line) {
  try {
    return parse_polynomial(f.text, vars, field);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    msg = msg.substr(msg.find(": ") + 2);
    throw ParseError(msg, line, f.column + e.column() - 1);
  }
}

struct PendingModule {
  std::string name;
  int line = 0;
  std::vector<int> degrees;
  bool has_degrees = false;
  std::vector<std::vector<Polynomial>> relations;
  std::vector<int> relation_lines;
};

}  // namespace

const PresentedModule* Workspace::find(std::string_view name) const {
  for (const auto& [n, m] : modules) {
    if (n == name) return &m;
  }
  return nullptr;
}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                            const PrimeField& field) {
  return PolyParser(text, variables, field).parse();
}

Workspace parse_workspace_text(std::string_view text, std::string source) {
  std::string ring_name;
  std::uint64_t characteristic = PrimeField::kDefaultCharacteristic;
  std::vector<std::string> variables;
  std::vector<Field> ideal_fields;
  int ideal_line = 0;
  bool have_vars = false;
  std::vector<PendingModule> pending;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    int line_start = static_cast<int>(line.data() - raw.data()) + 1;
    std::size_t sp = line.find_first_of(" \t");
    std::string_view key = line.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
    int rest_col = rest.empty() ? line_start + static_cast<int>(line.size())
                                : static_cast<int>(rest.data() - raw.data()) + 1;

    auto words = [&](std::string_view s) {
      std::vector<std::string> out;
      std::istringstream in{std::string(s)};
      for (std::string w; in >> w;) out.push_back(w);
      return out;
    };

    if (key == "ring") {
      if (!ring_name.empty()) throw ParseError("second ring block", line_no, line_start);
      auto w = words(rest);
      if (w.size() != 1) throw ParseError("expected: ring NAME", line_no, line_start);
      ring_name = w[0];
    } else if (key == "characteristic") {
      auto w = words(rest);
      if (w.size() != 1 || w[0].find_first_not_of("0123456789") != std::string::npos || w[0].size() > 10) {
        throw ParseError("expected a positive integer characteristic", line_no, rest_col);
      }
      characteristic = std::stoull(w[0]);
      if (characteristic < 5 || !is_prime(characteristic) || characteristic >= (1ULL << 31)) {
        throw ParseError("characteristic must be a prime at least 5 and below 2^31", line_no, rest_col);
      }
    } else if (key == "variables") {
      variables = words(rest);
      for (const auto& v : variables) {
        if (!std::isalpha(static_cast<unsigned char>(v[0])) ||
            v.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_") !=
                std::string::npos) {
          throw ParseError("bad variable name '" + v + "'", line_no, rest_col);
        }
      }
      if (variables.empty()) throw ParseError("no variables given", line_no, line_start);
      have_vars = true;
    } else if (key == "ideal") {
      ideal_fields = rest.empty() ? std::vector<Field>{} : split_commas(rest, rest_col);
      ideal_line = line_no;
    } else if (key == "module") {
      auto w = words(rest);
      if (w.size() != 1) throw ParseError("expected: module NAME", line_no, line_start);
      pending.push_back({w[0], line_no, {}, false, {}, {}});
    } else if (key == "generators") {
      if (pending.empty()) throw ParseError("generators outside a module block", line_no, line_start);
      PendingModule& m = pending.back();
      if (m.has_degrees) throw ParseError("generators given twice", line_no, line_start);
      for (const auto& w : words(rest)) {
        try {
          std::size_t used = 0;
          int d = std::stoi(w, &used);
          if (used != w.size()) throw std::invalid_argument(w);
          m.degrees.push_back(d);
        } catch (const std::exception&) {
          throw ParseError("bad generator degree '" + w + "'", line_no, rest_col);
        }
      }
      m.has_degrees = true;
    } else if (key == "relation") {
      if (pending.empty()) throw ParseError("relation outside a module block", line_no, line_start);
      if (!have_vars) throw ParseError("relation before variables", line_no, line_start);
      PendingModule& m = pending.back();
      if (!m.has_degrees) throw ParseError("relation before generators", line_no, line_start);
      auto fields = split_commas(rest, rest_col);
      if (fields.size() != m.degrees.size()) {
        throw ParseError("relation needs " + std::to_string(m.degrees.size()) + " entries, got " +
                             std::to_string(fields.size()),
                         line_no, rest_col);
      }
      PrimeField field(static_cast<std::uint32_t>(characteristic));
      std::vector<Polynomial> column;
      for (const auto& f : fields) column.push_back(parse_at(f, variables, field, line_no));
      m.relations.push_back(std::move(column));
      m.relation_lines.push_back(line_no);
    } else {
      throw ParseError("unknown keyword '" + std::string(key) + "'", line_no, line_start);
    }
    if (end == text.size()) break;
  }

  if (ring_name.empty()) throw ParseError("missing ring block", 1, 1);
  if (!have_vars) throw ParseError("missing variables line", 1, 1);
  PrimeField field(static_cast<std::uint32_t>(characteristic));
  std::vector<Polynomial> ideal;
  for (const auto& f : ideal_fields) {
    Polynomial p = parse_at(f, variables, field, ideal_line);
    if (!p.is_zero() && !p.is_homogeneous()) {
      throw ParseError("ideal generator '" + std::string(f.text) + "' is not homogeneous", ideal_line, f.column);
    }
    if (!p.is_zero() && p.degree() < 2) {
      throw ParseError("ideal generator '" + std::string(f.text) + "' is a linear form or constant",
                       ideal_line, f.column);
    }
    ideal.push_back(std::move(p));
  }

  Workspace ws;
  ws.source = std::move(source);
  ws.ring = RingDescriptor::create(ring_name, field, variables, ideal);
  for (auto& m : pending) {
    if (!m.has_degrees) throw ParseError("module " + m.name + " has no generators line", m.line, 1);
    if (m.name == "k" || m.name == "m" || m.name == "R" || ws.find(m.name)) {
      throw ParseError("module name '" + m.name + "' is already taken", m.line, 1);
    }
    std::vector<ModuleElement> cols;
    for (std::size_t c = 0; c < m.relations.size(); ++c) {
      ModuleElement col = ModuleElement::from_components(m.relations[c]);
      if (!col.is_zero() && !col.is_homogeneous(m.degrees)) {
        throw ParseError("relation is not homogeneous for the generator degrees", m.relation_lines[c], 1);
      }
      cols.push_back(std::move(col));
    }
    ws.modules.emplace_back(m.name, PresentedModule::cokernel(ws.ring, m.degrees, std::move(cols)));
  }
  return ws;
}

Workspace parse_workspace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open workspace file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_workspace_text(buf.str(), path.string());
}

namespace {

class ExprParser {
 public:
  ExprParser(const Workspace& ws, std::string_view text) : ws_(ws), text_(text) {}

  PresentedModule parse() {
    PresentedModule m = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("module expression '" + std::string(text_) + "': " + what + " at position " +
                     std::to_string(pos_ + 1));
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }
  /// Raw text up to the matching close parenthesis, split on top-level commas.
  std::vector<std::string> raw_arguments() {
    std::size_t start = pos_;
    int depth = 1;
    while (pos_ < text_.size() && depth > 0) {
      if (text_[pos_] == '(') ++depth;
      if (text_[pos_] == ')') --depth;
      ++pos_;
    }
    if (depth != 0) fail("unbalanced parentheses");
    std::vector<std::string> out;
    for (const auto& f : split_commas(text_.substr(start, pos_ - 1 - start), 1)) out.emplace_back(f.text);
    return out;
  }
  std::vector<Polynomial> polynomials() {
    std::vector<Polynomial> out;
    for (const auto& a : raw_arguments()) {
      Polynomial p = parse_polynomial(a, ws_.ring->variables(), ws_.ring->field());
      if (!p.is_homogeneous()) fail("'" + a + "' is not homogeneous");
      out.push_back(std::move(p));
    }
    return out;
  }

  PresentedModule expr() {
    std::string name = word();
    const Ring& ring = ws_.ring;
    if (!peek('(')) {
      if (name == "k") return PresentedModule::residue_field(ring);
      if (name == "m") return PresentedModule::maximal_ideal(ring);
      if (name == "R") return PresentedModule::free(ring, {0});
      if (const PresentedModule* m = ws_.find(name)) return *m;
      fail("unknown module '" + name + "'");
    }
    expect('(');
    if (name == "quot") return PresentedModule::cyclic(ring, polynomials());
    if (name == "ideal") {
      std::vector<ModuleElement> gens;
      for (const auto& p : polynomials()) gens.push_back(ModuleElement::single(1, 0, p));
      return subquotient(ring, {0}, gens, {});
    }
    if (name == "omega") {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_ || pos_ - start > 3) fail("expected a syzygy index");
      std::size_t n = std::stoul(std::string(text_.substr(start, pos_ - start)));
      expect(',');
      PresentedModule inner = expr();
      expect(')');
      return syzygy(inner, n);
    }
    if (name == "tr" || name == "dual") {
      PresentedModule inner = expr();
      expect(')');
      return name == "tr" ? transpose(inner) : dual(inner);
    }
    if (name == "sum") {
      std::vector<PresentedModule> parts{expr()};
      while (peek(',')) {
        ++pos_;
        parts.push_back(expr());
      }
      expect(')');
      return direct_sum(parts);
    }
    fail("unknown function '" + name + "'");
  }

  const Workspace& ws_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PresentedModule evaluate_module(const Workspace& ws, std::string_view expression) {
  return ExprParser(ws, expression).parse();
}

}  // namespace tlab
