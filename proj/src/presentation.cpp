#include "srank/presentation.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace srank {

std::string ParseError::format(const std::string& what, std::size_t line, std::size_t column) {
  std::ostringstream os;
  os << line << ':' << column << ": " << what;
  return os.str();
}

std::size_t MonoidPresentation::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == id) return i;
  return npos;
}

std::uint64_t MonoidPresentation::max_relation_degree() const {
  std::uint64_t d = 0;
  for (const auto& r : relations) d = std::max({d, r.lhs.degree(), r.rhs.degree()});
  return d;
}

namespace {

enum class Tok { Ident, Number, Plus, Star, Equals, Semi, End };

struct Token {
  Tok kind;
  std::string text;
  std::uint64_t value = 0;
  std::size_t line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) {
      t.kind = Tok::End;
      return t;
    }
    char ch = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        advance();
      t.kind = Tok::Ident;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::uint64_t v = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        v = v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
        if (v > std::numeric_limits<Coeff>::max())
          throw ParseError("coefficient too large", t.line, t.col);
        advance();
      }
      if (pos_ < src_.size() && (src_[pos_] == '.' || src_[pos_] == '/'))
        throw ParseError("non-integer coefficient", t.line, t.col);
      t.kind = Tok::Number;
      t.value = v;
      return t;
    }
    advance();
    switch (ch) {
      case '+': t.kind = Tok::Plus; return t;
      case '*': t.kind = Tok::Star; return t;
      case '=': t.kind = Tok::Equals; return t;
      case ';': t.kind = Tok::Semi; return t;
      case '-': throw ParseError("negative coefficient", t.line, t.col);
      default: break;
    }
    std::string msg = "unexpected character '";
    if (static_cast<unsigned char>(ch) < 0x20 || static_cast<unsigned char>(ch) >= 0x7f)
      msg += "\\x" + hex(static_cast<unsigned char>(ch));
    else
      msg += ch;
    throw ParseError(msg + "'", t.line, t.col);
  }

 private:
  static std::string hex(unsigned char c) {
    const char* d = "0123456789abcdef";
    return {d[c >> 4], d[c & 15]};
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size()) {
      char ch = src_[pos_];
      if (ch == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Plus: return "'+'";
    case Tok::Star: return "'*'";
    case Tok::Equals: return "'='";
    case Tok::Semi: return "';'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { cur_ = lex_.next(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    cur_ = lex_.next();
    return t;
  }
  Token expect(Tok k, const char* context) {
    if (cur_.kind != k)
      throw ParseError(std::string("expected ") + describe(k) + " " + context + ", found " +
                           describe(cur_.kind),
                       cur_.line, cur_.col);
    return take();
  }
  [[noreturn]] void fail(const std::string& msg, const Token& at) {
    throw ParseError(msg, at.line, at.col);
  }

  ExponentVector expr(const MonoidPresentation& p) {
    ExponentVector v = p.zero();
    term(p, v);
    while (peek().kind == Tok::Plus) {
      take();
      term(p, v);
    }
    return v;
  }

 private:
  void term(const MonoidPresentation& p, ExponentVector& acc) {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      Token num = take();
      bool star = false;
      if (peek().kind == Tok::Star) {
        take();
        star = true;
      }
      if (peek().kind == Tok::Ident) {
        add_generator(p, take(), static_cast<Coeff>(num.value), acc);
        return;
      }
      if (num.value == 0 && !star) return;
      fail("expected generator after coefficient", peek());
    }
    if (t.kind == Tok::Ident) {
      add_generator(p, take(), 1, acc);
      return;
    }
    fail(std::string("expected term, found ") + describe(t.kind), t);
  }

  void add_generator(const MonoidPresentation& p, const Token& id, Coeff times,
                     ExponentVector& acc) {
    std::size_t i = p.index_of(id.text);
    if (i == MonoidPresentation::npos) fail("unknown generator '" + id.text + "'", id);
    std::uint64_t sum = static_cast<std::uint64_t>(acc[i]) + times;
    if (sum > std::numeric_limits<Coeff>::max()) fail("coefficient too large", id);
    acc[i] = static_cast<Coeff>(sum);
  }

  Lexer lex_;
  Token cur_;
};

bool reserved(const std::string& id) { return id == "gens" || id == "rel"; }

}  // namespace

MonoidPresentation parse_presentation(std::string_view text, std::string name) {
  MonoidPresentation p;
  p.name = std::move(name);
  Parser ps(text);

  Token kw = ps.peek();
  if (kw.kind != Tok::Ident || kw.text != "gens")
    ps.fail("expected 'gens' declaration", kw);
  ps.take();
  while (ps.peek().kind == Tok::Ident) {
    Token id = ps.take();
    if (reserved(id.text)) ps.fail("reserved word '" + id.text + "' used as generator", id);
    if (p.index_of(id.text) != MonoidPresentation::npos)
      ps.fail("duplicate generator '" + id.text + "'", id);
    p.generators.push_back(id.text);
  }
  if (p.generators.empty()) ps.fail("at least one generator is required", ps.peek());
  ps.expect(Tok::Semi, "after generator list");

  while (ps.peek().kind != Tok::End) {
    Token rel = ps.peek();
    if (rel.kind != Tok::Ident || rel.text != "rel") ps.fail("expected 'rel' statement", rel);
    ps.take();
    ExponentVector lhs = ps.expr(p);
    ps.expect(Tok::Equals, "between relation sides");
    ExponentVector rhs = ps.expr(p);
    ps.expect(Tok::Semi, "at end of relation");
    if (lhs == rhs) {
      p.diagnostics.push_back(std::to_string(rel.line) + ":" + std::to_string(rel.col) +
                              ": trivial relation dropped");
      continue;
    }
    p.relations.push_back({std::move(lhs), std::move(rhs)});
  }
  return p;
}

ExponentVector parse_element(std::string_view text, const MonoidPresentation& p) {
  Parser ps(text);
  ExponentVector v = ps.expr(p);
  ps.expect(Tok::End, "after element expression");
  return v;
}

namespace {

std::size_t resolve_entry(const nlohmann::json& j, const std::unordered_map<std::string, std::size_t>& idx,
                          std::size_t n, const std::string& where) {
  if (j.is_number_integer()) {
    auto v = j.get<long long>();
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw ParseError("out-of-range index " + std::to_string(v) + " in " + where, 1, 1);
    return static_cast<std::size_t>(v);
  }
  if (j.is_string()) {
    auto it = idx.find(j.get<std::string>());
    if (it == idx.end())
      throw ParseError("out-of-range index: unknown label '" + j.get<std::string>() + "' in " + where,
                       1, 1);
    return it->second;
  }
  throw ParseError("table entry must be a label or an index in " + where, 1, 1);
}

}  // namespace

CayleyDocument parse_cayley(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), 1, e.byte);
  }
  if (!j.is_object() || !j.contains("elements") || !j.contains("zero") || !j.contains("table"))
    throw ParseError("expected object with keys elements, zero, table", 1, 1);
  const auto& elems = j["elements"];
  if (!elems.is_array() || elems.empty())
    throw ParseError("elements must be a nonempty array", 1, 1);

  CayleyDocument doc;
  std::unordered_map<std::string, std::size_t> idx;
  for (const auto& e : elems) {
    if (!e.is_string()) throw ParseError("element labels must be strings", 1, 1);
    auto label = e.get<std::string>();
    if (!idx.emplace(label, doc.labels.size()).second)
      throw ParseError("duplicate element label '" + label + "'", 1, 1);
    doc.labels.push_back(label);
  }
  const std::size_t n = doc.labels.size();
  doc.zero = resolve_entry(j["zero"], idx, n, "zero");

  const auto& table = j["table"];
  if (!table.is_array() || table.size() != n)
    throw ParseError("ragged table: expected " + std::to_string(n) + " rows", 1, 1);
  doc.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (!table[r].is_array() || table[r].size() != n)
      throw ParseError("ragged table: row " + std::to_string(r) + " must have " +
                           std::to_string(n) + " entries",
                       1, 1);
    for (std::size_t c = 0; c < n; ++c)
      doc.table[r][c] = resolve_entry(table[r][c], idx, n,
                                      "row " + std::to_string(r) + " column " + std::to_string(c));
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (doc.table[doc.zero][x] != x || doc.table[x][doc.zero] != x)
      throw ParseError("identity axiom violated at element '" + doc.labels[x] + "'", 1, 1);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (doc.table[x][y] != doc.table[y][x])
        throw ParseError("asymmetric table at ('" + doc.labels[x] + "', '" + doc.labels[y] + "')",
                         1, 1);
  return doc;
}

std::string format_element(const ExponentVector& v, const std::vector<std::string>& generators) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (v[i] != 1) out += std::to_string(v[i]) + " ";
    out += generators[i];
  }
  return out.empty() ? "0" : out;
}

std::string format_presentation(const MonoidPresentation& p) {
  std::string out = "gens";
  for (const auto& g : p.generators) out += " " + g;
  out += ";\n";
  for (const auto& r : p.relations)
    out += "rel " + format_element(r.lhs, p.generators) + " = " +
           format_element(r.rhs, p.generators) + ";\n";
  return out;
}

std::string format_cayley(const CayleyDocument& doc) {
  nlohmann::json j;
  j["elements"] = doc.labels;
  j["zero"] = doc.labels[doc.zero];
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : doc.table) {
    nlohmann::json r = nlohmann::json::array();
    for (auto e : row) r.push_back(doc.labels[e]);
    rows.push_back(r);
  }
  j["table"] = rows;
  return j.dump();
}

}  // namespace srank
