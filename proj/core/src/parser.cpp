#include "qtangle/parser.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace qtangle {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message, std::size_t slice)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      slice_(slice),
      detail_(message) {}

namespace {

struct Token {
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

// Splits into whitespace-separated tokens with positions, dropping `#`
// comments. `split_punct` additionally makes '=' and ':' tokens of their own.
std::vector<Token> tokenize(std::string_view text, bool split_punct) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') {
        advance(text[i]);
        ++i;
      }
      continue;
    }
    if (is_space(c)) {
      advance(c);
      ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (split_punct && (c == '=' || c == ':')) {
      t.text = std::string(1, c);
      advance(c);
      ++i;
      out.push_back(std::move(t));
      continue;
    }
    while (i < text.size() && !is_space(text[i]) && text[i] != '#' &&
           !(split_punct && (text[i] == '=' || text[i] == ':'))) {
      t.text.push_back(text[i]);
      advance(text[i]);
      ++i;
    }
    out.push_back(std::move(t));
  }
  return out;
}

// Position just past the end of the text, for "expected X" at EOF.
Token end_position(std::string_view text) {
  Token t;
  for (char c : text) {
    if (c == '\n') {
      ++t.line;
      t.column = 1;
    } else {
      ++t.column;
    }
  }
  return t;
}

std::optional<long long> to_integer(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  long long v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    if (v > (std::numeric_limits<long long>::max() - 9) / 10) return std::nullopt;
    v = v * 10 + (s[i] - '0');
  }
  return s[0] == '-' ? -v : v;
}

[[noreturn]] void syntax(const Token& at, const std::string& what) {
  throw ParseError(ParseError::Kind::Syntax, at.line, at.column, what);
}

std::optional<Generator> parse_token(const std::string& tok) {
  auto sign = [](char c) -> std::optional<Sign> {
    if (c == '+') return Sign::Plus;
    if (c == '-') return Sign::Minus;
    return std::nullopt;
  };
  auto one = [&](std::string_view prefix) -> std::optional<Sign> {
    if (tok.size() != prefix.size() + 1 || tok.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    return sign(tok.back());
  };
  if (auto s = one("id")) return Generator::id(*s);
  if (auto s = one("cup")) return Generator::cup(*s);
  if (auto s = one("cap")) return Generator::cap(*s);
  if (tok.size() == 3 && (tok[0] == 'x' || tok[0] == 'y')) {
    auto s = sign(tok[1]);
    auto t = sign(tok[2]);
    if (s && t) return tok[0] == 'x' ? Generator::over(*s, *t) : Generator::under(*s, *t);
  }
  return std::nullopt;
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  const auto toks = tokenize(text, true);
  const Token eof = end_position(text);
  std::size_t i = 0;
  auto expect = [&](const char* lit) {
    if (i >= toks.size()) syntax(eof, std::string("expected '") + lit + "' but reached end of input");
    if (toks[i].text != lit) syntax(toks[i], std::string("expected '") + lit + "', found '" + toks[i].text + "'");
    ++i;
  };
  expect("braid");
  expect("n");
  expect("=");
  if (i >= toks.size()) syntax(eof, "expected strand count but reached end of input");
  const auto n = to_integer(toks[i].text);
  if (!n || toks[i].text[0] == '-' || toks[i].text[0] == '+') {
    syntax(toks[i], "expected a strand count, found '" + toks[i].text + "'");
  }
  if (*n < 1) throw ParseError(ParseError::Kind::Range, toks[i].line, toks[i].column, "strand count must be positive");
  ++i;
  expect(":");
  BraidWord out;
  out.n_strands = static_cast<std::size_t>(*n);
  for (; i < toks.size(); ++i) {
    const auto v = to_integer(toks[i].text);
    if (!v) syntax(toks[i], "expected a braid letter (nonzero integer), found '" + toks[i].text + "'");
    const long long mag = *v < 0 ? -*v : *v;
    if (*v == 0 || mag >= *n) {
      throw ParseError(ParseError::Kind::Range, toks[i].line, toks[i].column,
                       "braid letter " + toks[i].text + " out of range: need 1 <= |letter| < " + std::to_string(*n));
    }
    out.letters.push_back(static_cast<int>(*v));
  }
  return out;
}

std::string serialize_braid(const BraidWord& braid) {
  std::string s = "braid n=" + std::to_string(braid.n_strands) + ":";
  for (int l : braid.letters) s += " " + std::to_string(l);
  return s;
}

SlicedDiagram parse_sliced(std::string_view text) {
  // Tokens grouped by source line; blank and comment-only lines vanish.
  std::vector<std::vector<Token>> lines;
  {
    const auto toks = tokenize(text, false);
    for (const auto& t : toks) {
      if (lines.empty() || lines.back().front().line != t.line) lines.emplace_back();
      lines.back().push_back(t);
    }
  }
  if (lines.empty()) syntax(end_position(text), "expected 'bottom:' line");

  const auto& head = lines.front();
  std::string signs;
  Token signs_at = head.front();
  if (head.front().text == "bottom:") {
    if (head.size() > 2) syntax(head[2], "unexpected token '" + head[2].text + "' after bottom word");
    if (head.size() == 2) {
      signs = head[1].text;
      signs_at = head[1];
    }
  } else if (head.front().text.rfind("bottom:", 0) == 0) {
    if (head.size() > 1) syntax(head[1], "unexpected token '" + head[1].text + "' after bottom word");
    signs = head.front().text.substr(7);
    signs_at.column += 7;
  } else {
    syntax(head.front(), "expected 'bottom:', found '" + head.front().text + "'");
  }
  for (char c : signs) {
    if (c != '+' && c != '-') syntax(signs_at, "bottom word must use only '+' and '-', found '" + signs + "'");
  }

  std::vector<Slice> slices;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    Slice slice;
    const auto& line = lines[l];
    if (line.size() == 1 && line.front().text == ".") {
      slices.push_back(std::move(slice));
      continue;
    }
    for (const auto& t : line) {
      auto g = parse_token(t.text);
      if (!g) syntax(t, "unknown generator token '" + t.text + "'");
      slice.push_back(*g);
    }
    slices.push_back(std::move(slice));
  }

  SlicedDiagram d(SignWord::from_string(signs), std::move(slices));
  const ValidationReport report = validate(d);
  if (!report.ok) {
    const auto& line = lines[report.slice];
    std::size_t col;
    if (report.generator <= line.size()) {
      col = line[report.generator - 1].column;
    } else {
      col = line.back().column + line.back().text.size();
    }
    throw ParseError(ParseError::Kind::Validation, line.front().line, col, "validation error: " + report.message,
                     report.slice);
  }
  return d;
}

std::string serialize(const SlicedDiagram& d) {
  std::string out = "bottom:";
  if (!d.bottom().empty()) out += " " + d.bottom().to_string();
  for (const auto& slice : d.slices()) {
    out += "\n";
    if (slice.empty()) {
      out += ".";
      continue;
    }
    for (std::size_t i = 0; i < slice.size(); ++i) {
      if (i) out += " ";
      out += slice[i].token();
    }
  }
  return out;
}

namespace {

// Character-level reader for the one-line 1-cobordism form.
class CobScanner {
 public:
  explicit CobScanner(std::string_view text) : text_(text) {}

  void ws() {
    while (pos_ < text_.size() && is_space(text_[pos_])) step();
  }
  bool eat(char c) {
    ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      step();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  void keyword(std::string_view kw) {
    ws();
    if (text_.substr(pos_, kw.size()) != kw) fail("expected '" + std::string(kw) + "'");
    for (std::size_t i = 0; i < kw.size(); ++i) step();
  }
  SignWord word() {
    std::string s;
    while (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      s.push_back(text_[pos_]);
      step();
    }
    if (pos_ < text_.size() && !is_space(text_[pos_])) fail("sign words use only '+' and '-'");
    return SignWord::from_string(s);
  }
  std::size_t number() {
    ws();
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      step();
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }
  Endpoint endpoint() {
    ws();
    if (pos_ >= text_.size() || (text_[pos_] != 'b' && text_[pos_] != 't')) fail("expected a point b<i> or t<i>");
    const bool bottom = text_[pos_] == 'b';
    step();
    const std::size_t i = number();
    if (i == 0) fail("points are numbered from 1");
    return bottom ? Endpoint::bottom(i - 1) : Endpoint::top(i - 1);
  }
  bool done() {
    ws();
    return pos_ >= text_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Kind::Syntax, line_, col_, what);
  }
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

std::string point_name(Endpoint p) {
  return (p.side == Endpoint::Side::Bottom ? "b" : "t") + std::to_string(p.index + 1);
}

}  // namespace

Matching1 parse_matching1(std::string_view text) {
  CobScanner s(text);
  s.keyword("1cob");
  s.ws();
  s.keyword("src=");
  SignWord src = s.word();
  s.ws();
  s.keyword("tgt=");
  SignWord tgt = s.word();
  s.ws();
  s.keyword("pairs=");
  s.expect('[');
  std::vector<std::pair<Endpoint, Endpoint>> pairs;
  if (!s.eat(']')) {
    do {
      s.expect('(');
      const Endpoint a = s.endpoint();
      s.expect(',');
      const Endpoint b = s.endpoint();
      s.expect(')');
      pairs.emplace_back(a, b);
    } while (s.eat(','));
    s.expect(']');
  }
  std::size_t circles = 0;
  s.ws();
  if (!s.done()) {
    s.keyword("circles=");
    circles = s.number();
  }
  if (!s.done()) s.fail("unexpected trailing text");
  try {
    return Matching1::create(std::move(src), std::move(tgt), pairs, circles);
  } catch (const CobordError& e) {
    throw ParseError(ParseError::Kind::Validation, 1, 1, e.what());
  }
}

std::string serialize_matching1(const Matching1& m) {
  std::ostringstream os;
  os << "1cob src=" << m.source().to_string() << " tgt=" << m.target().to_string() << " pairs=[";
  bool first = true;
  for (const auto& [a, b] : m.pairs()) {
    if (!first) os << ",";
    first = false;
    os << "(" << point_name(a) << "," << point_name(b) << ")";
  }
  os << "] circles=" << m.circles();
  return os.str();
}

DiagramSource read_diagram_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  DiagramSource src;
  src.text = buf.str();
  src.origin = path;
  const bool braid = path.size() >= 4 && path.compare(path.size() - 4, 4, ".brd") == 0;
  src.format = braid ? DiagramFormat::Braid : DiagramFormat::Sliced;
  return src;
}

}  // namespace qtangle
