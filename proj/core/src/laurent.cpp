#include "qtangle/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <sstream>

namespace qtangle {

namespace {

using Term = LaurentPoly::Term;

std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.second == 0; }),
            out.end());
  return out;
}

int checked_exponent(long long e) {
  if (e > std::numeric_limits<int>::max() || e < std::numeric_limits<int>::min()) {
    throw RingError("Laurent exponent out of range");
  }
  return static_cast<int>(e);
}

bool is_symbol_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_symbol_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class PolyScanner {
 public:
  explicit PolyScanner(std::string_view text) : text_(text) {}

  // Returns the terms and the variable symbol seen (empty if none).
  std::pair<std::vector<Term>, std::string> run() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_ws();
    }
    terms.push_back(term(negative));
    skip_ws();
    while (!at_end()) {
      char c = get();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      skip_ws();
      terms.push_back(term(c == '-'));
      skip_ws();
    }
    return {std::move(terms), symbol_};
  }

 private:
  Term term(bool negative) {
    Integer coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer();
      have_coeff = true;
      skip_ws();
      if (at_end() || peek() != '*') {
        return {0, negative ? Integer(-coeff) : coeff};
      }
      get();
      skip_ws();
    }
    if (at_end() || !is_symbol_start(peek())) {
      fail(have_coeff ? "expected variable after '*'" : "expected coefficient or variable");
    }
    std::string sym = symbol();
    if (symbol_.empty()) {
      symbol_ = sym;
    } else if (sym != symbol_) {
      fail("mixed variables '" + symbol_ + "' and '" + sym + "'");
    }
    long long e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      get();
      skip_ws();
      bool neg_exp = false;
      if (!at_end() && (peek() == '-' || peek() == '+')) neg_exp = get() == '-';
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      Integer mag = integer();
      if (mag > std::numeric_limits<int>::max()) fail("exponent too large");
      e = mag.convert_to<long long>();
      if (neg_exp) e = -e;
    }
    return {checked_exponent(e), negative ? Integer(-coeff) : coeff};
  }

  Integer integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string symbol() {
    std::size_t start = pos_;
    while (!at_end() && is_symbol_char(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw RingError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::string symbol_;
};

}  // namespace

LaurentPoly::LaurentPoly(std::string variable) : var_(std::move(variable)) {}

LaurentPoly LaurentPoly::constant(const Integer& c, std::string variable) {
  return monomial(c, 0, std::move(variable));
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent, std::string variable) {
  std::vector<Term> t;
  if (c != 0) t.emplace_back(exponent, c);
  return LaurentPoly(std::move(variable), std::move(t));
}

LaurentPoly LaurentPoly::from_terms(std::string variable, std::vector<Term> terms) {
  return LaurentPoly(std::move(variable), canonicalize(std::move(terms)));
}

LaurentPoly LaurentPoly::parse(std::string_view text, std::string_view variable) {
  auto [terms, sym] = PolyScanner(text).run();
  if (!sym.empty() && sym != variable) {
    throw RingError("polynomial variable '" + sym + "' does not match expected '" +
                    std::string(variable) + "'");
  }
  return from_terms(std::string(variable), std::move(terms));
}

LaurentPoly LaurentPoly::parse_any(std::string_view text, std::string_view fallback_variable) {
  auto [terms, sym] = PolyScanner(text).run();
  return from_terms(sym.empty() ? std::string(fallback_variable) : sym, std::move(terms));
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
}

bool LaurentPoly::is_one() const noexcept {
  return terms_.size() == 1 && terms_.front().first == 0 && terms_.front().second == 1;
}

bool LaurentPoly::is_unit() const noexcept {
  return terms_.size() == 1 && (terms_.front().second == 1 || terms_.front().second == -1);
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

std::optional<int> LaurentPoly::min_exponent() const noexcept {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().first;
}

std::optional<int> LaurentPoly::max_exponent() const noexcept {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().first;
}

void LaurentPoly::require_same_variable(const LaurentPoly& other, const char* op) const {
  if (var_ != other.var_) {
    throw RingError(std::string("variable mismatch in ") + op + ": '" + var_ + "' vs '" +
                    other.var_ + "'");
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_variable(other, "addition");
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Integer c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_variable(other, "subtraction");
  return *this += -other;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::scaled(const Integer& c, int shift) const {
  if (c == 0) return LaurentPoly(var_);
  LaurentPoly out = *this;
  for (auto& t : out.terms_) {
    t.first = checked_exponent(static_cast<long long>(t.first) + shift);
    t.second *= c;
  }
  return out;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) {
    if (!is_unit()) throw RingError("negative power of a non-unit Laurent polynomial");
    const auto& [e, c] = terms_.front();
    Integer coeff = (c == -1 && (n % 2 != 0)) ? Integer(-1) : Integer(1);
    return monomial(coeff, checked_exponent(static_cast<long long>(e) * n), var_);
  }
  LaurentPoly result = constant(1, var_);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::renamed(std::string variable) const {
  return LaurentPoly(std::move(variable), terms_);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var_ << '^' << e;
  }
  return os.str();
}

std::size_t LaurentPoly::hash() const noexcept {
  std::size_t h = std::hash<std::string>{}(var_);
  for (const auto& [e, c] : terms_) {
    h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= boost::multiprecision::hash_value(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
  a += b;
  return a;
}

LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
  a -= b;
  return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.variable() != b.variable()) {
    throw RingError("variable mismatch in multiplication: '" + a.variable() + "' vs '" +
                    b.variable() + "'");
  }
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.variable());
  auto ta = a.terms();
  auto tb = b.terms();
  if (ta.size() == 1) return b.scaled(ta.front().second, ta.front().first);
  if (tb.size() == 1) return a.scaled(tb.front().second, tb.front().first);

  const long long lo = static_cast<long long>(ta.front().first) + tb.front().first;
  const long long hi = static_cast<long long>(ta.back().first) + tb.back().first;
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    }
  }
  std::vector<LaurentPoly::Term> out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) out.emplace_back(checked_exponent(lo + static_cast<long long>(i)), std::move(dense[i]));
  }
  // already sorted and zero-free
  return LaurentPoly::from_terms(a.variable(), std::move(out));
}

LaurentPoly lp_subst_monomial(const LaurentPoly& p, std::string new_var, int exponent_factor,
                              bool negate_var) {
  if (exponent_factor == 0) throw RingError("lp_subst_monomial: exponent_factor must be nonzero");
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) {
    Integer coeff = (negate_var && (e % 2 != 0)) ? Integer(-c) : c;
    out.emplace_back(checked_exponent(static_cast<long long>(e) * exponent_factor), std::move(coeff));
  }
  return LaurentPoly::from_terms(std::move(new_var), std::move(out));
}

LaurentPoly invert_variable(const LaurentPoly& p) {
  return lp_subst_monomial(p, p.variable(), -1, false);
}

std::optional<LaurentPoly> divide_exponents(const LaurentPoly& p, int divisor) {
  if (divisor == 0) throw RingError("divide_exponents: divisor must be nonzero");
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) {
    if (e % divisor != 0) return std::nullopt;
    out.emplace_back(e / divisor, c);
  }
  return LaurentPoly::from_terms(p.variable(), std::move(out));
}

std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.variable() != b.variable()) {
    throw RingError("variable mismatch in division: '" + a.variable() + "' vs '" + b.variable() +
                    "'");
  }
  if (b.is_zero()) throw RingError("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly(a.variable());

  // Shift both to ordinary polynomials with nonzero constant term; the
  // quotient is then an ordinary polynomial times a monomial.
  const int a_lo = *a.min_exponent();
  const int b_lo = *b.min_exponent();
  const int a_deg = *a.max_exponent() - a_lo;
  const int b_deg = *b.max_exponent() - b_lo;
  if (a_deg < b_deg) return std::nullopt;

  std::vector<Integer> rem(static_cast<std::size_t>(a_deg) + 1);
  for (const auto& [e, c] : a.terms()) rem[static_cast<std::size_t>(e - a_lo)] = c;
  std::vector<Integer> den(static_cast<std::size_t>(b_deg) + 1);
  for (const auto& [e, c] : b.terms()) den[static_cast<std::size_t>(e - b_lo)] = c;
  const Integer& lead = den.back();

  std::vector<LaurentPoly::Term> quotient;
  for (int k = a_deg - b_deg; k >= 0; --k) {
    Integer& top = rem[static_cast<std::size_t>(k + b_deg)];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Integer q = top / lead;
    for (int i = 0; i <= b_deg; ++i) {
      rem[static_cast<std::size_t>(k + i)] -= q * den[static_cast<std::size_t>(i)];
    }
    quotient.emplace_back(k + a_lo - b_lo, std::move(q));
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return LaurentPoly::from_terms(a.variable(), std::move(quotient));
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = try_exact_divide(a, b);
  if (!q) {
    throw RingError("inexact division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  }
  return *std::move(q);
}

}  // namespace qtangle
