#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtangle {

using Integer = boost::multiprecision::cpp_int;

/// Raised on variable-name mismatches, inexact divisions and malformed
/// polynomial text.
class RingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact Laurent polynomial in one named variable with arbitrary-precision
/// integer coefficients.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients, so
/// structural equality is polynomial equality. Binary operations require
/// both operands to carry the same variable name and throw RingError
/// otherwise; a constant in `A` is not equal to the same constant in `q`.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;  // (exponent, coefficient)

  /// The zero polynomial in `variable`.
  explicit LaurentPoly(std::string variable);

  static LaurentPoly constant(const Integer& c, std::string variable);
  static LaurentPoly monomial(const Integer& c, int exponent, std::string variable);
  /// Sorts, merges duplicate exponents and drops zeros.
  static LaurentPoly from_terms(std::string variable, std::vector<Term> terms);

  /// Parses the textual form produced by to_string(). A bare constant takes
  /// `variable`; any variable symbol in the text must equal `variable`.
  static LaurentPoly parse(std::string_view text, std::string_view variable);
  /// Like parse(), but the variable is read from the text. Constant-only text
  /// falls back to `fallback_variable`.
  static LaurentPoly parse_any(std::string_view text, std::string_view fallback_variable);

  const std::string& variable() const noexcept { return var_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  /// True for ±x^k, the units of Z[x, x^-1].
  bool is_unit() const noexcept;

  Integer coefficient(int exponent) const;
  std::optional<int> min_exponent() const noexcept;
  std::optional<int> max_exponent() const noexcept;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  /// Multiplies every term by c * x^shift.
  LaurentPoly scaled(const Integer& c, int shift) const;

  /// Non-negative powers for any polynomial; negative powers only for units.
  LaurentPoly pow(int n) const;

  /// The same coefficients under a different variable name.
  LaurentPoly renamed(std::string variable) const;

  /// Canonical text: ascending exponents, `c*A^e`, coefficient ±1 elided,
  /// exponent 0 printed as the bare coefficient, zero printed as `0`.
  std::string to_string() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

 private:
  LaurentPoly(std::string variable, std::vector<Term> canonical_terms)
      : var_(std::move(variable)), terms_(std::move(canonical_terms)) {}

  void require_same_variable(const LaurentPoly& other, const char* op) const;

  std::string var_;
  std::vector<Term> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

inline LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

/// Substitutes x -> (±1) * y^f termwise: c*x^e becomes c*(±1)^e*y^(e*f), with
/// the sign applied when `negate_var` is set. A ring homomorphism.
LaurentPoly lp_subst_monomial(const LaurentPoly& p, std::string new_var, int exponent_factor,
                              bool negate_var = false);

/// The image of p under x -> x^-1.
LaurentPoly invert_variable(const LaurentPoly& p);

/// Divides every exponent by `divisor` (which may be negative, flipping the
/// exponents). Returns nullopt if some exponent is not a multiple of it.
std::optional<LaurentPoly> divide_exponents(const LaurentPoly& p, int divisor);

/// Exact quotient a / b in Z[x, x^-1]. Throws RingError when b is zero or the
/// division leaves a remainder (including non-integral coefficients).
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient if exact, nullopt otherwise.
std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qtangle

template <>
struct std::hash<qtangle::LaurentPoly> {
  std::size_t operator()(const qtangle::LaurentPoly& p) const noexcept { return p.hash(); }
};
