#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qtangle/laurent.hpp"

namespace qtangle {

/// Dense row-major matrix over Z[x, x^-1]. Every entry shares the matrix
/// variable. Kronecker products follow conventions::kron_index.
class RingMatrix {
 public:
  /// rows x cols zero matrix.
  RingMatrix(std::size_t rows, std::size_t cols, std::string variable);

  static RingMatrix identity(std::size_t n, const std::string& variable);
  static RingMatrix scalar(const LaurentPoly& value);
  /// Throws RingError if the entry count or any entry variable is wrong.
  static RingMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<LaurentPoly> entries);
  /// Integer entries, row-major, as constants in `variable`.
  static RingMatrix from_integers(std::size_t rows, std::size_t cols, const std::vector<long long>& values,
                                  const std::string& variable);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::string& variable() const noexcept { return var_; }
  const std::vector<LaurentPoly>& entries() const noexcept { return entries_; }

  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const LaurentPoly& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, LaurentPoly value);

  bool is_identity() const;
  bool is_zero() const;

  RingMatrix scaled(const LaurentPoly& factor) const;
  RingMatrix transposed() const;

  /// Multi-line text: one row per line, entries separated by ", " in brackets.
  std::string to_string() const;

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.var_ == b.var_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::string var_;
  std::vector<LaurentPoly> entries_;
};

/// a * b. Throws RingError on a.cols != b.rows or variable mismatch.
RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b);
/// Kronecker product a (x) b, left-factor-major.
RingMatrix mat_tensor(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b);

inline RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) { return mat_mul(a, b); }
inline RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) { return mat_add(a, b); }

/// Location of the first differing entry in row-major order. Shapes must match.
struct EntryDiff {
  bool equal = true;
  std::size_t row = 0;
  std::size_t col = 0;
};
EntryDiff first_difference(const RingMatrix& a, const RingMatrix& b);

}  // namespace qtangle
