#include "qtangle/ring_matrix.hpp"

#include <sstream>

#include "qtangle/conventions.hpp"

namespace qtangle {

RingMatrix::RingMatrix(std::size_t rows, std::size_t cols, std::string variable)
    : rows_(rows), cols_(cols), var_(std::move(variable)), entries_(rows * cols, LaurentPoly(var_)) {}

RingMatrix RingMatrix::identity(std::size_t n, const std::string& variable) {
  RingMatrix m(n, n, variable);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = LaurentPoly::constant(1, variable);
  return m;
}

RingMatrix RingMatrix::scalar(const LaurentPoly& value) {
  RingMatrix m(1, 1, value.variable());
  m.entries_[0] = value;
  return m;
}

RingMatrix RingMatrix::from_entries(std::size_t rows, std::size_t cols, std::vector<LaurentPoly> entries) {
  if (entries.size() != rows * cols) {
    throw RingError("RingMatrix: expected " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(entries.size()));
  }
  if (entries.empty()) throw RingError("RingMatrix: cannot infer variable from an empty entry list");
  RingMatrix m(rows, cols, entries.front().variable());
  for (const auto& e : entries) {
    if (e.variable() != m.var_) throw RingError("RingMatrix: entries use different variables");
  }
  m.entries_ = std::move(entries);
  return m;
}

RingMatrix RingMatrix::from_integers(std::size_t rows, std::size_t cols, const std::vector<long long>& values,
                                     const std::string& variable) {
  if (values.size() != rows * cols) throw RingError("RingMatrix: wrong number of integer entries");
  RingMatrix m(rows, cols, variable);
  for (std::size_t i = 0; i < values.size(); ++i) m.entries_[i] = LaurentPoly::constant(values[i], variable);
  return m;
}

const LaurentPoly& RingMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("RingMatrix::at");
  return entries_[r * cols_ + c];
}

void RingMatrix::set(std::size_t r, std::size_t c, LaurentPoly value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("RingMatrix::set");
  if (value.variable() != var_) throw RingError("RingMatrix::set: variable mismatch");
  entries_[r * cols_ + c] = std::move(value);
}

bool RingMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& e = entries_[r * cols_ + c];
      if (r == c ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

bool RingMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

RingMatrix RingMatrix::scaled(const LaurentPoly& factor) const {
  if (factor.variable() != var_) throw RingError("RingMatrix::scaled: variable mismatch");
  RingMatrix out(rows_, cols_, var_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].is_zero()) out.entries_[i] = entries_[i] * factor;
  }
  return out;
}

RingMatrix RingMatrix::transposed() const {
  RingMatrix out(cols_, rows_, var_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.entries_[c * rows_ + r] = entries_[r * cols_ + c];
  }
  return out;
}

std::string RingMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << entries_[r * cols_ + c].to_string();
    }
    os << "]\n";
  }
  return os.str();
}

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) {
  if (a.cols() != b.rows()) {
    throw RingError("mat_mul: dimension mismatch (" + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    ") * (" + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
  }
  if (a.variable() != b.variable()) throw RingError("mat_mul: variable mismatch");
  std::vector<LaurentPoly> out(a.rows() * b.cols(), LaurentPoly(a.variable()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const auto& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out[i * b.cols() + j] += aik * bkj;
      }
    }
  }
  RingMatrix m(a.rows(), b.cols(), a.variable());
  return out.empty() ? m : RingMatrix::from_entries(a.rows(), b.cols(), std::move(out));
}

RingMatrix mat_tensor(const RingMatrix& a, const RingMatrix& b) {
  if (a.variable() != b.variable()) throw RingError("mat_tensor: variable mismatch");
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  std::vector<LaurentPoly> out(rows * cols, LaurentPoly(a.variable()));
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const auto& x = a(i1, j1);
      if (x.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          const auto& y = b(i2, j2);
          if (y.is_zero()) continue;
          const std::size_t r = conventions::kron_index(i1, i2, b.rows());
          const std::size_t c = conventions::kron_index(j1, j2, b.cols());
          out[r * cols + c] = x * y;
        }
      }
    }
  }
  if (out.empty()) return RingMatrix(rows, cols, a.variable());
  return RingMatrix::from_entries(rows, cols, std::move(out));
}

RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw RingError("mat_add: shape mismatch");
  if (a.variable() != b.variable()) throw RingError("mat_add: variable mismatch");
  std::vector<LaurentPoly> out = a.entries();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.entries()[i];
  if (out.empty()) return RingMatrix(a.rows(), a.cols(), a.variable());
  return RingMatrix::from_entries(a.rows(), a.cols(), std::move(out));
}

EntryDiff first_difference(const RingMatrix& a, const RingMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw RingError("first_difference: shape mismatch");
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!(a(r, c) == b(r, c))) return {false, r, c};
    }
  }
  return {};
}

}  // namespace qtangle
