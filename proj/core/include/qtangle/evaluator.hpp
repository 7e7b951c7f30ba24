#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qtangle/laurent.hpp"
#include "qtangle/ring_matrix.hpp"
#include "qtangle/tangle.hpp"

namespace qtangle {

/// The linear data of a tangle functor over Z[x, x^-1]: a strand space of
/// dimension N, crossing operators on N^2, cup and cap maps per sign, the
/// value of a closed loop and the factor picked up by a positive curl.
struct TheoryData {
  std::string variable;
  std::size_t dim = 0;
  RingMatrix r_over;     // N^2 x N^2
  RingMatrix r_under;    // N^2 x N^2
  RingMatrix cup_plus;   // N^2 x 1, () -> (+, -)
  RingMatrix cup_minus;  // N^2 x 1, () -> (-, +)
  RingMatrix cap_plus;   // 1 x N^2, (+, -) -> ()
  RingMatrix cap_minus;  // 1 x N^2, (-, +) -> ()
  LaurentPoly loop_value;
  LaurentPoly kink_factor;

  const RingMatrix& cup(Sign s) const { return s == Sign::Plus ? cup_plus : cup_minus; }
  const RingMatrix& cap(Sign s) const { return s == Sign::Plus ? cap_plus : cap_minus; }
  /// Matrix of a single generator (IdStrand gives the N x N identity).
  RingMatrix generator_matrix(const Generator& g) const;
};

/// The N = 2 Kauffman-bracket theory in the variable A.
///
/// cup = (0, -A, A^-1, 0)^T and cap = (0, A, -A^-1, 0) for both signs,
/// E = cup * cap, r_over = A*I + A^-1*E, r_under = A^-1*I + A*E,
/// loop value -A^2 - A^-2 and kink factor -A^3.
TheoryData default_theory();

struct TheoryCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // first failing equation and entry, empty on success
};

struct TheoryReport {
  std::vector<TheoryCheck> checks;  // r2-inverse, yang-baxter, zigzag, loop
  bool all_pass() const;
  std::size_t passed() const;
};

/// Verifies, exactly: r_over * r_under = r_under * r_over = I; the
/// Yang-Baxter equation for r_over and r_under on N^3; both zigzag
/// identities for each sign; cap(s) * cup(s) = loop_value for each sign.
TheoryReport check_theory(const TheoryData& th);

/// Functorial evaluation: a matrix of size N^|target| x N^|source|. Each
/// slice acts as the Kronecker product of its generators' matrices and
/// slices compose bottom-up. Generators are applied one at a time to the
/// running matrix instead of materialising each slice's Kronecker product.
/// Throws DiagramError on an invalid diagram.
RingMatrix eval(const SlicedDiagram& d, const TheoryData& th);

/// The Kronecker product of one slice's generator matrices.
RingMatrix slice_matrix(const Slice& slice, const TheoryData& th);

/// Reference evaluation: forms every slice_matrix and multiplies them with
/// mat_mul. Same result as eval(), much slower; kept as a second route.
RingMatrix eval_by_slice_products(const SlicedDiagram& d, const TheoryData& th);

/// Scalar value of a closed diagram. Throws DiagramError if not closed.
LaurentPoly eval_scalar(const SlicedDiagram& d, const TheoryData& th);

/// Kauffman bracket of a link diagram by summing over all 2^c smoothings of
/// its crossings. Each smoothed slice becomes a planar 1-cobordism on
/// alternating sign words; composing them counts the loops. Independent of
/// eval(): no matrices are involved. Throws DiagramError if not closed.
LaurentPoly bracket_statesum(const SlicedDiagram& d);

struct LinkInvariantReport {
  LaurentPoly bracket;
  int writhe = 0;
  LaurentPoly normalized;    // in variable_out
  std::string variable_out;  // requested variable, or the theory's when the
                             // exponents did not divide evenly
  bool substituted = false;

  std::string to_json() const;
};

/// Writhe-normalized, unknot-normalized link invariant:
/// normalized = kink_factor^(-writhe) * bracket / loop_value, computed by
/// exact division. Reported in `report_var` with A^e -> report_var^(e /
/// exponent_divisor) when every exponent divides evenly; otherwise the
/// theory variable is kept and `substituted` is false. A divisor of -4
/// reports the Jones polynomial in t = A^-4.
/// Throws DiagramError if not closed and RingError on inexact division.
LinkInvariantReport link_invariant(const SlicedDiagram& d, const TheoryData& th, const std::string& report_var = "q",
                                   int exponent_divisor = -4);

}  // namespace qtangle
