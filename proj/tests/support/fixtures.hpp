#pragma once

// Small shared helpers for the test binaries.

#include <string>
#include <vector>

#include "qtangle/evaluator.hpp"
#include "qtangle/laurent.hpp"
#include "qtangle/random.hpp"
#include "qtangle/tangle.hpp"

namespace qtangle::testing {

inline LaurentPoly A(long long c, int e) { return LaurentPoly::monomial(c, e, "A"); }

inline LaurentPoly poly(const std::string& text, const std::string& var = "A") {
  return LaurentPoly::parse(text, var);
}

inline LaurentPoly random_poly(Rng& rng, const std::string& var = "A", int spread = 6, int max_terms = 5) {
  std::vector<LaurentPoly::Term> terms;
  const std::size_t n = rng.below(static_cast<std::size_t>(max_terms) + 1);
  for (std::size_t k = 0; k < n; ++k) {
    const int e = static_cast<int>(rng.below(2 * static_cast<std::size_t>(spread) + 1)) - spread;
    const long long c = static_cast<long long>(rng.below(19)) - 9;
    terms.emplace_back(e, c);
  }
  return LaurentPoly::from_terms(var, std::move(terms));
}

// A word of length 0..4, short enough for 2^n-sized matrices.
inline SignWord random_word_for_tests(Rng& rng, std::size_t max_len = 4) {
  return random_word(rng, rng.below(max_len + 1));
}

inline SlicedDiagram trace_closed_braid(const std::vector<int>& word, std::size_t n) {
  return closure(braid_to_diagram(word, n), ClosureKind::Trace);
}

inline SlicedDiagram unknot() { return trace_closed_braid({}, 1); }
inline SlicedDiagram trefoil() { return trace_closed_braid({1, 1, 1}, 2); }
inline SlicedDiagram mirror_trefoil() { return trace_closed_braid({-1, -1, -1}, 2); }

}  // namespace qtangle::testing
