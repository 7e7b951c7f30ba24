#pragma once

#include <cstddef>
#include <vector>

#include "qtangle/laurent.hpp"

namespace qtangle::testing {

// Jones polynomial of the closure of a braid word, in s = t^(1/2), computed
// by the skein relation t^-1 V(L+) - t V(L-) = (s - 1/s) V(L0) and
// descending-diagram unlinking. Shares nothing with the matrix evaluator or
// the bracket state sum: no smoothings, no R-matrices, no writhe
// normalization. Letter +i is a positive crossing.
LaurentPoly skein_jones(const std::vector<int>& word, std::size_t n_strands);

// Number of components of the closure.
std::size_t closure_components(const std::vector<int>& word, std::size_t n_strands);

}  // namespace qtangle::testing
