#include "qtangle/cobord1.hpp"
#include "qtangle/conventions.hpp"
#include "qtangle/evaluator.hpp"

namespace qtangle {

namespace {

// Every planar matching pairs points an odd distance apart around the
// boundary, so labelling each level + - + - ... makes every smoothed slice
// an orientation-compatible 1-cobordism.
SignWord alternating(std::size_t n) {
  std::vector<Sign> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i % 2 == 0 ? Sign::Plus : Sign::Minus;
  return SignWord(std::move(s));
}

struct CrossingRef {
  std::size_t slice;
  std::size_t generator;
};

}  // namespace

LaurentPoly bracket_statesum(const SlicedDiagram& d) {
  const auto lv = d.levels();
  if (!lv.front().empty() || !lv.back().empty()) {
    throw DiagramError("bracket_statesum expects a link diagram (empty source and target)");
  }
  const std::string a = conventions::kBracketVariable;

  std::vector<CrossingRef> crossings;
  for (std::size_t k = 0; k < d.slice_count(); ++k) {
    for (std::size_t g = 0; g < d.slices()[k].size(); ++g) {
      if (d.slices()[k][g].is_crossing()) crossings.push_back({k, g});
    }
  }
  if (crossings.size() >= 8 * sizeof(unsigned long long) - 1) {
    throw DiagramError("bracket_statesum: too many crossings to enumerate");
  }

  std::vector<SignWord> alt;
  alt.reserve(lv.size());
  for (const auto& w : lv) alt.push_back(alternating(w.size()));

  const LaurentPoly delta = LaurentPoly::monomial(-1, 2, a) + LaurentPoly::monomial(-1, -2, a);
  std::vector<LaurentPoly> delta_pow{LaurentPoly::constant(1, a)};

  // Smoothing bit per crossing: 0 vertical, 1 horizontal.
  std::vector<std::vector<bool>> horizontal(d.slice_count());
  for (std::size_t k = 0; k < d.slice_count(); ++k) horizontal[k].assign(d.slices()[k].size(), false);

  LaurentPoly total(a);
  const unsigned long long states = 1ULL << crossings.size();
  for (unsigned long long state = 0; state < states; ++state) {
    int exponent = 0;
    for (std::size_t i = 0; i < crossings.size(); ++i) {
      const bool h = ((state >> i) & 1ULL) != 0;
      const auto& ref = crossings[i];
      horizontal[ref.slice][ref.generator] = h;
      const auto w = d.slices()[ref.slice][ref.generator].kind == GeneratorKind::CrossOver
                         ? conventions::kOverSmoothing
                         : conventions::kUnderSmoothing;
      exponent += h ? w.horizontal : w.vertical;
    }

    Matching1 acc = Matching1::empty();
    for (std::size_t k = 0; k < d.slice_count(); ++k) {
      std::vector<std::pair<Endpoint, Endpoint>> pairs;
      std::size_t in = 0;
      std::size_t out = 0;
      const Slice& slice = d.slices()[k];
      for (std::size_t g = 0; g < slice.size(); ++g) {
        switch (slice[g].kind) {
          case GeneratorKind::IdStrand:
            pairs.emplace_back(Endpoint::bottom(in), Endpoint::top(out));
            break;
          case GeneratorKind::Cup:
            pairs.emplace_back(Endpoint::top(out), Endpoint::top(out + 1));
            break;
          case GeneratorKind::Cap:
            pairs.emplace_back(Endpoint::bottom(in), Endpoint::bottom(in + 1));
            break;
          case GeneratorKind::CrossOver:
          case GeneratorKind::CrossUnder:
            if (horizontal[k][g]) {
              pairs.emplace_back(Endpoint::bottom(in), Endpoint::bottom(in + 1));
              pairs.emplace_back(Endpoint::top(out), Endpoint::top(out + 1));
            } else {
              pairs.emplace_back(Endpoint::bottom(in), Endpoint::top(out));
              pairs.emplace_back(Endpoint::bottom(in + 1), Endpoint::top(out + 1));
            }
            break;
        }
        in += slice[g].in_arity();
        out += slice[g].out_arity();
      }
      acc = compose1(Matching1::create(alt[k], alt[k + 1], pairs), acc);
    }

    const std::size_t loops = acc.circles();
    while (delta_pow.size() <= loops) delta_pow.push_back(delta_pow.back() * delta);
    total += delta_pow[loops].scaled(1, exponent);
  }
  return total;
}

}  // namespace qtangle
