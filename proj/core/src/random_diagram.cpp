#include "qtangle/random.hpp"

#include <stdexcept>

namespace qtangle {

SignWord random_word(Rng& rng, std::size_t length) {
  std::vector<Sign> s(length);
  for (auto& x : s) x = rng.sign();
  return SignWord(std::move(s));
}

namespace {

Slice random_slice(Rng& rng, const SignWord& below, const RandomDiagramOptions& opt) {
  Slice slice;
  std::size_t width = below.size();
  std::size_t pos = 0;
  while (pos <= below.size()) {
    // A cup can open before any column, including after the last one.
    if (width + 2 <= opt.max_width && rng.chance(opt.cup_weight, 8)) {
      slice.push_back(Generator::cup(rng.sign()));
      width += 2;
      continue;
    }
    if (pos == below.size()) break;
    const Sign s = below[pos];
    const bool pair = pos + 1 < below.size();
    const std::size_t roll = rng.below(8);
    if (pair && roll < opt.crossing_weight) {
      const Sign t = below[pos + 1];
      slice.push_back(rng.coin() ? Generator::over(s, t) : Generator::under(s, t));
      pos += 2;
    } else if (pair && below[pos + 1] == flip(s) && roll < opt.crossing_weight + opt.cap_weight) {
      slice.push_back(Generator::cap(s));
      width -= 2;
      pos += 2;
    } else {
      slice.push_back(Generator::id(s));
      ++pos;
    }
  }
  return slice;
}

}  // namespace

SlicedDiagram random_diagram(Rng& rng, const SignWord& bottom, const RandomDiagramOptions& options) {
  std::vector<Slice> slices;
  SignWord level = bottom;
  for (std::size_t k = 0; k < options.slices; ++k) {
    Slice s = random_slice(rng, level, options);
    level = *slice_output(s, level);
    slices.push_back(std::move(s));
  }
  return SlicedDiagram(bottom, std::move(slices));
}

SlicedDiagram random_closed_diagram(Rng& rng, const RandomDiagramOptions& options) {
  RandomDiagramOptions grow = options;
  grow.cup_weight = std::max<std::size_t>(options.cup_weight, 2);
  SlicedDiagram d = random_diagram(rng, SignWord(), grow);
  std::vector<Slice> slices = d.slices();
  SignWord level = d.target();
  while (!level.empty()) {
    Slice s;
    bool capped = false;
    for (std::size_t pos = 0; pos < level.size();) {
      if (!capped && pos + 1 < level.size() && level[pos + 1] == flip(level[pos])) {
        s.push_back(Generator::cap(level[pos]));
        pos += 2;
        capped = true;
      } else {
        s.push_back(Generator::id(level[pos]));
        ++pos;
      }
    }
    level = *slice_output(s, level);
    slices.push_back(std::move(s));
  }
  return SlicedDiagram(SignWord(), std::move(slices));
}

std::vector<int> random_braid_word(Rng& rng, std::size_t n_strands, std::size_t length) {
  if (n_strands < 2 && length > 0) throw std::invalid_argument("random_braid_word: a nonempty word needs two strands");
  std::vector<int> w(length);
  const std::size_t gens = n_strands - 1;
  for (auto& x : w) {
    const int g = static_cast<int>(rng.below(gens)) + 1;
    x = rng.coin() ? g : -g;
  }
  return w;
}

std::vector<std::vector<int>> all_braid_words(std::size_t n_strands, std::size_t length) {
  std::vector<int> letters;
  const int m = static_cast<int>(n_strands) - 1;
  for (int i = -m; i <= m; ++i) {
    if (i != 0) letters.push_back(i);
  }
  std::vector<std::vector<int>> out{{}};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<std::vector<int>> next;
    next.reserve(out.size() * letters.size());
    for (const auto& w : out) {
      for (int l : letters) {
        auto x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace qtangle
