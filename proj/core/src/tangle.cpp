#include "qtangle/tangle.hpp"

#include <algorithm>

#include "qtangle/conventions.hpp"

namespace qtangle {

SignWord SignWord::from_string(std::string_view text) {
  std::vector<Sign> signs;
  signs.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      signs.push_back(Sign::Plus);
    } else if (c == '-') {
      signs.push_back(Sign::Minus);
    } else {
      throw DiagramError(std::string("invalid sign character '") + c + "'");
    }
  }
  return SignWord(std::move(signs));
}

SignWord SignWord::concat(const SignWord& other) const {
  std::vector<Sign> out = signs_;
  out.insert(out.end(), other.signs_.begin(), other.signs_.end());
  return SignWord(std::move(out));
}

SignWord SignWord::reversed() const {
  return SignWord(std::vector<Sign>(signs_.rbegin(), signs_.rend()));
}

SignWord SignWord::sub(std::size_t pos, std::size_t len) const {
  if (pos + len > signs_.size()) throw DiagramError("SignWord::sub out of range");
  return SignWord(std::vector<Sign>(signs_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    signs_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

std::string SignWord::to_string() const {
  std::string s;
  s.reserve(signs_.size());
  for (Sign x : signs_) s.push_back(sign_char(x));
  return s;
}

SignWord involute(const SignWord& w) {
  std::vector<Sign> out;
  out.reserve(w.size());
  for (Sign s : w.signs()) out.push_back(flip(s));
  return SignWord(std::move(out));
}

std::size_t Generator::in_arity() const noexcept {
  switch (kind) {
    case GeneratorKind::IdStrand: return 1;
    case GeneratorKind::Cup: return 0;
    case GeneratorKind::Cap: return 2;
    case GeneratorKind::CrossOver:
    case GeneratorKind::CrossUnder: return 2;
  }
  return 0;
}

std::size_t Generator::out_arity() const noexcept {
  switch (kind) {
    case GeneratorKind::IdStrand: return 1;
    case GeneratorKind::Cup: return 2;
    case GeneratorKind::Cap: return 0;
    case GeneratorKind::CrossOver:
    case GeneratorKind::CrossUnder: return 2;
  }
  return 0;
}

SignWord Generator::input() const {
  switch (kind) {
    case GeneratorKind::IdStrand: return SignWord({first});
    case GeneratorKind::Cup: return SignWord();
    case GeneratorKind::Cap: return SignWord({first, flip(first)});
    case GeneratorKind::CrossOver:
    case GeneratorKind::CrossUnder: return SignWord({first, second});
  }
  return SignWord();
}

SignWord Generator::output() const {
  switch (kind) {
    case GeneratorKind::IdStrand: return SignWord({first});
    case GeneratorKind::Cup: return SignWord({first, flip(first)});
    case GeneratorKind::Cap: return SignWord();
    case GeneratorKind::CrossOver:
    case GeneratorKind::CrossUnder: return SignWord({second, first});
  }
  return SignWord();
}

Generator Generator::mirrored() const {
  Generator g = *this;
  if (kind == GeneratorKind::CrossOver) g.kind = GeneratorKind::CrossUnder;
  else if (kind == GeneratorKind::CrossUnder) g.kind = GeneratorKind::CrossOver;
  return g;
}

std::string Generator::token() const {
  switch (kind) {
    case GeneratorKind::IdStrand: return std::string("id") + sign_char(first);
    case GeneratorKind::Cup: return std::string("cup") + sign_char(first);
    case GeneratorKind::Cap: return std::string("cap") + sign_char(first);
    case GeneratorKind::CrossOver: return std::string("x") + sign_char(first) + sign_char(second);
    case GeneratorKind::CrossUnder: return std::string("y") + sign_char(first) + sign_char(second);
  }
  return "?";
}

std::optional<SignWord> slice_output(const Slice& slice, const SignWord& below) {
  std::vector<Sign> out;
  std::size_t pos = 0;
  for (const auto& g : slice) {
    const SignWord in = g.input();
    if (pos + in.size() > below.size()) return std::nullopt;
    for (std::size_t k = 0; k < in.size(); ++k) {
      if (below[pos + k] != in[k]) return std::nullopt;
    }
    pos += in.size();
    const SignWord o = g.output();
    out.insert(out.end(), o.signs().begin(), o.signs().end());
  }
  if (pos != below.size()) return std::nullopt;
  return SignWord(std::move(out));
}

ValidationReport validate(const SlicedDiagram& d) {
  SignWord level = d.bottom();
  for (std::size_t s = 0; s < d.slices().size(); ++s) {
    const Slice& slice = d.slices()[s];
    std::vector<Sign> out;
    std::size_t pos = 0;
    for (std::size_t g = 0; g < slice.size(); ++g) {
      const Generator& gen = slice[g];
      const SignWord in = gen.input();
      auto fail = [&](std::string why) {
        ValidationReport r;
        r.ok = false;
        r.slice = s + 1;
        r.generator = g + 1;
        r.message = "slice " + std::to_string(s + 1) + ", generator " + std::to_string(g + 1) + " (" +
                    gen.token() + "): " + std::move(why);
        return r;
      };
      if (pos + in.size() > level.size()) {
        return fail("runs past the end of the word below (" + level.to_string() + ")");
      }
      for (std::size_t k = 0; k < in.size(); ++k) {
        if (level[pos + k] != in[k]) {
          if (gen.kind == GeneratorKind::Cap && level[pos] == level[pos + 1]) {
            return fail("Cap requires opposite signs, found " + level.sub(pos, 2).to_string());
          }
          return fail("expects input " + in.to_string() + " but the word below has " +
                      level.sub(pos, in.size()).to_string() + " at column " + std::to_string(pos + 1));
        }
      }
      pos += in.size();
      const SignWord o = gen.output();
      out.insert(out.end(), o.signs().begin(), o.signs().end());
    }
    if (pos != level.size()) {
      ValidationReport r;
      r.ok = false;
      r.slice = s + 1;
      r.generator = slice.size() + 1;
      r.message = "slice " + std::to_string(s + 1) + " consumes " + std::to_string(pos) +
                  " points but the word below (" + level.to_string() + ") has " + std::to_string(level.size());
      return r;
    }
    level = SignWord(std::move(out));
  }
  return {};
}

std::vector<SignWord> SlicedDiagram::levels() const {
  std::vector<SignWord> out;
  out.reserve(slices_.size() + 1);
  out.push_back(bottom_);
  for (std::size_t s = 0; s < slices_.size(); ++s) {
    auto next = slice_output(slices_[s], out.back());
    if (!next) {
      auto report = validate(*this);
      throw DiagramError("invalid diagram: " + report.message);
    }
    out.push_back(*std::move(next));
  }
  return out;
}

SignWord SlicedDiagram::target() const { return levels().back(); }

bool SlicedDiagram::is_closed() const { return bottom_.empty() && target().empty(); }

std::size_t SlicedDiagram::crossing_count() const noexcept {
  std::size_t n = 0;
  for (const auto& slice : slices_) {
    for (const auto& g : slice) n += g.is_crossing() ? 1 : 0;
  }
  return n;
}

namespace {

Slice identity_slice(const SignWord& w) {
  Slice s;
  s.reserve(w.size());
  for (Sign x : w.signs()) s.push_back(Generator::id(x));
  return s;
}

void append_ids(Slice& slice, const SignWord& w) {
  for (Sign x : w.signs()) slice.push_back(Generator::id(x));
}

}  // namespace

SlicedDiagram identity_diagram(const SignWord& w) { return SlicedDiagram(w, {identity_slice(w)}); }

SlicedDiagram bare_diagram(const SignWord& w) { return SlicedDiagram(w, {}); }

SlicedDiagram compose(const SlicedDiagram& t2, const SlicedDiagram& t1) {
  const SignWord mid = t1.target();
  if (!(mid == t2.bottom())) {
    throw DiagramError("compose: target " + mid.to_string() + " of the first tangle does not match source " +
                       t2.bottom().to_string() + " of the second");
  }
  std::vector<Slice> slices = t1.slices();
  slices.insert(slices.end(), t2.slices().begin(), t2.slices().end());
  return SlicedDiagram(t1.bottom(), std::move(slices));
}

SlicedDiagram tensor(const SlicedDiagram& t1, const SlicedDiagram& t2) {
  const auto l1 = t1.levels();
  const auto l2 = t2.levels();
  const std::size_t n = std::max(t1.slice_count(), t2.slice_count());
  std::vector<Slice> slices;
  slices.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Slice s = k < t1.slice_count() ? t1.slices()[k] : identity_slice(l1.back());
    if (k < t2.slice_count()) {
      s.insert(s.end(), t2.slices()[k].begin(), t2.slices()[k].end());
    } else {
      append_ids(s, l2.back());
    }
    slices.push_back(std::move(s));
  }
  return SlicedDiagram(t1.bottom().concat(t2.bottom()), std::move(slices));
}

SlicedDiagram reflect(const SlicedDiagram& d) {
  const auto lv = d.levels();
  std::vector<Slice> slices;
  slices.reserve(d.slice_count());
  for (std::size_t k = d.slice_count(); k-- > 0;) {
    Slice out;
    out.reserve(d.slices()[k].size());
    for (const auto& g : d.slices()[k]) {
      switch (g.kind) {
        case GeneratorKind::IdStrand: out.push_back(Generator::id(flip(g.first))); break;
        case GeneratorKind::Cup: out.push_back(Generator::cap(flip(g.first))); break;
        case GeneratorKind::Cap: out.push_back(Generator::cup(flip(g.first))); break;
        case GeneratorKind::CrossOver: out.push_back(Generator::under(flip(g.second), flip(g.first))); break;
        case GeneratorKind::CrossUnder: out.push_back(Generator::over(flip(g.second), flip(g.first))); break;
      }
    }
    slices.push_back(std::move(out));
  }
  return SlicedDiagram(involute(lv.back()), std::move(slices));
}

SlicedDiagram mirror(const SlicedDiagram& d) {
  std::vector<Slice> slices = d.slices();
  for (auto& s : slices) {
    for (auto& g : s) g = g.mirrored();
  }
  return SlicedDiagram(d.bottom(), std::move(slices));
}

int writhe(const SlicedDiagram& d) {
  int w = 0;
  for (const auto& slice : d.slices()) {
    for (const auto& g : slice) {
      if (!g.is_crossing()) continue;
      const int same = g.first == g.second ? 1 : -1;
      const int kind = g.kind == GeneratorKind::CrossOver ? 1 : -1;
      w += conventions::kOverSameDirectionSign * same * kind;
    }
  }
  return w;
}

SlicedDiagram braid_to_diagram(const std::vector<int>& word, std::size_t n_strands, BraidOrientation orientation) {
  const Sign s = orientation == BraidOrientation::AllUp ? Sign::Plus : Sign::Minus;
  std::vector<Slice> slices;
  slices.reserve(word.size());
  for (int letter : word) {
    const std::size_t i = static_cast<std::size_t>(letter < 0 ? -static_cast<long long>(letter) : letter);
    if (letter == 0 || i >= n_strands) {
      throw DiagramError("braid letter " + std::to_string(letter) + " out of range for " + std::to_string(n_strands) +
                         " strands");
    }
    Slice slice;
    slice.reserve(n_strands - 1);
    for (std::size_t c = 1; c < i; ++c) slice.push_back(Generator::id(s));
    slice.push_back(letter > 0 ? Generator::over(s, s) : Generator::under(s, s));
    for (std::size_t c = i + 2; c <= n_strands; ++c) slice.push_back(Generator::id(s));
    slices.push_back(std::move(slice));
  }
  return SlicedDiagram(SignWord::uniform(n_strands, s), std::move(slices));
}

SlicedDiagram closure(const SlicedDiagram& d, ClosureKind kind) {
  const auto lv = d.levels();
  const SignWord& src = lv.front();
  const SignWord& tgt = lv.back();
  std::vector<Slice> slices;

  if (kind == ClosureKind::Trace) {
    if (!(src == tgt)) {
      throw DiagramError("trace closure needs source == target, got " + src.to_string() + " -> " + tgt.to_string());
    }
    const std::size_t n = src.size();
    // Return strands on the right carry the involuted word in reverse.
    for (std::size_t k = 0; k < n; ++k) {
      Slice s = identity_slice(src.sub(0, k));
      s.push_back(Generator::cup(src[k]));
      append_ids(s, involute(src.sub(0, k)).reversed());
      slices.push_back(std::move(s));
    }
    const SignWord back = involute(src).reversed();
    for (const auto& slice : d.slices()) {
      Slice s = slice;
      append_ids(s, back);
      slices.push_back(std::move(s));
    }
    for (std::size_t k = n; k-- > 0;) {
      Slice s = identity_slice(src.sub(0, k));
      s.push_back(Generator::cap(src[k]));
      append_ids(s, involute(src.sub(0, k)).reversed());
      slices.push_back(std::move(s));
    }
    return SlicedDiagram(SignWord(), std::move(slices));
  }

  auto check_pairs = [](const SignWord& w, const char* where) {
    if (w.size() % 2 != 0) {
      throw DiagramError(std::string("plat closure needs an even ") + where + " word, got " + w.to_string());
    }
    for (std::size_t i = 0; i < w.size(); i += 2) {
      if (w[i] == w[i + 1]) {
        throw DiagramError(std::string("plat closure needs adjacent opposite pairs in the ") + where + " word, got " +
                           w.to_string());
      }
    }
  };
  check_pairs(src, "source");
  check_pairs(tgt, "target");
  if (!src.empty()) {
    Slice cups;
    for (std::size_t i = 0; i < src.size(); i += 2) cups.push_back(Generator::cup(src[i]));
    slices.push_back(std::move(cups));
  }
  slices.insert(slices.end(), d.slices().begin(), d.slices().end());
  if (!tgt.empty()) {
    Slice caps;
    for (std::size_t i = 0; i < tgt.size(); i += 2) caps.push_back(Generator::cap(tgt[i]));
    slices.push_back(std::move(caps));
  }
  return SlicedDiagram(SignWord(), std::move(slices));
}

}  // namespace qtangle
