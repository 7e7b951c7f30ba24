#include "qtangle/cobord1.hpp"

#include "qtangle/conventions.hpp"

namespace qtangle {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

std::string describe(Endpoint p) {
  return (p.side == Endpoint::Side::Bottom ? "b" : "t") + std::to_string(p.index + 1);
}

}  // namespace

Matching1 Matching1::create(SignWord source, SignWord target, const std::vector<std::pair<Endpoint, Endpoint>>& pairs,
                            std::size_t circles) {
  const std::size_t m = source.size();
  const std::size_t total = m + target.size();
  std::vector<std::size_t> partner(total, kUnset);
  auto sign_of = [&](Endpoint p) {
    const SignWord& w = p.side == Endpoint::Side::Bottom ? source : target;
    if (p.index >= w.size()) throw CobordError("1-cobordism point " + describe(p) + " out of range");
    return w[p.index];
  };
  auto flat = [&](Endpoint p) { return p.side == Endpoint::Side::Bottom ? p.index : m + p.index; };
  for (const auto& [a, b] : pairs) {
    const Sign sa = sign_of(a);
    const Sign sb = sign_of(b);
    const std::size_t fa = flat(a);
    const std::size_t fb = flat(b);
    if (fa == fb) throw CobordError("1-cobordism pairs " + describe(a) + " with itself");
    if (partner[fa] != kUnset || partner[fb] != kUnset) {
      throw CobordError("1-cobordism point used twice in pair (" + describe(a) + "," + describe(b) + ")");
    }
    const bool same_side = a.side == b.side;
    if (same_side ? sa == sb : sa != sb) {
      throw CobordError("orientation conflict in pair (" + describe(a) + "," + describe(b) + "): " +
                        (same_side ? "same-side points need opposite signs" : "through strands need equal signs"));
    }
    partner[fa] = fb;
    partner[fb] = fa;
  }
  for (std::size_t k = 0; k < total; ++k) {
    if (partner[k] == kUnset) {
      const Endpoint p = k < m ? Endpoint::bottom(k) : Endpoint::top(k - m);
      throw CobordError("1-cobordism point " + describe(p) + " is unmatched");
    }
  }
  return Matching1(std::move(source), std::move(target), std::move(partner), circles);
}

Matching1 Matching1::identity(const SignWord& w) {
  std::vector<std::pair<Endpoint, Endpoint>> pairs;
  for (std::size_t i = 0; i < w.size(); ++i) pairs.emplace_back(Endpoint::bottom(i), Endpoint::top(i));
  return create(w, w, pairs);
}

Matching1 Matching1::cup(Sign s) {
  return create(SignWord(), SignWord({s, flip(s)}), {{Endpoint::top(0), Endpoint::top(1)}});
}

Matching1 Matching1::cap(Sign s) {
  return create(SignWord({s, flip(s)}), SignWord(), {{Endpoint::bottom(0), Endpoint::bottom(1)}});
}

Matching1 Matching1::circle() { return Matching1(SignWord(), SignWord(), {}, 1); }

Matching1 Matching1::empty() { return Matching1(SignWord(), SignWord(), {}, 0); }

Endpoint Matching1::partner(Endpoint p) const {
  const std::size_t k = flat(p);
  if (k >= partner_.size()) throw CobordError("1-cobordism point " + describe(p) + " out of range");
  return unflat(partner_[k]);
}

std::vector<std::pair<Endpoint, Endpoint>> Matching1::pairs() const {
  std::vector<std::pair<Endpoint, Endpoint>> out;
  for (std::size_t k = 0; k < partner_.size(); ++k) {
    if (k < partner_[k]) out.emplace_back(unflat(k), unflat(partner_[k]));
  }
  return out;
}

Matching1 compose1(const Matching1& m2, const Matching1& m1) {
  if (!(m1.target_ == m2.source_)) {
    throw CobordError("compose1: target " + m1.target_.to_string() + " does not match source " +
                      m2.source_.to_string());
  }
  const std::size_t a = m1.source_.size();  // outer bottom
  const std::size_t b = m1.target_.size();  // glued interface
  const std::size_t c = m2.target_.size();  // outer top
  std::vector<std::size_t> partner(a + c, kUnset);
  std::vector<bool> seen(b, false);

  // Walks from an interface point into m2 (up) or m1 (down) until the chain
  // leaves through an outer point; returns that point in result numbering.
  auto walk = [&](std::size_t mid, bool up) -> std::size_t {
    while (true) {
      seen[mid] = true;
      if (up) {
        const std::size_t q = m2.partner_[mid];  // m2 numbering: bottom [0,b), top [b, b+c)
        if (q >= b) return a + (q - b);
        mid = q;
        up = false;
      } else {
        const std::size_t q = m1.partner_[a + mid];  // m1 numbering: bottom [0,a), top [a, a+b)
        if (q < a) return q;
        mid = q - a;
        up = true;
      }
      seen[mid] = true;
    }
  };

  for (std::size_t i = 0; i < a; ++i) {
    if (partner[i] != kUnset) continue;
    const std::size_t q = m1.partner_[i];
    const std::size_t end = q < a ? q : walk(q - a, true);
    partner[i] = end;
    partner[end] = i;
  }
  for (std::size_t j = 0; j < c; ++j) {
    if (partner[a + j] != kUnset) continue;
    const std::size_t q = m2.partner_[b + j];
    const std::size_t end = q >= b ? a + (q - b) : walk(q, false);
    partner[a + j] = end;
    partner[end] = a + j;
  }

  std::size_t circles = m1.circles_ + m2.circles_;
  for (std::size_t k = 0; k < b; ++k) {
    if (seen[k]) continue;
    // Every remaining interface chain is closed.
    std::size_t mid = k;
    do {
      seen[mid] = true;
      const std::size_t down = m2.partner_[mid];
      seen[down] = true;
      mid = m1.partner_[a + down] - a;
    } while (mid != k);
    ++circles;
  }
  return Matching1(m1.source_, m2.target_, std::move(partner), circles);
}

Matching1 disjoint_union1(const Matching1& m1, const Matching1& m2) {
  const std::size_t a1 = m1.source_.size();
  const std::size_t c1 = m1.target_.size();
  const std::size_t a2 = m2.source_.size();
  const std::size_t c2 = m2.target_.size();
  const std::size_t a = a1 + a2;
  // Map each factor's flat index into the union's flat numbering.
  auto map1 = [&](std::size_t k) { return k < a1 ? k : a + (k - a1); };
  auto map2 = [&](std::size_t k) { return k < a2 ? a1 + k : a + c1 + (k - a2); };
  std::vector<std::size_t> partner(a + c1 + c2, kUnset);
  for (std::size_t k = 0; k < m1.partner_.size(); ++k) partner[map1(k)] = map1(m1.partner_[k]);
  for (std::size_t k = 0; k < m2.partner_.size(); ++k) partner[map2(k)] = map2(m2.partner_[k]);
  return Matching1(m1.source_.concat(m2.source_), m1.target_.concat(m2.target_), std::move(partner),
                   m1.circles_ + m2.circles_);
}

Matching1 underlying_matching(const SlicedDiagram& d) {
  const auto lv = d.levels();
  Matching1 acc = Matching1::identity(lv.front());
  for (std::size_t k = 0; k < d.slice_count(); ++k) {
    std::vector<std::pair<Endpoint, Endpoint>> pairs;
    std::size_t in = 0;
    std::size_t out = 0;
    for (const auto& g : d.slices()[k]) {
      switch (g.kind) {
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
          pairs.emplace_back(Endpoint::bottom(in), Endpoint::top(out + 1));
          pairs.emplace_back(Endpoint::bottom(in + 1), Endpoint::top(out));
          break;
      }
      in += g.in_arity();
      out += g.out_arity();
    }
    acc = compose1(Matching1::create(lv[k], lv[k + 1], pairs), acc);
  }
  return acc;
}

RingMatrix tqft1_eval(const Matching1& m, std::size_t dim_v, const std::string& variable) {
  if (dim_v == 0) throw CobordError("tqft1_eval: dim_v must be positive");
  const std::size_t src = m.source().size();
  const std::size_t tgt = m.target().size();
  auto power = [dim_v](std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= dim_v;
    return r;
  };
  const std::size_t rows = power(tgt);
  const std::size_t cols = power(src);
  RingMatrix out(rows, cols, variable);
  Integer scale = 1;
  for (std::size_t i = 0; i < m.circles(); ++i) scale *= static_cast<unsigned long long>(dim_v);
  const LaurentPoly value = LaurentPoly::constant(scale, variable);

  const auto pairs = m.pairs();
  // Enumerate one basis label per component; both ends share it.
  std::vector<std::size_t> label(pairs.size(), 0);
  std::vector<std::size_t> bottom_digit(src);
  std::vector<std::size_t> top_digit(tgt);
  const std::size_t combos = power(pairs.size());
  for (std::size_t n = 0; n < combos; ++n) {
    std::size_t rest = n;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      label[p] = rest % dim_v;
      rest /= dim_v;
      for (const Endpoint e : {pairs[p].first, pairs[p].second}) {
        (e.side == Endpoint::Side::Bottom ? bottom_digit : top_digit)[e.index] = label[p];
      }
    }
    std::size_t r = 0;
    for (std::size_t i = 0; i < tgt; ++i) r = conventions::kron_index(r, top_digit[i], dim_v);
    std::size_t c = 0;
    for (std::size_t i = 0; i < src; ++i) c = conventions::kron_index(c, bottom_digit[i], dim_v);
    out.set(r, c, value);
  }
  return out;
}

}  // namespace qtangle
