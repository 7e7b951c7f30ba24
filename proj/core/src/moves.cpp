#include "qtangle/moves.hpp"


#include "qtangle/random.hpp"

namespace qtangle {

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1: return "R1";
    case MoveKind::R2: return "R2";
    case MoveKind::R3: return "R3";
    case MoveKind::Zigzag: return "ZIGZAG";
    case MoveKind::Slide: return "SLIDE";
  }
  return "?";
}

namespace {

// Identity strands around `gens`, which replace `consumed` strands of
// `below` starting at `column`.
Slice local_slice(const SignWord& below, std::size_t column, std::size_t consumed, std::vector<Generator> gens) {
  if (column + consumed > below.size()) throw MoveError("move site runs past the end of the word");
  Slice s;
  s.reserve(below.size() + gens.size());
  for (std::size_t i = 0; i < column; ++i) s.push_back(Generator::id(below[i]));
  for (auto& g : gens) s.push_back(g);
  for (std::size_t i = column + consumed; i < below.size(); ++i) s.push_back(Generator::id(below[i]));
  return s;
}

// The single non-identity generator of a slice and its first input column.
struct Active {
  Generator gen;
  std::size_t column;
};

std::optional<Active> single_active(const Slice& slice) {
  std::optional<Active> found;
  std::size_t col = 0;
  for (const auto& g : slice) {
    if (!g.is_identity()) {
      if (found) return std::nullopt;
      found = Active{g, col};
    }
    col += g.in_arity();
  }
  return found;
}

Generator crossing(GeneratorKind kind, Sign s, Sign t) {
  return kind == GeneratorKind::CrossOver ? Generator::over(s, t) : Generator::under(s, t);
}

GeneratorKind opposite(GeneratorKind k) {
  return k == GeneratorKind::CrossOver ? GeneratorKind::CrossUnder : GeneratorKind::CrossOver;
}

std::vector<Slice> splice(const SlicedDiagram& d, std::size_t at, std::size_t erase, std::vector<Slice> insert) {
  std::vector<Slice> slices = d.slices();
  const auto pos = slices.begin() + static_cast<std::ptrdiff_t>(at);
  slices.erase(pos, pos + static_cast<std::ptrdiff_t>(erase));
  slices.insert(slices.begin() + static_cast<std::ptrdiff_t>(at), std::make_move_iterator(insert.begin()),
                std::make_move_iterator(insert.end()));
  return slices;
}

SlicedDiagram r2_insert(const SlicedDiagram& d, const std::vector<SignWord>& lv, MoveSite site) {
  if (site.slice >= lv.size()) throw MoveError("R2: level out of range");
  const SignWord& w = lv[site.slice];
  if (site.column + 1 >= w.size()) throw MoveError("R2: needs two strands at the site");
  const Sign s = w[site.column];
  const Sign t = w[site.column + 1];
  const GeneratorKind first = site.variant == 0 ? GeneratorKind::CrossOver : GeneratorKind::CrossUnder;
  const SignWord mid = *slice_output(local_slice(w, site.column, 2, {crossing(first, s, t)}), w);
  std::vector<Slice> add{local_slice(w, site.column, 2, {crossing(first, s, t)}),
                         local_slice(mid, site.column, 2, {crossing(opposite(first), t, s)})};
  return SlicedDiagram(d.bottom(), splice(d, site.slice, 0, std::move(add)));
}

bool r2_at(const SlicedDiagram& d, std::size_t k, std::size_t c) {
  if (k + 1 >= d.slice_count()) return false;
  auto a = single_active(d.slices()[k]);
  auto b = single_active(d.slices()[k + 1]);
  return a && b && a->gen.is_crossing() && b->gen.is_crossing() && a->column == c && b->column == c &&
         a->gen.kind != b->gen.kind;
}

SlicedDiagram r2_remove(const SlicedDiagram& d, MoveSite site) {
  if (!r2_at(d, site.slice, site.column)) throw MoveError("R2 remove: no opposite crossing pair at the site");
  return SlicedDiagram(d.bottom(), splice(d, site.slice, 2, {}));
}

SlicedDiagram zigzag_insert(const SlicedDiagram& d, const std::vector<SignWord>& lv, MoveSite site) {
  if (site.slice >= lv.size()) throw MoveError("ZIGZAG: level out of range");
  const SignWord& w = lv[site.slice];
  if (site.column >= w.size()) throw MoveError("ZIGZAG: column out of range");
  const Sign s = w[site.column];
  const std::size_t c = site.column;
  std::vector<Slice> add;
  if (site.variant == 0) {
    Slice lower = local_slice(w, c, 1, {Generator::id(s), Generator::cup(flip(s))});
    const SignWord mid = *slice_output(lower, w);
    add = {std::move(lower), local_slice(mid, c, 2, {Generator::cap(s)})};
  } else {
    Slice lower = local_slice(w, c, 1, {Generator::cup(s), Generator::id(s)});
    const SignWord mid = *slice_output(lower, w);
    add = {std::move(lower), local_slice(mid, c + 1, 2, {Generator::cap(flip(s))})};
  }
  return SlicedDiagram(d.bottom(), splice(d, site.slice, 0, std::move(add)));
}

// Matches the two-slice S-bend; returns the variant (0: cup right of the
// strand, 1: cup left).
std::optional<int> zigzag_at(const SlicedDiagram& d, std::size_t k, std::size_t c) {
  if (k + 1 >= d.slice_count()) return std::nullopt;
  auto a = single_active(d.slices()[k]);
  auto b = single_active(d.slices()[k + 1]);
  if (!a || !b || a->gen.kind != GeneratorKind::Cup || b->gen.kind != GeneratorKind::Cap) return std::nullopt;
  if (a->column == c + 1 && b->column == c) return 0;
  if (a->column == c && b->column == c + 1) return 1;
  return std::nullopt;
}

SlicedDiagram zigzag_remove(const SlicedDiagram& d, MoveSite site) {
  if (!zigzag_at(d, site.slice, site.column)) throw MoveError("ZIGZAG remove: no S-bend at the site");
  return SlicedDiagram(d.bottom(), splice(d, site.slice, 2, {}));
}

SlicedDiagram r1_insert(const SlicedDiagram& d, const std::vector<SignWord>& lv, MoveSite site) {
  if (site.slice >= lv.size()) throw MoveError("R1: level out of range");
  const SignWord& w = lv[site.slice];
  if (site.column >= w.size()) throw MoveError("R1: column out of range");
  const Sign s = w[site.column];
  const std::size_t c = site.column;
  const bool left = (site.variant & 1) != 0;
  const GeneratorKind kind = (site.variant & 2) != 0 ? GeneratorKind::CrossUnder : GeneratorKind::CrossOver;
  std::vector<Slice> add;
  if (!left) {
    Slice s1 = local_slice(w, c, 1, {Generator::id(s), Generator::cup(s)});
    const SignWord w1 = *slice_output(s1, w);
    Slice s2 = local_slice(w1, c, 2, {crossing(kind, s, s)});
    const SignWord w2 = *slice_output(s2, w1);
    Slice s3 = local_slice(w2, c + 1, 2, {Generator::cap(s)});
    add = {std::move(s1), std::move(s2), std::move(s3)};
  } else {
    Slice s1 = local_slice(w, c, 1, {Generator::cup(flip(s)), Generator::id(s)});
    const SignWord w1 = *slice_output(s1, w);
    Slice s2 = local_slice(w1, c + 1, 2, {crossing(kind, s, s)});
    const SignWord w2 = *slice_output(s2, w1);
    Slice s3 = local_slice(w2, c, 2, {Generator::cap(flip(s))});
    add = {std::move(s1), std::move(s2), std::move(s3)};
  }
  return SlicedDiagram(d.bottom(), splice(d, site.slice, 0, std::move(add)));
}

bool kink_at(const SlicedDiagram& d, std::size_t k, std::size_t c) {
  if (k + 2 >= d.slice_count()) return false;
  auto a = single_active(d.slices()[k]);
  auto b = single_active(d.slices()[k + 1]);
  auto e = single_active(d.slices()[k + 2]);
  if (!a || !b || !e || a->gen.kind != GeneratorKind::Cup || !b->gen.is_crossing() ||
      e->gen.kind != GeneratorKind::Cap) {
    return false;
  }
  const bool right = a->column == c + 1 && b->column == c && e->column == c + 1;
  const bool left = a->column == c && b->column == c + 1 && e->column == c;
  return right || left;
}

SlicedDiagram r1_remove(const SlicedDiagram& d, MoveSite site) {
  if (!kink_at(d, site.slice, site.column)) throw MoveError("R1 remove: no curl at the site");
  return SlicedDiagram(d.bottom(), splice(d, site.slice, 3, {}));
}

// Crossing kinds of an R3 window at (k, c), and whether the pattern starts
// with the crossing on the left pair of strands.
struct R3Pattern {
  bool left_first;
  GeneratorKind kinds[3];
};

std::optional<R3Pattern> r3_at(const SlicedDiagram& d, std::size_t k, std::size_t c) {
  if (k + 2 >= d.slice_count()) return std::nullopt;
  std::optional<Active> act[3];
  for (int i = 0; i < 3; ++i) {
    act[i] = single_active(d.slices()[k + static_cast<std::size_t>(i)]);
    if (!act[i] || !act[i]->gen.is_crossing()) return std::nullopt;
  }
  R3Pattern p{};
  if (act[0]->column == c && act[1]->column == c + 1 && act[2]->column == c) {
    p.left_first = true;
  } else if (act[0]->column == c + 1 && act[1]->column == c && act[2]->column == c + 1) {
    p.left_first = false;
  } else {
    return std::nullopt;
  }
  for (int i = 0; i < 3; ++i) p.kinds[i] = act[i]->gen.kind;
  // x y x with y differing from both outer crossings is not a braid relation.
  if (p.kinds[0] == p.kinds[2] && p.kinds[0] != p.kinds[1]) return std::nullopt;
  return p;
}

SlicedDiagram r3_apply(const SlicedDiagram& d, const std::vector<SignWord>& lv, MoveSite site) {
  auto p = r3_at(d, site.slice, site.column);
  if (!p) throw MoveError("R3: no braid-relation triple at the site");
  const std::size_t c = site.column;
  SignWord w = lv[site.slice];
  std::vector<Slice> add;
  const GeneratorKind kinds[3] = {p->kinds[2], p->kinds[1], p->kinds[0]};
  for (int i = 0; i < 3; ++i) {
    // New pattern alternates starting on the other pair.
    const bool on_left = (i % 2 == 0) != p->left_first;
    const std::size_t col = on_left ? c : c + 1;
    Slice s = local_slice(w, col, 2, {crossing(kinds[i], w[col], w[col + 1])});
    w = *slice_output(s, w);
    add.push_back(std::move(s));
  }
  return SlicedDiagram(d.bottom(), splice(d, site.slice, 3, std::move(add)));
}

SlicedDiagram slide_split(const SlicedDiagram& d, MoveSite site) {
  if (site.slice >= d.slice_count()) throw MoveError("SLIDE: slice out of range");
  const Slice& slice = d.slices()[site.slice];
  const std::size_t j = site.column;
  if (j >= slice.size() || slice[j].is_identity()) throw MoveError("SLIDE: no non-identity generator at the site");
  auto ids = [](const SignWord& w, Slice& out) {
    for (Sign s : w.signs()) out.push_back(Generator::id(s));
  };
  Slice lower;
  Slice upper;
  for (std::size_t i = 0; i < slice.size(); ++i) {
    const Generator& g = slice[i];
    const bool moves_up = site.variant == 0 ? i == j : i != j;
    if (moves_up) {
      ids(g.input(), lower);
      upper.push_back(g);
    } else {
      lower.push_back(g);
      ids(g.output(), upper);
    }
  }
  return SlicedDiagram(d.bottom(), splice(d, site.slice, 1, {std::move(lower), std::move(upper)}));
}

SlicedDiagram slide_merge(const SlicedDiagram& d, MoveSite site) {
  if (site.slice + 1 >= d.slice_count()) throw MoveError("SLIDE remove: needs two slices");
  auto merged = merge_slices(d.slices()[site.slice], d.slices()[site.slice + 1]);
  if (!merged) throw MoveError("SLIDE remove: slices overlap in some column");
  return SlicedDiagram(d.bottom(), splice(d, site.slice, 2, {std::move(*merged)}));
}

}  // namespace

std::optional<Slice> merge_slices(const Slice& lower, const Slice& upper) {
  Slice out;
  std::size_t il = 0;
  std::size_t iu = 0;
  auto all_ids = [](const Slice& s, std::size_t from, std::size_t n) {
    if (from + n > s.size()) return false;
    for (std::size_t i = from; i < from + n; ++i) {
      if (!s[i].is_identity()) return false;
    }
    return true;
  };
  while (il < lower.size() || iu < upper.size()) {
    if (il < lower.size() && lower[il].out_arity() == 0) {
      out.push_back(lower[il++]);
      continue;
    }
    if (iu < upper.size() && upper[iu].in_arity() == 0) {
      out.push_back(upper[iu++]);
      continue;
    }
    if (il >= lower.size() || iu >= upper.size()) return std::nullopt;
    const Generator& gl = lower[il];
    const Generator& gu = upper[iu];
    if (!gl.is_identity()) {
      const std::size_t k = gl.out_arity();
      if (!all_ids(upper, iu, k)) return std::nullopt;
      out.push_back(gl);
      ++il;
      iu += k;
    } else if (!gu.is_identity()) {
      const std::size_t k = gu.in_arity();
      if (!all_ids(lower, il, k)) return std::nullopt;
      out.push_back(gu);
      ++iu;
      il += k;
    } else {
      out.push_back(gl);
      ++il;
      ++iu;
    }
  }
  return out;
}

SlicedDiagram apply_move(const SlicedDiagram& d, MoveKind kind, MoveSite site, MoveDirection direction) {
  const auto lv = d.levels();
  switch (kind) {
    case MoveKind::R1:
      return direction == MoveDirection::Insert ? r1_insert(d, lv, site) : r1_remove(d, site);
    case MoveKind::R2:
      return direction == MoveDirection::Insert ? r2_insert(d, lv, site) : r2_remove(d, site);
    case MoveKind::R3:
      return r3_apply(d, lv, site);
    case MoveKind::Zigzag:
      return direction == MoveDirection::Insert ? zigzag_insert(d, lv, site) : zigzag_remove(d, site);
    case MoveKind::Slide:
      return direction == MoveDirection::Insert ? slide_split(d, site) : slide_merge(d, site);
  }
  throw MoveError("unknown move kind");
}

std::vector<MoveCandidate> enumerate_moves(const SlicedDiagram& d, MoveKind kind, MoveDirection direction) {
  std::vector<MoveCandidate> out;
  const auto lv = d.levels();
  auto push = [&](std::size_t slice, std::size_t column, int variant) {
    out.push_back({kind, direction, MoveSite{slice, column, variant}});
  };
  const bool insert = direction == MoveDirection::Insert;
  switch (kind) {
    case MoveKind::R1:
    case MoveKind::R2:
    case MoveKind::Zigzag:
      if (insert) {
        const int variants = kind == MoveKind::R1 ? 4 : 2;
        const std::size_t span = kind == MoveKind::R2 ? 2 : 1;
        for (std::size_t l = 0; l < lv.size(); ++l) {
          for (std::size_t c = 0; c + span <= lv[l].size(); ++c) {
            for (int v = 0; v < variants; ++v) push(l, c, v);
          }
        }
      } else {
        for (std::size_t k = 0; k < d.slice_count(); ++k) {
          for (std::size_t c = 0; c < lv[k].size() + 1; ++c) {
            const bool hit = kind == MoveKind::R1   ? kink_at(d, k, c)
                             : kind == MoveKind::R2 ? r2_at(d, k, c)
                                                    : zigzag_at(d, k, c).has_value();
            if (hit) push(k, c, 0);
          }
        }
      }
      break;
    case MoveKind::R3:
      for (std::size_t k = 0; k + 2 < d.slice_count(); ++k) {
        for (std::size_t c = 0; c + 2 < lv[k].size(); ++c) {
          if (r3_at(d, k, c)) push(k, c, 0);
        }
      }
      break;
    case MoveKind::Slide:
      if (insert) {
        for (std::size_t k = 0; k < d.slice_count(); ++k) {
          for (std::size_t j = 0; j < d.slices()[k].size(); ++j) {
            if (d.slices()[k][j].is_identity()) continue;
            push(k, j, 0);
            push(k, j, 1);
          }
        }
      } else {
        for (std::size_t k = 0; k + 1 < d.slice_count(); ++k) {
          if (merge_slices(d.slices()[k], d.slices()[k + 1])) push(k, 0, 0);
        }
      }
      break;
  }
  return out;
}

SlicedDiagram random_equivalent(const SlicedDiagram& d, std::size_t n_moves, std::uint64_t seed,
                                std::span<const MoveKind> kinds) {
  Rng rng(seed);
  SlicedDiagram current = d;
  for (std::size_t step = 0; step < n_moves; ++step) {
    std::vector<std::vector<MoveCandidate>> by_kind;
    for (MoveKind k : kinds) {
      std::vector<MoveCandidate> all = enumerate_moves(current, k, MoveDirection::Insert);
      if (k != MoveKind::R3) {
        auto rem = enumerate_moves(current, k, MoveDirection::Remove);
        all.insert(all.end(), rem.begin(), rem.end());
      }
      if (!all.empty()) by_kind.push_back(std::move(all));
    }
    if (by_kind.empty()) break;
    const auto& pick = by_kind[rng.below(by_kind.size())];
    current = apply_move(current, pick[rng.below(pick.size())]);
  }
  return current;
}

SlicedDiagram insert_kink(const SlicedDiagram& d, std::size_t level, std::size_t column, bool positive,
                          bool left_side) {
  const int variant = (left_side ? 1 : 0) | (positive ? 0 : 2);
  return apply_move(d, MoveKind::R1, MoveSite{level, column, variant}, MoveDirection::Insert);
}

}  // namespace qtangle
