#include "knotcalc/framed.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace knotcalc {

namespace {

std::size_t next_index(std::size_t i, std::size_t n) { return (i + 1) % n; }

std::map<int, std::pair<std::size_t, std::size_t>> visit_table(
    const KnotDiagram& d) {
  std::map<int, std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < d.visits.size(); ++i) {
    seen[d.visits[i].crossing].push_back(i);
  }
  std::map<int, std::pair<std::size_t, std::size_t>> out;
  for (const auto& [id, idx] : seen) {
    if (idx.size() != 2) {
      throw DomainError(Errc::InvalidGaussCode,
                        "crossing " + std::to_string(id) + " has " +
                            std::to_string(idx.size()) + " visits");
    }
    out[id] = {idx[0], idx[1]};
  }
  return out;
}

std::pair<std::size_t, std::size_t> visits_of(const KnotDiagram& d, int id) {
  std::size_t first = d.visits.size(), second = d.visits.size();
  for (std::size_t i = 0; i < d.visits.size(); ++i) {
    if (d.visits[i].crossing != id) continue;
    if (first == d.visits.size()) {
      first = i;
    } else {
      second = i;
    }
  }
  if (second == d.visits.size()) {
    throw DomainError(Errc::MoveNotApplicable,
                      "crossing " + std::to_string(id) + " not in diagram");
  }
  return {first, second};
}

int sign_of(const KnotDiagram& d, int id) {
  return d.visits[visits_of(d, id).first].sign;
}

// Start index of a kink: the visit whose cyclic successor is the partner.
// Linear adjacency is preferred over the wrap pair.
std::optional<std::size_t> kink_start(const KnotDiagram& d, int id) {
  auto [i, j] = visits_of(d, id);
  if (j == i + 1) return i;
  if (i == 0 && j == d.visits.size() - 1) return j;
  return std::nullopt;
}

int fresh_or_checked_id(const KnotDiagram& d, int requested, int fallback) {
  if (requested == 0) return fallback;
  if (requested < 0) {
    throw DomainError(Errc::MoveNotApplicable, "crossing id must be positive");
  }
  for (const Visit& v : d.visits) {
    if (v.crossing == requested) {
      throw DomainError(Errc::MoveNotApplicable,
                        "crossing id " + std::to_string(requested) +
                            " already in use");
    }
  }
  return requested;
}

// Gap index, in the vector with `removed` taken out, where a pair starting
// at `start` re-enters. A wrapped pair re-enters at the end gap.
std::size_t gap_after_removal(std::size_t start, bool wraps,
                              const std::vector<std::size_t>& removed,
                              std::size_t n) {
  if (wraps) return n - removed.size();
  std::size_t before = 0;
  for (std::size_t r : removed) {
    if (r < start) ++before;
  }
  return start - before;
}

void erase_indices(std::vector<Visit>& visits,
                   std::vector<std::size_t> indices) {
  std::sort(indices.rbegin(), indices.rend());
  for (std::size_t i : indices) {
    visits.erase(visits.begin() + static_cast<std::ptrdiff_t>(i));
  }
}

struct R2Pattern {
  std::size_t over_start = 0;
  std::size_t under_start = 0;
};

std::optional<R2Pattern> match_r2(const KnotDiagram& d, int c1, int c2) {
  if (c1 == c2) return std::nullopt;
  const std::size_t n = d.visits.size();
  auto [i1, i2] = visits_of(d, c1);
  auto [j1, j2] = visits_of(d, c2);
  if (sign_of(d, c1) != -sign_of(d, c2)) return std::nullopt;

  std::vector<std::size_t> all = {i1, i2, j1, j2};
  std::vector<std::size_t> starts;
  for (std::size_t p : all) {
    std::size_t q = next_index(p, n);
    if (d.visits[p].crossing != d.visits[q].crossing &&
        std::count(all.begin(), all.end(), q)) {
      starts.push_back(p);
    }
  }
  for (std::size_t a = 0; a < starts.size(); ++a) {
    for (std::size_t b = a + 1; b < starts.size(); ++b) {
      std::size_t p1 = starts[a], p2 = starts[b];
      std::vector<std::size_t> cover = {p1, next_index(p1, n), p2,
                                        next_index(p2, n)};
      std::sort(cover.begin(), cover.end());
      std::vector<std::size_t> want = all;
      std::sort(want.begin(), want.end());
      if (cover != want) continue;
      if (std::unique(cover.begin(), cover.end()) != cover.end()) continue;
      auto pass_at = [&](std::size_t p) { return d.visits[p].pass; };
      bool p1_over = pass_at(p1) == Pass::Over &&
                     pass_at(next_index(p1, n)) == Pass::Over;
      bool p1_under = pass_at(p1) == Pass::Under &&
                      pass_at(next_index(p1, n)) == Pass::Under;
      bool p2_over = pass_at(p2) == Pass::Over &&
                     pass_at(next_index(p2, n)) == Pass::Over;
      bool p2_under = pass_at(p2) == Pass::Under &&
                      pass_at(next_index(p2, n)) == Pass::Under;
      if (p1_over && p2_under) return R2Pattern{p1, p2};
      if (p2_over && p1_under) return R2Pattern{p2, p1};
    }
  }
  return std::nullopt;
}

struct R3Pattern {
  std::size_t starts[3];
};

std::optional<R3Pattern> match_r3(const KnotDiagram& d, int c1, int c2,
                                  int c3) {
  if (c1 == c2 || c1 == c3 || c2 == c3) return std::nullopt;
  const std::size_t n = d.visits.size();
  std::vector<std::size_t> all;
  for (int id : {c1, c2, c3}) {
    auto [i, j] = visits_of(d, id);
    all.push_back(i);
    all.push_back(j);
  }
  std::vector<std::size_t> starts;
  for (std::size_t p : all) {
    std::size_t q = next_index(p, n);
    if (d.visits[p].crossing != d.visits[q].crossing &&
        std::count(all.begin(), all.end(), q)) {
      starts.push_back(p);
    }
  }
  std::sort(starts.begin(), starts.end());
  std::vector<std::size_t> want = all;
  std::sort(want.begin(), want.end());
  for (std::size_t a = 0; a < starts.size(); ++a) {
    for (std::size_t b = a + 1; b < starts.size(); ++b) {
      for (std::size_t c = b + 1; c < starts.size(); ++c) {
        std::size_t ps[3] = {starts[a], starts[b], starts[c]};
        std::vector<std::size_t> cover;
        for (std::size_t p : ps) {
          cover.push_back(p);
          cover.push_back(next_index(p, n));
        }
        std::sort(cover.begin(), cover.end());
        if (cover != want) continue;
        if (std::unique(cover.begin(), cover.end()) != cover.end()) continue;
        int over_pairs = 0, under_pairs = 0, mixed = 0;
        for (std::size_t p : ps) {
          Pass x = d.visits[p].pass;
          Pass y = d.visits[next_index(p, n)].pass;
          if (x == Pass::Over && y == Pass::Over) ++over_pairs;
          else if (x == Pass::Under && y == Pass::Under) ++under_pairs;
          else ++mixed;
        }
        if (over_pairs == 1 && under_pairs == 1 && mixed == 1) {
          return R3Pattern{{ps[0], ps[1], ps[2]}};
        }
      }
    }
  }
  return std::nullopt;
}

FramedDiagram apply_r2_insert(const FramedDiagram& k, const R2Insert& m) {
  const std::size_t n = k.diagram.visits.size();
  if (m.over_at > n || m.under_at > n) {
    throw DomainError(Errc::MoveNotApplicable, "insertion gap out of range");
  }
  if (m.sign != 1 && m.sign != -1) {
    throw DomainError(Errc::MoveNotApplicable, "sign must be +1 or -1");
  }
  if ((m.id_a == 0) != (m.id_b == 0)) {
    throw DomainError(Errc::MoveNotApplicable,
                      "give both crossing ids or neither");
  }
  int base = max_crossing_id(k.diagram);
  int a = fresh_or_checked_id(k.diagram, m.id_a, base + 1);
  int b = fresh_or_checked_id(k.diagram, m.id_b, base + 2);
  if (a == b) {
    throw DomainError(Errc::MoveNotApplicable, "crossing ids must differ");
  }

  std::vector<Visit> over_pair = {{a, Pass::Over, m.sign},
                                  {b, Pass::Over, -m.sign}};
  std::vector<Visit> under_pair;
  if (m.parallel) {
    under_pair = {{a, Pass::Under, m.sign}, {b, Pass::Under, -m.sign}};
  } else {
    under_pair = {{b, Pass::Under, -m.sign}, {a, Pass::Under, m.sign}};
  }

  FramedDiagram out = k;
  auto insert_pair = [&out](std::size_t at, const std::vector<Visit>& pair) {
    out.diagram.visits.insert(
        out.diagram.visits.begin() + static_cast<std::ptrdiff_t>(at),
        pair.begin(), pair.end());
  };
  if (m.over_at > m.under_at) {
    insert_pair(m.over_at, over_pair);
    insert_pair(m.under_at, under_pair);
  } else if (m.under_at > m.over_at) {
    insert_pair(m.under_at, under_pair);
    insert_pair(m.over_at, over_pair);
  } else if (m.over_first) {
    insert_pair(m.over_at, under_pair);
    insert_pair(m.over_at, over_pair);
  } else {
    insert_pair(m.over_at, over_pair);
    insert_pair(m.over_at, under_pair);
  }
  return out;
}

FramedDiagram apply_r2_remove(const FramedDiagram& k, const R2Remove& m) {
  auto pat = match_r2(k.diagram, m.c1, m.c2);
  if (!pat) {
    throw DomainError(Errc::MoveNotApplicable,
                      "no removable bigon on crossings " +
                          std::to_string(m.c1) + ", " + std::to_string(m.c2));
  }
  const std::size_t n = k.diagram.visits.size();
  FramedDiagram out = k;
  erase_indices(out.diagram.visits,
                {pat->over_start, next_index(pat->over_start, n),
                 pat->under_start, next_index(pat->under_start, n)});
  return out;
}

FramedDiagram apply_r3(const FramedDiagram& k, const R3Slide& m) {
  auto pat = match_r3(k.diagram, m.c1, m.c2, m.c3);
  if (!pat) {
    throw DomainError(Errc::MoveNotApplicable,
                      "no slide triangle on crossings " +
                          std::to_string(m.c1) + ", " + std::to_string(m.c2) +
                          ", " + std::to_string(m.c3));
  }
  const std::size_t n = k.diagram.visits.size();
  FramedDiagram out = k;
  for (std::size_t p : pat->starts) {
    std::swap(out.diagram.visits[p], out.diagram.visits[next_index(p, n)]);
  }
  return out;
}

FramedDiagram apply_kink_cancel(const FramedDiagram& k, const KinkCancel& m) {
  if (m.c1 == m.c2) {
    throw DomainError(Errc::MoveNotApplicable, "kinks must be distinct");
  }
  auto s1 = kink_start(k.diagram, m.c1);
  auto s2 = kink_start(k.diagram, m.c2);
  if (!s1 || !s2) {
    throw DomainError(Errc::MoveNotApplicable, "crossing is not a kink");
  }
  if (sign_of(k.diagram, m.c1) != -sign_of(k.diagram, m.c2)) {
    throw DomainError(Errc::MoveNotApplicable,
                      "kink signs must be opposite");
  }
  const std::size_t n = k.diagram.visits.size();
  FramedDiagram out = k;
  erase_indices(out.diagram.visits, {*s1, next_index(*s1, n), *s2,
                                     next_index(*s2, n)});
  return out;
}

FramedDiagram apply_offset_insert(const FramedDiagram& k,
                                  const OffsetTradeInsert& m) {
  if (m.at > k.diagram.visits.size()) {
    throw DomainError(Errc::MoveNotApplicable, "insertion gap out of range");
  }
  if (m.sign != 1 && m.sign != -1) {
    throw DomainError(Errc::MoveNotApplicable, "sign must be +1 or -1");
  }
  int id = fresh_or_checked_id(k.diagram, m.id,
                               max_crossing_id(k.diagram) + 1);
  FramedDiagram out = k;
  std::vector<Visit> pair;
  if (m.over_first) {
    pair = {{id, Pass::Over, m.sign}, {id, Pass::Under, m.sign}};
  } else {
    pair = {{id, Pass::Under, m.sign}, {id, Pass::Over, m.sign}};
  }
  out.diagram.visits.insert(
      out.diagram.visits.begin() + static_cast<std::ptrdiff_t>(m.at),
      pair.begin(), pair.end());
  out.offset -= m.sign;
  return out;
}

FramedDiagram apply_offset_remove(const FramedDiagram& k,
                                  const OffsetTradeRemove& m) {
  auto s = kink_start(k.diagram, m.crossing);
  if (!s) {
    throw DomainError(Errc::MoveNotApplicable,
                      "crossing " + std::to_string(m.crossing) +
                          " is not a kink");
  }
  const std::size_t n = k.diagram.visits.size();
  FramedDiagram out = k;
  int sign = sign_of(k.diagram, m.crossing);
  erase_indices(out.diagram.visits, {*s, next_index(*s, n)});
  out.offset += sign;
  return out;
}

FramedDiagram apply_crossing_change(const FramedDiagram& k,
                                    const CrossingChange& e) {
  auto [i, j] = visits_of(k.diagram, e.crossing);
  int current = k.diagram.visits[i].sign;
  if (e.sign != -current) {
    throw DomainError(Errc::MoveNotApplicable,
                      "crossing-change sign must be the post-change sign " +
                          std::to_string(-current));
  }
  SingularFramedDiagram here = make_snapshot(k, e.crossing);
  if (!same_marked_diagram(here, e.snapshot) ||
      e.snapshot.marked != std::set<int>{e.crossing} ||
      e.snapshot.offset != k.offset) {
    throw DomainError(Errc::MoveNotApplicable,
                      "snapshot does not match the state at the change");
  }
  FramedDiagram out = k;
  for (std::size_t p : {i, j}) {
    Visit& v = out.diagram.visits[p];
    v.pass = v.pass == Pass::Over ? Pass::Under : Pass::Over;
    v.sign = e.sign;
  }
  return out;
}

}  // namespace

void validate(const KnotDiagram& d) {
  std::map<int, std::vector<const Visit*>> seen;
  for (std::size_t i = 0; i < d.visits.size(); ++i) {
    const Visit& v = d.visits[i];
    if (v.crossing <= 0) {
      throw DomainError(Errc::InvalidGaussCode, "crossing id must be positive",
                        i);
    }
    if (v.sign != 1 && v.sign != -1) {
      throw DomainError(Errc::InvalidGaussCode, "sign must be +1 or -1", i);
    }
    seen[v.crossing].push_back(&v);
  }
  for (const auto& [id, vs] : seen) {
    if (vs.size() != 2) {
      throw DomainError(Errc::InvalidGaussCode,
                        "crossing " + std::to_string(id) + " has " +
                            std::to_string(vs.size()) + " visits, want 2");
    }
    if (vs[0]->pass == vs[1]->pass) {
      throw DomainError(Errc::InvalidGaussCode,
                        "crossing " + std::to_string(id) +
                            " needs one over and one under visit");
    }
    if (vs[0]->sign != vs[1]->sign) {
      throw DomainError(Errc::InvalidGaussCode,
                        "crossing " + std::to_string(id) +
                            " has mismatched signs");
    }
  }
}

long long writhe(const KnotDiagram& d) {
  validate(d);
  long long total = 0;
  for (const Visit& v : d.visits) total += v.sign;
  return total / 2;
}

int max_crossing_id(const KnotDiagram& d) {
  int top = 0;
  for (const Visit& v : d.visits) top = std::max(top, v.crossing);
  return top;
}

void validate(const FramedDiagram& k) { validate(k.diagram); }

long long self_linking(const FramedDiagram& k) {
  return writhe(k.diagram) + k.offset;
}

FramedDiagram shift_framing(const FramedDiagram& k, long long i) {
  FramedDiagram out = k;
  out.offset += i;
  return out;
}

long long framing_obstruction(const FramedDiagram& k1,
                              const FramedDiagram& k2) {
  if (k1.diagram != k2.diagram) {
    throw DomainError(Errc::UnderlyingMismatch,
                      "framing obstruction needs the same underlying diagram");
  }
  return self_linking(k1) - self_linking(k2);
}

bool framed_homotopic_parity(const FramedDiagram& k1,
                             const FramedDiagram& k2) {
  return framing_obstruction(k1, k2) % 2 == 0;
}

void validate(const SingularFramedDiagram& s) {
  validate(s.diagram);
  auto table = visit_table(s.diagram);
  for (int id : s.marked) {
    if (!table.count(id)) {
      throw DomainError(Errc::InvalidGaussCode,
                        "marked crossing " + std::to_string(id) +
                            " not in diagram");
    }
  }
  if (s.loops) {
    if (s.loops->rank < 1) {
      throw DomainError(Errc::AlphabetMismatch, "loop pair rank must be >= 1");
    }
    if (max_generator(s.loops->first) > s.loops->rank ||
        max_generator(s.loops->second) > s.loops->rank) {
      throw DomainError(Errc::AlphabetMismatch,
                        "loop word exceeds declared rank");
    }
  }
}

SingularFramedDiagram canonicalize_marked(const SingularFramedDiagram& s) {
  validate(s);
  SingularFramedDiagram out = s;
  for (int id : out.marked) {
    auto [i, j] = visits_of(out.diagram, id);
    if (out.diagram.visits[i].pass == Pass::Under) {
      for (std::size_t p : {i, j}) {
        Visit& v = out.diagram.visits[p];
        v.pass = v.pass == Pass::Over ? Pass::Under : Pass::Over;
        v.sign = -v.sign;
      }
    }
  }
  return out;
}

bool same_marked_diagram(const SingularFramedDiagram& a,
                         const SingularFramedDiagram& b) {
  SingularFramedDiagram ca = canonicalize_marked(a);
  SingularFramedDiagram cb = canonicalize_marked(b);
  return ca.diagram == cb.diagram && ca.marked == cb.marked;
}

bool singular_equal(const SingularFramedDiagram& a,
                    const SingularFramedDiagram& b) {
  return same_marked_diagram(a, b) && a.offset == b.offset;
}

SingularFramedDiagram make_snapshot(const FramedDiagram& k, int crossing) {
  visits_of(k.diagram, crossing);
  SingularFramedDiagram s;
  s.diagram = k.diagram;
  s.offset = k.offset;
  s.marked = {crossing};
  return canonicalize_marked(s);
}

CrossingChange make_crossing_change(const FramedDiagram& k, int crossing) {
  CrossingChange e;
  e.crossing = crossing;
  e.sign = -sign_of(k.diagram, crossing);
  e.snapshot = make_snapshot(k, crossing);
  return e;
}

FramedDiagram apply_move(const FramedDiagram& k, const FramedMove& move) {
  validate(k);
  return std::visit(
      [&k](const auto& m) -> FramedDiagram {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, R2Insert>) {
          return apply_r2_insert(k, m);
        } else if constexpr (std::is_same_v<M, R2Remove>) {
          return apply_r2_remove(k, m);
        } else if constexpr (std::is_same_v<M, R3Slide>) {
          return apply_r3(k, m);
        } else if constexpr (std::is_same_v<M, KinkCancel>) {
          return apply_kink_cancel(k, m);
        } else if constexpr (std::is_same_v<M, OffsetTradeInsert>) {
          return apply_offset_insert(k, m);
        } else {
          return apply_offset_remove(k, m);
        }
      },
      move);
}

FramedDiagram apply_event(const FramedDiagram& k, const PathEvent& event) {
  validate(k);
  return std::visit(
      [&k](const auto& e) -> FramedDiagram {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, CrossingChange>) {
          return apply_crossing_change(k, e);
        } else {
          return apply_move(k, FramedMove(e));
        }
      },
      event);
}

void validate(const MoveSequence& path) { end_state(path); }

FramedDiagram end_state(const MoveSequence& path) {
  validate(path.start);
  FramedDiagram state = path.start;
  for (std::size_t i = 0; i < path.events.size(); ++i) {
    try {
      state = apply_event(state, path.events[i]);
    } catch (const DomainError& e) {
      throw DomainError(e.code(), "event " + std::to_string(i) + ": " +
                                      e.detail(),
                        i);
    }
  }
  return state;
}

long long delta_I(const MoveSequence& path) {
  validate(path);
  long long total = 0;
  for (const PathEvent& ev : path.events) {
    if (const auto* cc = std::get_if<CrossingChange>(&ev)) total += cc->sign;
  }
  return total;
}

long long delta_I_filtered(
    const MoveSequence& path,
    const std::function<int(const SingularFramedDiagram&)>& filter) {
  validate(path);
  long long total = 0;
  for (const PathEvent& ev : path.events) {
    if (const auto* cc = std::get_if<CrossingChange>(&ev)) {
      if (filter(cc->snapshot) != 0) total += cc->sign;
    }
  }
  return total;
}

MoveSequence concat(const MoveSequence& a, const MoveSequence& b) {
  FramedDiagram junction = end_state(a);
  validate(b);
  if (!(junction == b.start)) {
    throw DomainError(Errc::UnderlyingMismatch,
                      "second path must start at the end of the first");
  }
  MoveSequence out = a;
  out.events.insert(out.events.end(), b.events.begin(), b.events.end());
  return out;
}

namespace {

// Inverse of one event given the state it applies to.
PathEvent invert_event(const FramedDiagram& pre, const PathEvent& event) {
  const KnotDiagram& d = pre.diagram;
  const std::size_t n = d.visits.size();

  if (const auto* e = std::get_if<R2Insert>(&event)) {
    int base = max_crossing_id(d);
    int a = e->id_a == 0 ? base + 1 : e->id_a;
    int b = e->id_b == 0 ? base + 2 : e->id_b;
    return R2Remove{a, b};
  }
  if (const auto* e = std::get_if<R2Remove>(&event)) {
    auto pat = match_r2(d, e->c1, e->c2);
    if (!pat) {
      throw DomainError(Errc::MoveNotApplicable, "no removable bigon");
    }
    std::size_t po = pat->over_start, pu = pat->under_start;
    std::vector<std::size_t> removed = {po, next_index(po, n), pu,
                                        next_index(pu, n)};
    std::sort(removed.begin(), removed.end());
    bool over_wraps = next_index(po, n) != po + 1;
    bool under_wraps = next_index(pu, n) != pu + 1;
    R2Insert inv;
    inv.over_at = gap_after_removal(po, over_wraps, removed, n);
    inv.under_at = gap_after_removal(pu, under_wraps, removed, n);
    inv.id_a = d.visits[po].crossing;
    inv.id_b = d.visits[next_index(po, n)].crossing;
    inv.sign = d.visits[po].sign;
    inv.parallel = d.visits[pu].crossing == inv.id_a;
    inv.over_first = inv.over_at != inv.under_at || po < pu;
    return inv;
  }
  if (const auto* e = std::get_if<R3Slide>(&event)) {
    return *e;
  }
  // KinkCancel is expanded into two offset trades by reversed() itself.
  if (std::get_if<KinkCancel>(&event)) {
    throw DomainError(Errc::MoveNotApplicable,
                      "kink cancellation has a two-event inverse");
  }
  if (const auto* e = std::get_if<OffsetTradeInsert>(&event)) {
    int id = e->id == 0 ? max_crossing_id(d) + 1 : e->id;
    return OffsetTradeRemove{id};
  }
  if (const auto* e = std::get_if<OffsetTradeRemove>(&event)) {
    auto s = kink_start(d, e->crossing);
    if (!s) {
      throw DomainError(Errc::MoveNotApplicable, "crossing is not a kink");
    }
    bool wraps = next_index(*s, n) != *s + 1;
    std::vector<std::size_t> removed = {*s, next_index(*s, n)};
    std::sort(removed.begin(), removed.end());
    OffsetTradeInsert inv;
    inv.at = gap_after_removal(*s, wraps, removed, n);
    inv.sign = sign_of(d, e->crossing);
    inv.id = e->crossing;
    inv.over_first = d.visits[*s].pass == Pass::Over;
    return inv;
  }
  const auto& cc = std::get<CrossingChange>(event);
  CrossingChange inv = cc;
  inv.sign = -cc.sign;
  return inv;
}

}  // namespace

MoveSequence reversed(const MoveSequence& path) {
  FramedDiagram state = path.start;
  std::vector<PathEvent> inverses;
  for (std::size_t i = 0; i < path.events.size(); ++i) {
    const PathEvent& ev = path.events[i];
    // KinkCancel inverts to two offset trades, so it is expanded here
    // rather than in invert_event.
    if (const auto* e = std::get_if<KinkCancel>(&ev)) {
      const KnotDiagram& d = state.diagram;
      const std::size_t n = d.visits.size();
      auto s1 = kink_start(d, e->c1);
      auto s2 = kink_start(d, e->c2);
      if (!s1 || !s2) {
        throw DomainError(Errc::MoveNotApplicable, "crossing is not a kink",
                          i);
      }
      std::vector<std::size_t> removed = {*s1, next_index(*s1, n), *s2,
                                          next_index(*s2, n)};
      std::sort(removed.begin(), removed.end());
      struct KinkInfo {
        std::size_t gap, orig;
        int id, sign;
        bool over_first;
      };
      auto info = [&](std::size_t s, int id) {
        bool wraps = next_index(s, n) != s + 1;
        return KinkInfo{gap_after_removal(s, wraps, removed, n), s, id,
                        sign_of(d, id), d.visits[s].pass == Pass::Over};
      };
      KinkInfo k1 = info(*s1, e->c1);
      KinkInfo k2 = info(*s2, e->c2);
      if (k2.gap < k1.gap || (k2.gap == k1.gap && k2.orig < k1.orig)) {
        std::swap(k1, k2);
      }
      OffsetTradeInsert first{k1.gap, k1.sign, k1.id, k1.over_first};
      OffsetTradeInsert second{k2.gap + 2, k2.sign, k2.id, k2.over_first};
      // Pushed back-to-front so the final reverse runs first, then second.
      inverses.push_back(second);
      inverses.push_back(first);
    } else {
      inverses.push_back(invert_event(state, ev));
    }
    try {
      state = apply_event(state, ev);
    } catch (const DomainError& err) {
      throw DomainError(err.code(),
                        "event " + std::to_string(i) + ": " + err.detail(), i);
    }
  }
  std::reverse(inverses.begin(), inverses.end());
  return MoveSequence{state, std::move(inverses)};
}

void validate(const FramingLadder& ladder) {
  validate(ladder.base);
  if (ladder.m_k && (*ladder.m_k <= 0 || *ladder.m_k % 2 != 0)) {
    throw DomainError(Errc::InvalidLadder,
                      "number of framings must be positive and even");
  }
}

long long ladder_class(const FramingLadder& ladder, long long rung) {
  validate(ladder);
  if (!ladder.m_k) return rung;
  long long m = *ladder.m_k;
  return ((rung % m) + m) % m;
}

std::vector<long long> ladder_classes(const FramingLadder& ladder,
                                      const std::vector<long long>& rungs) {
  std::vector<long long> out;
  out.reserve(rungs.size());
  for (long long r : rungs) out.push_back(ladder_class(ladder, r));
  return out;
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace

FramedMove random_move(FramedDiagram& k, std::mt19937_64& rng) {
  validate(k);
  const KnotDiagram& d = k.diagram;
  const std::size_t n = d.visits.size();

  std::vector<int> ids;
  for (const auto& [id, idx] : visit_table(d)) {
    (void)idx;
    ids.push_back(id);
  }

  std::vector<R2Remove> r2_removals;
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      if (match_r2(d, ids[a], ids[b])) r2_removals.push_back({ids[a], ids[b]});
    }
  }
  std::vector<R3Slide> r3_moves;
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      for (std::size_t c = b + 1; c < ids.size(); ++c) {
        if (match_r3(d, ids[a], ids[b], ids[c])) {
          r3_moves.push_back({ids[a], ids[b], ids[c]});
        }
      }
    }
  }
  std::vector<int> kinks;
  for (int id : ids) {
    if (kink_start(d, id)) kinks.push_back(id);
  }
  std::vector<KinkCancel> cancels;
  for (std::size_t a = 0; a < kinks.size(); ++a) {
    for (std::size_t b = a + 1; b < kinks.size(); ++b) {
      if (sign_of(d, kinks[a]) == -sign_of(d, kinks[b])) {
        cancels.push_back({kinks[a], kinks[b]});
      }
    }
  }

  // Kind table: 0 r2-insert, 1 offset-insert, 2 r2-remove, 3 r3,
  // 4 kink-cancel, 5 offset-remove. Removals weighted up on big diagrams.
  std::vector<int> lottery = {0, 1};
  int removal_weight = n > 30 ? 4 : 1;
  auto enter = [&lottery, removal_weight](int kind, bool available) {
    if (!available) return;
    for (int i = 0; i < removal_weight; ++i) lottery.push_back(kind);
  };
  enter(2, !r2_removals.empty());
  enter(3, !r3_moves.empty());
  enter(4, !cancels.empty());
  enter(5, !kinks.empty());

  int kind = lottery[pick(rng, lottery.size())];
  FramedMove move;
  switch (kind) {
    case 0: {
      R2Insert m;
      m.over_at = pick(rng, n + 1);
      m.under_at = pick(rng, n + 1);
      m.sign = rng() % 2 == 0 ? 1 : -1;
      m.parallel = rng() % 2 == 0;
      m.over_first = rng() % 2 == 0;
      move = m;
      break;
    }
    case 1: {
      OffsetTradeInsert m;
      m.at = pick(rng, n + 1);
      m.sign = rng() % 2 == 0 ? 1 : -1;
      m.over_first = rng() % 2 == 0;
      move = m;
      break;
    }
    case 2:
      move = r2_removals[pick(rng, r2_removals.size())];
      break;
    case 3:
      move = r3_moves[pick(rng, r3_moves.size())];
      break;
    case 4:
      move = cancels[pick(rng, cancels.size())];
      break;
    default:
      move = OffsetTradeRemove{kinks[pick(rng, kinks.size())]};
      break;
  }
  k = apply_move(k, move);
  return move;
}

}  // namespace knotcalc
