#include "knotcalc/fronts.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace knotcalc {

namespace {

enum class PortKind { None, Cusp, Cross };

// One end of a strand segment. For a cusp port, upper says whether this
// segment is the upper branch; for a crossing port, over says whether this
// passage is the front strand, and mate is the continuation segment.
struct Port {
  PortKind kind = PortKind::None;
  int mate = -1;
  bool upper = false;
  int crossing = 0;
  bool over = false;
};

struct Segment {
  Port left;
  Port right;
  std::size_t born_at = 0;
};

struct Sweep {
  std::vector<Segment> segments;
  int crossing_events = 0;
  int cusp_events = 0;
};

Sweep sweep(const FrontWord& word) {
  if (word.events.empty()) {
    throw DomainError(Errc::NotAKnot, "empty word traces no component");
  }
  Sweep s;
  std::vector<int> active;  // segment id per strand slot, top to bottom
  for (std::size_t k = 0; k < word.events.size(); ++k) {
    const Event& e = word.events[k];
    const int count = static_cast<int>(active.size());
    switch (e.kind) {
      case EventKind::LeftCusp: {
        if (e.pos < 1 || e.pos > count + 1) {
          throw DomainError(Errc::PositionOutOfRange,
                            "left cusp at " + std::to_string(e.pos) +
                                " with " + std::to_string(count) + " strands",
                            k);
        }
        int u = static_cast<int>(s.segments.size());
        int l = u + 1;
        s.segments.push_back({{PortKind::Cusp, l, true, 0, false},
                              {PortKind::None},
                              k});
        s.segments.push_back({{PortKind::Cusp, u, false, 0, false},
                              {PortKind::None},
                              k});
        active.insert(active.begin() + (e.pos - 1), {u, l});
        ++s.cusp_events;
        break;
      }
      case EventKind::RightCusp: {
        if (count < 2) {
          throw DomainError(Errc::StrandUnderflow,
                            "right cusp needs two strands", k);
        }
        if (e.pos < 1 || e.pos > count - 1) {
          throw DomainError(Errc::PositionOutOfRange,
                            "right cusp at " + std::to_string(e.pos) +
                                " with " + std::to_string(count) + " strands",
                            k);
        }
        int u = active[e.pos - 1];
        int l = active[e.pos];
        s.segments[u].right = {PortKind::Cusp, l, true, 0, false};
        s.segments[l].right = {PortKind::Cusp, u, false, 0, false};
        active.erase(active.begin() + (e.pos - 1),
                     active.begin() + (e.pos + 1));
        ++s.cusp_events;
        break;
      }
      case EventKind::Crossing: {
        if (count < 2) {
          throw DomainError(Errc::StrandUnderflow,
                            "crossing needs two strands", k);
        }
        if (e.pos < 1 || e.pos > count - 1) {
          throw DomainError(Errc::PositionOutOfRange,
                            "crossing at " + std::to_string(e.pos) +
                                " with " + std::to_string(count) + " strands",
                            k);
        }
        int ordinal = ++s.crossing_events;
        int a = active[e.pos - 1];  // enters on top, descends in front
        int b = active[e.pos];
        int c = static_cast<int>(s.segments.size());
        int d = c + 1;
        s.segments.push_back({{PortKind::Cross, b, false, ordinal, false},
                              {PortKind::None},
                              k});
        s.segments.push_back({{PortKind::Cross, a, false, ordinal, true},
                              {PortKind::None},
                              k});
        s.segments[a].right = {PortKind::Cross, d, false, ordinal, true};
        s.segments[b].right = {PortKind::Cross, c, false, ordinal, false};
        active[e.pos - 1] = c;
        active[e.pos] = d;
        break;
      }
    }
  }
  if (!active.empty()) {
    throw DomainError(Errc::NotAKnot,
                      std::to_string(active.size()) + " strands never close",
                      word.events.size() - 1);
  }
  return s;
}

struct CrossingEps {
  int over_eps = 0;
  int under_eps = 0;
};

}  // namespace

FrontAnalysis analyze(const OrientedFront& front) {
  Sweep s = sweep(front.word);
  const bool forward = front.orientation == Orientation::Forward;

  FrontAnalysis out;
  std::vector<bool> visited(s.segments.size(), false);
  std::map<int, CrossingEps> eps;
  std::vector<std::pair<int, Pass>> trail;  // crossing passages in order

  int seg = 0;
  bool moving_right = forward;
  const int start_seg = seg;
  const bool start_dir = moving_right;
  do {
    visited[static_cast<std::size_t>(seg)] = true;
    const Port& port = moving_right ? s.segments[seg].right
                                    : s.segments[seg].left;
    if (port.kind == PortKind::Cusp) {
      // Passing a cusp is downward exactly when entering on the upper branch.
      if (port.upper) {
        ++out.down_cusps;
      } else {
        ++out.up_cusps;
      }
      seg = port.mate;
      moving_right = !moving_right;
    } else {
      trail.emplace_back(port.crossing,
                         port.over ? Pass::Over : Pass::Under);
      if (port.over) {
        eps[port.crossing].over_eps = moving_right ? 1 : -1;
      } else {
        eps[port.crossing].under_eps = moving_right ? 1 : -1;
      }
      seg = port.mate;
    }
  } while (seg != start_seg || moving_right != start_dir);

  for (std::size_t i = 0; i < visited.size(); ++i) {
    if (!visited[i]) {
      throw DomainError(Errc::NotAKnot, "front has more than one component",
                        s.segments[i].born_at);
    }
  }

  long long w = 0;
  std::map<int, int> sign;
  for (const auto& [id, e] : eps) {
    sign[id] = e.over_eps * e.under_eps;
    w += sign[id];
  }
  for (const auto& [id, pass] : trail) {
    out.gauss.visits.push_back({id, pass, sign[id]});
  }

  out.summary.cusp_count = s.cusp_events;
  out.summary.crossing_count = s.crossing_events;
  out.summary.writhe = w;
  out.summary.rotation = (out.down_cusps - out.up_cusps) / 2;
  out.summary.bennequin = w - s.cusp_events / 2;
  return out;
}

FrontSummary validate_front(const FrontWord& word) {
  return analyze({word, Orientation::Forward}).summary;
}

long long rotation_number(const OrientedFront& front) {
  return analyze(front).summary.rotation;
}

long long bennequin(const OrientedFront& front) {
  return analyze(front).summary.bennequin;
}

OrientedFront reversed(const OrientedFront& front) {
  OrientedFront out = front;
  out.orientation = front.orientation == Orientation::Forward
                        ? Orientation::Reverse
                        : Orientation::Forward;
  return out;
}

OrientedFront insert_zigzag(const OrientedFront& front, int sign) {
  if (sign != 1 && sign != -1) {
    throw DomainError(Errc::MoveNotApplicable, "zigzag sign must be +1 or -1");
  }
  analyze(front);
  const int p0 = front.word.events[0].pos;
  OrientedFront out = front;
  // Pattern A raises the rotation number when traversed forward, pattern B
  // lowers it; under the reverse orientation the roles swap.
  const bool pattern_a =
      (sign > 0) == (front.orientation == Orientation::Forward);
  std::vector<Event> zig;
  if (pattern_a) {
    zig = {{EventKind::LeftCusp, p0 + 1}, {EventKind::RightCusp, p0}};
  } else {
    zig = {{EventKind::LeftCusp, p0}, {EventKind::RightCusp, p0 + 1}};
  }
  out.word.events.insert(out.word.events.begin() + 1, zig.begin(), zig.end());
  return out;
}

OrientedFront stabilize(const OrientedFront& front, int i, int j) {
  if (i < 0 || j < 0) {
    throw DomainError(Errc::MoveNotApplicable,
                      "stabilization counts must be nonnegative");
  }
  OrientedFront out = front;
  for (int t = 0; t < i; ++t) out = insert_zigzag(out, 1);
  for (int t = 0; t < j; ++t) out = insert_zigzag(out, -1);
  return out;
}

OrientedFront kink_move(const OrientedFront& front) {
  return stabilize(front, 1, 1);
}

FramedDiagram front_to_framed(const OrientedFront& front) {
  FrontAnalysis a = analyze(front);
  FramedDiagram out;
  out.diagram = a.gauss;
  out.offset = -a.summary.cusp_count / 2;
  return out;
}

namespace {

bool is_kind(const Event& e, EventKind k) { return e.kind == k; }

// Strand count before each event index (index events.size() = after all).
std::vector<int> counts_before(const FrontWord& word) {
  std::vector<int> out;
  out.reserve(word.events.size() + 1);
  int c = 0;
  out.push_back(c);
  for (const Event& e : word.events) {
    if (e.kind == EventKind::LeftCusp) c += 2;
    else if (e.kind == EventKind::RightCusp) c -= 2;
    out.push_back(c);
  }
  return out;
}

FrontWord rewrite(const FrontWord& word, std::size_t at, std::size_t take,
                  const std::vector<Event>& put) {
  FrontWord out = word;
  out.events.erase(out.events.begin() + static_cast<std::ptrdiff_t>(at),
                   out.events.begin() + static_cast<std::ptrdiff_t>(at + take));
  out.events.insert(out.events.begin() + static_cast<std::ptrdiff_t>(at),
                    put.begin(), put.end());
  return out;
}

FrontWord triple_point(const FrontWord& word, std::size_t t) {
  if (t + 3 > word.events.size()) {
    throw DomainError(Errc::MoveNotApplicable, "site out of range", t);
  }
  const Event &e0 = word.events[t], &e1 = word.events[t + 1],
              &e2 = word.events[t + 2];
  bool shape = is_kind(e0, EventKind::Crossing) &&
               is_kind(e1, EventKind::Crossing) &&
               is_kind(e2, EventKind::Crossing) && e0.pos == e2.pos &&
               (e1.pos == e0.pos + 1 || e1.pos + 1 == e0.pos);
  if (!shape) {
    throw DomainError(Errc::MoveNotApplicable,
                      "need crossings a,b,a at adjacent positions", t);
  }
  return rewrite(word, t, 3,
                 {{EventKind::Crossing, e1.pos},
                  {EventKind::Crossing, e0.pos},
                  {EventKind::Crossing, e1.pos}});
}

FrontWord tangency_remove(const FrontWord& word, std::size_t t) {
  if (t + 3 > word.events.size()) {
    throw DomainError(Errc::MoveNotApplicable, "site out of range", t);
  }
  const Event &e0 = word.events[t], &e1 = word.events[t + 1],
              &e2 = word.events[t + 2];
  // [X(i), X(i+1), R(i)] -> [R(i+1)]
  if (is_kind(e0, EventKind::Crossing) && is_kind(e1, EventKind::Crossing) &&
      is_kind(e2, EventKind::RightCusp) && e1.pos == e0.pos + 1 &&
      e2.pos == e0.pos) {
    return rewrite(word, t, 3, {{EventKind::RightCusp, e0.pos + 1}});
  }
  // [X(i+1), X(i), R(i+1)] -> [R(i)]
  if (is_kind(e0, EventKind::Crossing) && is_kind(e1, EventKind::Crossing) &&
      is_kind(e2, EventKind::RightCusp) && e0.pos == e1.pos + 1 &&
      e2.pos == e0.pos) {
    return rewrite(word, t, 3, {{EventKind::RightCusp, e1.pos}});
  }
  // [L(i), X(i+1), X(i)] -> [L(i+1)]
  if (is_kind(e0, EventKind::LeftCusp) && is_kind(e1, EventKind::Crossing) &&
      is_kind(e2, EventKind::Crossing) && e1.pos == e0.pos + 1 &&
      e2.pos == e0.pos) {
    return rewrite(word, t, 3, {{EventKind::LeftCusp, e0.pos + 1}});
  }
  // [L(i+1), X(i), X(i+1)] -> [L(i)]
  if (is_kind(e0, EventKind::LeftCusp) && is_kind(e1, EventKind::Crossing) &&
      is_kind(e2, EventKind::Crossing) && e0.pos == e1.pos + 1 &&
      e2.pos == e0.pos) {
    return rewrite(word, t, 3, {{EventKind::LeftCusp, e1.pos}});
  }
  throw DomainError(Errc::MoveNotApplicable,
                    "no cusp crossing pair at the site", t);
}

FrontWord tangency_insert(const FrontWord& word, std::size_t t, bool above,
                          const std::vector<int>& before) {
  if (t >= word.events.size()) {
    throw DomainError(Errc::MoveNotApplicable, "site out of range", t);
  }
  const Event& e = word.events[t];
  const int j = e.pos;
  const int count = before[t];
  if (e.kind == EventKind::RightCusp) {
    if (above) {
      if (j < 2) {
        throw DomainError(Errc::MoveNotApplicable,
                          "no strand above the cusp", t);
      }
      return rewrite(word, t, 1,
                     {{EventKind::Crossing, j - 1},
                      {EventKind::Crossing, j},
                      {EventKind::RightCusp, j - 1}});
    }
    if (count < j + 2) {
      throw DomainError(Errc::MoveNotApplicable, "no strand below the cusp",
                        t);
    }
    return rewrite(word, t, 1,
                   {{EventKind::Crossing, j + 1},
                    {EventKind::Crossing, j},
                    {EventKind::RightCusp, j + 1}});
  }
  if (e.kind == EventKind::LeftCusp) {
    if (above) {
      if (j < 2) {
        throw DomainError(Errc::MoveNotApplicable,
                          "no strand above the cusp", t);
      }
      return rewrite(word, t, 1,
                     {{EventKind::LeftCusp, j - 1},
                      {EventKind::Crossing, j},
                      {EventKind::Crossing, j - 1}});
    }
    if (count < j) {
      throw DomainError(Errc::MoveNotApplicable, "no strand below the cusp",
                        t);
    }
    return rewrite(word, t, 1,
                   {{EventKind::LeftCusp, j + 1},
                    {EventKind::Crossing, j},
                    {EventKind::Crossing, j + 1}});
  }
  throw DomainError(Errc::MoveNotApplicable, "site is not a cusp", t);
}

FrontWord cusp_slide(const FrontWord& word, std::size_t t) {
  if (t + 2 > word.events.size()) {
    throw DomainError(Errc::MoveNotApplicable, "site out of range", t);
  }
  const Event &e1 = word.events[t], &e2 = word.events[t + 1];
  const int p1 = e1.pos, p2 = e2.pos;
  const int shift2 = e2.kind == EventKind::LeftCusp    ? 2
                     : e2.kind == EventKind::RightCusp ? -2
                                                       : 0;
  Event n1 = e1, n2 = e2;
  if (p2 + 1 <= p1 - 1) {
    // Second event lies entirely above the first: its slot is unaffected,
    // the first event's slot absorbs the count change.
    n1.pos = p1 + shift2;
  } else {
    // Second event must lie entirely below the span of the first.
    switch (e1.kind) {
      case EventKind::LeftCusp:
        if (p2 < p1 + 2) {
          throw DomainError(Errc::MoveNotApplicable, "spans overlap", t);
        }
        n2.pos = p2 - 2;
        break;
      case EventKind::RightCusp:
        if (p2 < p1) {
          throw DomainError(Errc::MoveNotApplicable, "spans overlap", t);
        }
        n2.pos = p2 + 2;
        break;
      case EventKind::Crossing:
        if (p2 < p1 + 2) {
          throw DomainError(Errc::MoveNotApplicable, "spans overlap", t);
        }
        break;
    }
  }
  return rewrite(word, t, 2, {n2, n1});
}

}  // namespace

OrientedFront front_move(const OrientedFront& front, FrontMove move,
                         const MoveSite& site) {
  analyze(front);
  FrontWord next;
  switch (move) {
    case FrontMove::TriplePoint:
      next = triple_point(front.word, site.index);
      break;
    case FrontMove::TangencyRemove:
      next = tangency_remove(front.word, site.index);
      break;
    case FrontMove::TangencyInsert:
      next = tangency_insert(front.word, site.index, site.above,
                             counts_before(front.word));
      break;
    case FrontMove::CuspSlide:
      next = cusp_slide(front.word, site.index);
      break;
  }
  OrientedFront out{next, front.orientation};
  analyze(out);  // the rewrite must keep the word well formed
  return out;
}

std::vector<std::pair<FrontMove, MoveSite>> enumerate_moves(
    const OrientedFront& front) {
  analyze(front);
  std::vector<std::pair<FrontMove, MoveSite>> out;
  const std::size_t n = front.word.events.size();
  for (FrontMove move : {FrontMove::TriplePoint, FrontMove::TangencyInsert,
                         FrontMove::TangencyRemove, FrontMove::CuspSlide}) {
    for (std::size_t t = 0; t < n; ++t) {
      for (bool above : {true, false}) {
        if (move != FrontMove::TangencyInsert && !above) continue;
        MoveSite site{t, above};
        try {
          front_move(front, move, site);
          out.emplace_back(move, site);
        } catch (const DomainError&) {
        }
      }
    }
  }
  return out;
}

const char* front_move_name(FrontMove move) {
  switch (move) {
    case FrontMove::TriplePoint: return "triple-point";
    case FrontMove::TangencyInsert: return "tangency-insert";
    case FrontMove::TangencyRemove: return "tangency-remove";
    case FrontMove::CuspSlide: return "cusp-slide";
  }
  return "unknown";
}

}  // namespace knotcalc
