#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotcalc/errors.hpp"
#include "knotcalc/framed.hpp"
#include "knotcalc/fronts.hpp"

namespace knotcalc {

// Per-double-point choice: +1 positive, -1 negative. A positive resolution
// turns the marked crossing into a crossing of sign +1.
struct ResolutionAssignment {
  std::map<int, int> choice;

  bool operator==(const ResolutionAssignment&) const = default;
};

// +1 for an even number of negative choices, -1 otherwise.
int resolution_sign(const ResolutionAssignment& a);

// AssignmentMismatch unless the assignment covers exactly the marked points.
FramedDiagram resolve(const SingularFramedDiagram& s,
                      const ResolutionAssignment& a);

// Appends d kinks as marked double points. Resolving i of them negatively
// yields the framing shift of -2i relative to k: each negative kink costs a
// writhe of 2 against the all-positive resolution, which reduces to k by
// removing the kinks.
SingularFramedDiagram make_kinked_singular(const FramedDiagram& k, int d);

long long binomial(int n, int k);

// Reference coefficient group.
struct IntGroup {
  using Element = long long;
  static Element zero() { return 0; }
  static Element add(Element a, Element b) { return a + b; }
  static Element negate(Element a) { return -a; }
  static Element scale(long long n, Element a) { return n * a; }
  static bool equal(Element a, Element b) { return a == b; }
};

template <class G = IntGroup>
using InvariantFn = std::function<typename G::Element(const FramedDiagram&)>;

// Signed sum of x over all 2^d resolutions, enumerated in mask order with
// marked ids ascending (bit set = negative choice).
template <class G = IntGroup>
typename G::Element alternating_sum(const InvariantFn<G>& x,
                                    const SingularFramedDiagram& s) {
  validate(s);
  std::vector<int> marked(s.marked.begin(), s.marked.end());
  if (marked.size() >= 63) {
    throw DomainError(Errc::AssignmentMismatch,
                      "too many marked points to enumerate");
  }
  typename G::Element total = G::zero();
  const std::uint64_t masks = std::uint64_t{1} << marked.size();
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    ResolutionAssignment a;
    int negatives = 0;
    for (std::size_t i = 0; i < marked.size(); ++i) {
      bool neg = (mask >> i) & 1;
      a.choice[marked[i]] = neg ? -1 : 1;
      negatives += neg ? 1 : 0;
    }
    typename G::Element term = x(resolve(s, a));
    total = G::add(total, negatives % 2 == 0 ? term : G::negate(term));
  }
  return total;
}

// True iff the alternating sum vanishes on every corpus element; each
// element must carry exactly n+1 marked points.
template <class G = IntGroup>
bool is_order_at_most(const InvariantFn<G>& x, int n,
                      const std::vector<SingularFramedDiagram>& corpus) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (static_cast<int>(corpus[i].marked.size()) != n + 1) {
      throw DomainError(Errc::AssignmentMismatch,
                        "corpus element has " +
                            std::to_string(corpus[i].marked.size()) +
                            " marked points, want " + std::to_string(n + 1),
                        i);
    }
    if (!G::equal(alternating_sum<G>(x, corpus[i]), G::zero())) return false;
  }
  return true;
}

// Values of one invariant on the framing ladder of one knot: rung r labels
// shift_framing(base, r). Rungs step by 2 (framed-homotopy parity); cutoff
// is the topmost rung with a directly realizable value, nullopt when every
// rung is realizable.
template <class G = IntGroup>
struct InvariantLadder {
  std::string knot_label;
  std::optional<long long> cutoff;
  std::map<long long, typename G::Element> values;
};

template <class G = IntGroup>
void validate_ladder(const InvariantLadder<G>& ladder) {
  if (ladder.values.empty()) {
    throw DomainError(Errc::InvalidLadder, "ladder has no rungs");
  }
  long long prev = ladder.values.begin()->first;
  for (auto it = std::next(ladder.values.begin()); it != ladder.values.end();
       ++it) {
    if (it->first != prev + 2) {
      throw DomainError(Errc::InvalidLadder,
                        "rungs must be consecutive with step 2 near rung " +
                            std::to_string(it->first));
    }
    prev = it->first;
  }
  if (ladder.cutoff && !ladder.values.count(*ladder.cutoff)) {
    throw DomainError(Errc::InvalidLadder,
                      "cutoff rung " + std::to_string(*ladder.cutoff) +
                          " is not populated");
  }
}

// Fills rungs above the populated top by the order-n upward recursion
//   value(r) = sum_{i=1..n+1} (-1)^(i+1) C(n+1,i) value(r-2i),
// stopping at up_to (default: one new rung). Populated rungs are never
// rewritten. A ladder with infinite cutoff is returned unchanged.
template <class G = IntGroup>
InvariantLadder<G> extend_invariant(const InvariantLadder<G>& ladder, int n,
                                    std::optional<long long> up_to =
                                        std::nullopt) {
  validate_ladder(ladder);
  if (n < 0) {
    throw DomainError(Errc::InvalidLadder, "order must be nonnegative");
  }
  if (!ladder.cutoff) return ladder;
  InvariantLadder<G> out = ladder;
  const long long top = out.values.rbegin()->first;
  const long long target = up_to ? *up_to : top + 2;
  if ((target - top) % 2 != 0) {
    throw DomainError(Errc::InvalidLadder,
                      "target rung " + std::to_string(target) +
                          " is off the ladder parity");
  }
  for (long long r = top + 2; r <= target; r += 2) {
    typename G::Element value = G::zero();
    for (int i = 1; i <= n + 1; ++i) {
      auto it = out.values.find(r - 2 * i);
      if (it == out.values.end()) {
        throw DomainError(Errc::InsufficientRungs,
                          "rung " + std::to_string(r - 2 * i) +
                              " needed to extend to " + std::to_string(r));
      }
      typename G::Element term = G::scale(binomial(n + 1, i), it->second);
      value = G::add(value, i % 2 == 1 ? term : G::negate(term));
    }
    out.values[r] = value;
  }
  return out;
}

// True iff the order-n recursion holds at every rung with n+1 populated
// predecessors; InsufficientRungs when no rung is checkable.
template <class G = IntGroup>
bool verify_main_identity(const InvariantLadder<G>& ladder, int n) {
  validate_ladder(ladder);
  bool any = false;
  for (const auto& [r, value] : ladder.values) {
    typename G::Element expect = G::zero();
    bool checkable = true;
    for (int i = 1; i <= n + 1; ++i) {
      auto it = ladder.values.find(r - 2 * i);
      if (it == ladder.values.end()) {
        checkable = false;
        break;
      }
      typename G::Element term = G::scale(binomial(n + 1, i), it->second);
      expect = G::add(expect, i % 2 == 1 ? term : G::negate(term));
    }
    if (!checkable) continue;
    any = true;
    if (!G::equal(value, expect)) return false;
  }
  if (!any) {
    throw DomainError(Errc::InsufficientRungs,
                      "no rung has enough predecessors to check");
  }
  return true;
}

// One ladder with the diagram its rungs are framings of.
template <class G = IntGroup>
struct LadderEntry {
  FramedDiagram base;
  InvariantLadder<G> ladder;
};

template <class G = IntGroup>
InvariantLadder<G> build_ladder(const InvariantFn<G>& x,
                                const FramedDiagram& base, long long lo,
                                long long hi, std::optional<long long> cutoff,
                                const std::string& label) {
  InvariantLadder<G> out;
  out.knot_label = label;
  out.cutoff = cutoff;
  for (long long r = lo; r <= hi; r += 2) {
    out.values[r] = x(shift_framing(base, r));
  }
  validate_ladder(out);
  return out;
}

// Round trip at order n: re-deriving every rung above the cutoff from the
// rungs below must reproduce x evaluated on the shifted base, and the
// extended ladder must satisfy the recursion everywhere it is checkable.
template <class G = IntGroup>
bool roundtrip_check(const InvariantFn<G>& x,
                     const std::vector<LadderEntry<G>>& ladders, int n) {
  for (const LadderEntry<G>& entry : ladders) {
    validate_ladder(entry.ladder);
    InvariantLadder<G> direct = entry.ladder;
    if (direct.cutoff) {
      std::map<long long, typename G::Element> kept;
      for (const auto& [r, v] : direct.values) {
        if (r <= *direct.cutoff) kept[r] = v;
      }
      direct.values = std::move(kept);
    }
    const long long top = entry.ladder.values.rbegin()->first;
    long long target = top;
    if (direct.cutoff && *direct.cutoff + 2 > target) {
      target = *direct.cutoff + 2;
    }
    InvariantLadder<G> extended = extend_invariant<G>(direct, n, target);
    for (const auto& [r, v] : extended.values) {
      if (!G::equal(v, x(shift_framing(entry.base, r)))) return false;
    }
    if (!verify_main_identity<G>(extended, n)) return false;
  }
  return true;
}

// x composed with the front smoothing; an invariant of fronts whenever x is
// move-invariant.
template <class G = IntGroup>
std::function<typename G::Element(const OrientedFront&)>
restrict_to_legendrian(const InvariantFn<G>& x) {
  return [x](const OrientedFront& front) { return x(front_to_framed(front)); };
}

// Bundled reference invariants over IntGroup.
InvariantFn<IntGroup> sl_invariant();
InvariantFn<IntGroup> constant_invariant(long long c);
// c0 + c1*sl + c2*sl^2 + ...
InvariantFn<IntGroup> sl_polynomial(const std::vector<long long>& coeffs);

}  // namespace knotcalc
