#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <variant>
#include <vector>

#include "knotcalc/errors.hpp"
#include "knotcalc/words.hpp"

namespace knotcalc {

enum class Pass { Over, Under };

// One visit of the traversal to a crossing. Both visits of a crossing carry
// the same sign.
struct Visit {
  int crossing = 0;
  Pass pass = Pass::Over;
  int sign = 1;

  bool operator==(const Visit&) const = default;
};

// Signed Gauss code, read cyclically. Realizability (planarity) is not
// required; every operation below is well defined on the larger class.
struct KnotDiagram {
  std::vector<Visit> visits;

  bool operator==(const KnotDiagram&) const = default;
};

// InvalidGaussCode unless every crossing id is positive and appears exactly
// twice, once over and once under, with equal signs in {-1,+1}.
void validate(const KnotDiagram& d);

long long writhe(const KnotDiagram& d);

int max_crossing_id(const KnotDiagram& d);

// Framing carried as an integer twist against blackboard framing.
struct FramedDiagram {
  KnotDiagram diagram;
  long long offset = 0;

  bool operator==(const FramedDiagram&) const = default;
};

void validate(const FramedDiagram& k);

long long self_linking(const FramedDiagram& k);

FramedDiagram shift_framing(const FramedDiagram& k, long long i);

// self_linking difference; UnderlyingMismatch unless the diagrams coincide.
long long framing_obstruction(const FramedDiagram& k1, const FramedDiagram& k2);

// True iff the framing obstruction is even.
bool framed_homotopic_parity(const FramedDiagram& k1, const FramedDiagram& k2);

// Two loops attached at a double point, as free-group words; annotation data
// for the alpha-nu path filter, never derived from the diagram itself.
struct LoopPair {
  int rank = 0;
  Word first;
  Word second;

  bool operator==(const LoopPair&) const = default;
};

// Framed diagram with a subset of crossings marked as unresolved double
// points. A marked crossing's stored pass/sign pair is representation only:
// flipping both passes and negating the sign yields the same marked diagram.
struct SingularFramedDiagram {
  KnotDiagram diagram;
  long long offset = 0;
  std::set<int> marked;
  std::optional<LoopPair> loops;

  bool operator==(const SingularFramedDiagram&) const = default;
};

void validate(const SingularFramedDiagram& s);

// Representative with the first-visited end of every marked crossing Over.
SingularFramedDiagram canonicalize_marked(const SingularFramedDiagram& s);

// Equality of marked diagrams up to the marked-crossing flip; ignores offset
// and loop annotations.
bool same_marked_diagram(const SingularFramedDiagram& a,
                         const SingularFramedDiagram& b);

bool singular_equal(const SingularFramedDiagram& a,
                    const SingularFramedDiagram& b);

SingularFramedDiagram make_snapshot(const FramedDiagram& k, int crossing);

// --- framed moves -----------------------------------------------------------
// Every move preserves self_linking. Positions index gaps (0..size) of the
// visit sequence at the moment the move applies; adjacency is cyclic.

// Pushes one strand over another: two new crossings of opposite sign.
// id_a/id_b zero means allocate max_crossing_id()+1, +2. over_first breaks
// the tie when both gaps coincide.
struct R2Insert {
  std::size_t over_at = 0;
  std::size_t under_at = 0;
  int sign = 1;
  bool parallel = true;
  int id_a = 0;
  int id_b = 0;
  bool over_first = true;

  bool operator==(const R2Insert&) const = default;
};

// Removes a bigon: one cyclically adjacent Over pair and one Under pair on
// crossings c1, c2 of opposite sign.
struct R2Remove {
  int c1 = 0;
  int c2 = 0;

  bool operator==(const R2Remove&) const = default;
};

// Slides the middle strand of a triangle: the six visits of c1, c2, c3 form
// three disjoint cyclically adjacent pairs (one Over-Over, one Under-Under,
// one mixed); each pair is swapped in place. Self-inverse.
struct R3Slide {
  int c1 = 0;
  int c2 = 0;
  int c3 = 0;

  bool operator==(const R3Slide&) const = default;
};

// Cancels two kinks of opposite sign without touching the offset.
struct KinkCancel {
  int c1 = 0;
  int c2 = 0;

  bool operator==(const KinkCancel&) const = default;
};

// Adds one kink of the given sign and decrements the offset by it.
struct OffsetTradeInsert {
  std::size_t at = 0;
  int sign = 1;
  int id = 0;
  bool over_first = true;

  bool operator==(const OffsetTradeInsert&) const = default;
};

// Removes one kink and credits its sign back to the offset.
struct OffsetTradeRemove {
  int crossing = 0;

  bool operator==(const OffsetTradeRemove&) const = default;
};

using FramedMove = std::variant<R2Insert, R2Remove, R3Slide, KinkCancel,
                                OffsetTradeInsert, OffsetTradeRemove>;

FramedDiagram apply_move(const FramedDiagram& k, const FramedMove& move);

// Discriminant passage: flips the passes of one crossing and negates its
// sign. `sign` records the sign of the crossing after the change. The
// snapshot is the singular diagram at the passage: exactly the changed
// crossing marked, on the pre-change state (pre and post agree as marked
// diagrams).
struct CrossingChange {
  int crossing = 0;
  int sign = 0;
  SingularFramedDiagram snapshot;

  bool operator==(const CrossingChange&) const = default;
};

CrossingChange make_crossing_change(const FramedDiagram& k, int crossing);

using PathEvent = std::variant<R2Insert, R2Remove, R3Slide, KinkCancel,
                               OffsetTradeInsert, OffsetTradeRemove,
                               CrossingChange>;

FramedDiagram apply_event(const FramedDiagram& k, const PathEvent& event);

// A path in the space of framed diagrams: framed moves plus discriminant
// passages. Each event's precondition must hold on the state reached so far.
struct MoveSequence {
  FramedDiagram start;
  std::vector<PathEvent> events;

  bool operator==(const MoveSequence&) const = default;
};

// Replays the events; DomainError carries the failing event index.
void validate(const MoveSequence& path);

FramedDiagram end_state(const MoveSequence& path);

// Sum of CrossingChange signs.
long long delta_I(const MoveSequence& path);

// Sum restricted to events whose snapshot the filter maps to 1.
long long delta_I_filtered(
    const MoveSequence& path,
    const std::function<int(const SingularFramedDiagram&)>& filter);

// UnderlyingMismatch unless end_state(a) == b.start.
MoveSequence concat(const MoveSequence& a, const MoveSequence& b);

// Inverse path. Removal inverses re-insert with the original ids; a pair
// that wrapped the end of the cyclic word re-enters at the end gap, so the
// endpoint may differ from the original by a rotation of the Gauss code.
MoveSequence reversed(const MoveSequence& path);

// The framed knots shift_framing(base, i); m_k is the caller-declared
// number of framings (positive even, or nullopt for infinitely many).
struct FramingLadder {
  FramedDiagram base;
  std::optional<long long> m_k;
};

// InvalidLadder unless m_k is absent or positive and even.
void validate(const FramingLadder& ladder);

long long ladder_class(const FramingLadder& ladder, long long rung);

// Finite m_k: the m_k residues; infinite: one class per queried rung, so the
// rungs themselves are returned.
std::vector<long long> ladder_classes(const FramingLadder& ladder,
                                      const std::vector<long long>& rungs);

// Picks one applicable framed move at random, applies it, and returns it.
// Deterministic for a fixed rng state; biases toward removals on large
// diagrams so seeded walks stay bounded.
FramedMove random_move(FramedDiagram& k, std::mt19937_64& rng);

}  // namespace knotcalc
