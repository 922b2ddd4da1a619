#pragma once

#include <cstddef>
#include <vector>

#include "knotcalc/errors.hpp"
#include "knotcalc/framed.hpp"

namespace knotcalc {

enum class EventKind { LeftCusp, RightCusp, Crossing };

// One x-slice event; pos is the 1-based strand index, counted top to bottom.
// LeftCusp(p) inserts two strands at p, p+1; RightCusp(p) joins strands
// p, p+1; Crossing(p) swaps them, the strand entering at p passing in front.
struct Event {
  EventKind kind = EventKind::LeftCusp;
  int pos = 1;

  bool operator==(const Event&) const = default;
};

// Planar front as an x-ordered event word. The strand count starts and ends
// at zero and a valid word traces a single closed component.
struct FrontWord {
  std::vector<Event> events;

  bool operator==(const FrontWord&) const = default;
};

enum class Orientation { Forward, Reverse };

struct OrientedFront {
  FrontWord word;
  Orientation orientation = Orientation::Forward;

  bool operator==(const OrientedFront&) const = default;
};

struct FrontSummary {
  int cusp_count = 0;
  int crossing_count = 0;
  long long writhe = 0;
  long long rotation = 0;
  long long bennequin = 0;

  bool operator==(const FrontSummary&) const = default;
};

// Full traversal data for a valid oriented front.
struct FrontAnalysis {
  FrontSummary summary;
  int down_cusps = 0;
  int up_cusps = 0;
  // Gauss code in traversal order; crossing ids are 1-based ordinals of the
  // Crossing events in word order.
  KnotDiagram gauss;
};

// Sweeps and traces the front. StrandUnderflow / PositionOutOfRange /
// NotAKnot identify the offending event.
FrontAnalysis analyze(const OrientedFront& front);

// Summary under Forward orientation.
FrontSummary validate_front(const FrontWord& word);

long long rotation_number(const OrientedFront& front);

// writhe - cusp_count/2; equals self_linking(front_to_framed(front)).
long long bennequin(const OrientedFront& front);

OrientedFront reversed(const OrientedFront& front);

// Adds one cusp pair on the first traversal segment. sign +1 shifts the
// rotation number by +1, sign -1 by -1; bennequin drops by 1 either way.
OrientedFront insert_zigzag(const OrientedFront& front, int sign);

// i cusp pairs of the rotation-raising type and j of the lowering type.
OrientedFront stabilize(const OrientedFront& front, int i, int j);

// stabilize(1,1): bennequin - 2, rotation unchanged.
OrientedFront kink_move(const OrientedFront& front);

// Smooths the cusps; the framing offset is set so that the self-linking
// number of the result equals bennequin(front).
FramedDiagram front_to_framed(const OrientedFront& front);

enum class FrontMove {
  // Braid relation on three consecutive crossings at adjacent positions.
  TriplePoint,
  // Grows a crossing pair out of a cusp: the strand just above (or below)
  // the cusp slides across it.
  TangencyInsert,
  // Removes such a crossing pair next to a cusp.
  TangencyRemove,
  // Commutes two consecutive events with disjoint strand spans.
  CuspSlide,
};

struct MoveSite {
  std::size_t index = 0;
  // TangencyInsert: pull the strand above (true) or below (false) the cusp.
  bool above = true;

  bool operator==(const MoveSite&) const = default;
};

// Rewrites the word at the site; rotation number and bennequin are
// unchanged. MoveNotApplicable when the pattern does not match.
OrientedFront front_move(const OrientedFront& front, FrontMove move,
                         const MoveSite& site);

// Every (move, site) pair front_move accepts on this front.
std::vector<std::pair<FrontMove, MoveSite>> enumerate_moves(
    const OrientedFront& front);

const char* front_move_name(FrontMove move);

}  // namespace knotcalc
