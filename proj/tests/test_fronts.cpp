#include <algorithm>

#include "doctest.h"
#include "knotcalc/fronts.hpp"

using namespace knotcalc;

namespace {

FrontWord word(std::initializer_list<Event> events) {
  return FrontWord{std::vector<Event>(events)};
}

const Event L1{EventKind::LeftCusp, 1};
const Event L2{EventKind::LeftCusp, 2};
const Event L4{EventKind::LeftCusp, 4};
const Event R1{EventKind::RightCusp, 1};
const Event R2{EventKind::RightCusp, 2};
const Event X1{EventKind::Crossing, 1};
const Event X2{EventKind::Crossing, 2};
const Event X3{EventKind::Crossing, 3};
const Event X4{EventKind::Crossing, 4};
const Event X5{EventKind::Crossing, 5};

OrientedFront unknot() { return {word({L1, R1})}; }

OrientedFront trefoil() { return {word({L1, L1, X2, X2, X2, R1, R1})}; }

// Trefoil word with three crossings at adjacent positions, so the braid
// relation applies at index 4.
OrientedFront trefoil_triple_site() {
  return {word({L1, L2, L4, X5, X4, X3, X4, X2, X2, X2, X2, R1, R1, R1})};
}

}  // namespace

TEST_CASE("two-cusp unknot summary") {
  const FrontSummary s = validate_front(unknot().word);
  CHECK(s.cusp_count == 2);
  CHECK(s.crossing_count == 0);
  CHECK(s.writhe == 0);
  CHECK(s.rotation == 0);
  CHECK(s.bennequin == -1);
}

TEST_CASE("trefoil front summary") {
  const FrontSummary s = validate_front(trefoil().word);
  CHECK(s.cusp_count == 4);
  CHECK(s.crossing_count == 3);
  CHECK(s.writhe == 3);
  CHECK(s.bennequin == 1);
  CHECK(s.rotation == 0);
}

TEST_CASE("validation errors carry the event index") {
  try {
    validate_front(word({X1}));
    FAIL("expected StrandUnderflow");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::StrandUnderflow);
    CHECK(e.index() == std::size_t{0});
  }

  try {
    validate_front(word({L2}));
    FAIL("expected PositionOutOfRange");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::PositionOutOfRange);
    CHECK(e.index() == std::size_t{0});
  }

  try {
    validate_front(word({L1, R1, L1, R1}));
    FAIL("expected NotAKnot");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::NotAKnot);
    CHECK(e.index().has_value());
  }

  // Strand count must return to zero.
  try {
    validate_front(word({L1}));
    FAIL("expected NotAKnot");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::NotAKnot);
  }
}

TEST_CASE("rotation number") {
  CHECK(rotation_number(unknot()) == 0);
  CHECK(rotation_number(insert_zigzag(unknot(), 1)) == 1);
  CHECK(rotation_number(insert_zigzag(unknot(), -1)) == -1);
  CHECK(rotation_number(stabilize(unknot(), 1, 1)) == 0);
}

TEST_CASE("orientation reversal negates rotation, keeps bennequin") {
  for (const OrientedFront& f :
       {unknot(), trefoil(), insert_zigzag(unknot(), 1)}) {
    const OrientedFront r = reversed(f);
    CHECK(rotation_number(r) == -rotation_number(f));
    CHECK(bennequin(r) == bennequin(f));
  }
}

TEST_CASE("bennequin number") {
  CHECK(bennequin(unknot()) == -1);
  CHECK(bennequin(trefoil()) == 1);
  CHECK(bennequin(stabilize(trefoil(), 2, 1)) == bennequin(trefoil()) - 3);
}

TEST_CASE("stabilization relations") {
  CHECK(stabilize(unknot(), 0, 0) == unknot());
  for (const OrientedFront& k : {unknot(), trefoil()}) {
    for (int i = 0; i <= 2; ++i) {
      for (int j = 0; j <= 2; ++j) {
        const OrientedFront s = stabilize(k, i, j);
        CHECK(bennequin(s) == bennequin(k) - (i + j));
        CHECK(rotation_number(s) == rotation_number(k) + (i - j));
      }
    }
  }
  // Composition agrees with the combined stabilization on (tb, r).
  const OrientedFront twice = stabilize(stabilize(trefoil(), 1, 0), 1, 1);
  const OrientedFront once = stabilize(trefoil(), 2, 1);
  CHECK(bennequin(twice) == bennequin(once));
  CHECK(rotation_number(twice) == rotation_number(once));
}

TEST_CASE("zigzag pair composition") {
  const OrientedFront f = insert_zigzag(insert_zigzag(trefoil(), 1), -1);
  CHECK(rotation_number(f) == rotation_number(trefoil()));
  CHECK(bennequin(f) == bennequin(trefoil()) - 2);
}

TEST_CASE("kink move") {
  OrientedFront f = trefoil();
  for (int n = 1; n <= 3; ++n) {
    f = kink_move(f);
    CHECK(bennequin(f) == bennequin(trefoil()) - 2 * n);
    CHECK(rotation_number(f) == rotation_number(trefoil()));
  }
}

TEST_CASE("triple point move preserves the invariants") {
  const OrientedFront f = trefoil_triple_site();
  CHECK(bennequin(f) == 1);
  CHECK(rotation_number(f) == 0);

  const OrientedFront moved =
      front_move(f, FrontMove::TriplePoint, MoveSite{4});
  CHECK(moved.word != f.word);
  CHECK(bennequin(moved) == 1);
  CHECK(rotation_number(moved) == 0);

  // The rewrite is an involution at the same site.
  const OrientedFront back =
      front_move(moved, FrontMove::TriplePoint, MoveSite{4});
  CHECK(back.word == f.word);

  const auto moves = enumerate_moves(f);
  CHECK(std::any_of(moves.begin(), moves.end(), [](const auto& m) {
    return m.first == FrontMove::TriplePoint;
  }));
}

TEST_CASE("tangency insert and remove preserve the invariants") {
  const OrientedFront f = insert_zigzag(unknot(), 1);
  const auto moves = enumerate_moves(f);
  bool saw_insert = false;
  for (const auto& [move, site] : moves) {
    if (move != FrontMove::TangencyInsert) continue;
    saw_insert = true;
    const OrientedFront grown = front_move(f, move, site);
    CHECK(bennequin(grown) == bennequin(f));
    CHECK(rotation_number(grown) == rotation_number(f));

    const auto shrink = enumerate_moves(grown);
    const auto it =
        std::find_if(shrink.begin(), shrink.end(), [](const auto& m) {
          return m.first == FrontMove::TangencyRemove;
        });
    REQUIRE(it != shrink.end());
    const OrientedFront removed = front_move(grown, it->first, it->second);
    CHECK(bennequin(removed) == bennequin(f));
    CHECK(rotation_number(removed) == rotation_number(f));
  }
  CHECK(saw_insert);
}

TEST_CASE("move pattern mismatch is reported with the site") {
  try {
    front_move(trefoil(), FrontMove::TriplePoint, MoveSite{0});
    FAIL("expected MoveNotApplicable");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::MoveNotApplicable);
    CHECK(e.index() == std::size_t{0});
  }
}

TEST_CASE("smoothing fixes the framing at the bennequin number") {
  CHECK(self_linking(front_to_framed(unknot())) == -1);
  CHECK(self_linking(front_to_framed(trefoil())) == 1);
  CHECK(self_linking(front_to_framed(stabilize(trefoil(), 1, 1))) ==
        bennequin(trefoil()) - 2);
}

TEST_CASE("cusp parity") {
  for (const OrientedFront& f :
       {unknot(), trefoil(), trefoil_triple_site(), stabilize(unknot(), 2, 1)}) {
    const FrontSummary s = validate_front(f.word);
    CHECK(s.cusp_count % 2 == 0);
    const FrontAnalysis a = analyze(f);
    CHECK((a.down_cusps - a.up_cusps) % 2 == 0);
  }
}
