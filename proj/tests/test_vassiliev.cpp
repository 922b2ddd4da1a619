#include <optional>
#include <vector>

#include "doctest.h"
#include "knotcalc/vassiliev.hpp"

using namespace knotcalc;

namespace {

FramedDiagram framed_unknot() { return FramedDiagram{{}, 0}; }

FramedDiagram framed_trefoil() {
  return FramedDiagram{{{{1, Pass::Over, 1},
                         {2, Pass::Under, 1},
                         {3, Pass::Over, 1},
                         {1, Pass::Under, 1},
                         {2, Pass::Over, 1},
                         {3, Pass::Under, 1}}},
                       0};
}

// Strips the marked kinks after resolving, so results compare as plain
// framed diagrams.
FramedDiagram resolve_and_remove(const SingularFramedDiagram& s,
                                 const ResolutionAssignment& a) {
  FramedDiagram out = resolve(s, a);
  for (const auto& [id, choice] : a.choice) {
    out = apply_move(out, OffsetTradeRemove{id});
  }
  return out;
}

InvariantLadder<IntGroup> ladder_of(
    std::optional<long long> cutoff,
    std::initializer_list<std::pair<long long, long long>> rungs) {
  InvariantLadder<IntGroup> out;
  out.knot_label = "test";
  out.cutoff = cutoff;
  for (const auto& [r, v] : rungs) out.values[r] = v;
  return out;
}

}  // namespace

TEST_CASE("resolution sign counts negative choices") {
  CHECK(resolution_sign({}) == 1);
  CHECK(resolution_sign({{{1, 1}}}) == 1);
  CHECK(resolution_sign({{{1, -1}}}) == -1);
  CHECK(resolution_sign({{{1, -1}, {2, -1}}}) == 1);
  CHECK(resolution_sign({{{1, -1}, {2, -1}, {3, -1}}}) == -1);

  try {
    resolution_sign({{{1, 0}}});
    FAIL("expected AssignmentMismatch");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::AssignmentMismatch);
  }
}

TEST_CASE("resolve") {
  const SingularFramedDiagram plain{framed_trefoil().diagram, 0, {}, {}};
  CHECK(resolve(plain, {}) == framed_trefoil());

  const SingularFramedDiagram kink = make_kinked_singular(framed_unknot(), 1);
  const FramedDiagram pos = resolve(kink, {{{1, 1}}});
  const FramedDiagram neg = resolve(kink, {{{1, -1}}});
  CHECK(writhe(pos.diagram) - writhe(neg.diagram) == 2);
  CHECK(self_linking(pos) - self_linking(neg) == 2);

  CHECK_THROWS_AS(resolve(kink, {}), DomainError);
  try {
    resolve(kink, {{{1, 1}, {2, 1}}});
    FAIL("expected AssignmentMismatch");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::AssignmentMismatch);
  }
}

TEST_CASE("resolution is representative independent") {
  SingularFramedDiagram s{framed_trefoil().diagram, 0, {1}, {}};
  // Flip the stored passes of the marked crossing and negate its sign: the
  // same marked diagram, a different representative.
  SingularFramedDiagram flipped = s;
  for (Visit& v : flipped.diagram.visits) {
    if (v.crossing == 1) {
      v.pass = v.pass == Pass::Over ? Pass::Under : Pass::Over;
      v.sign = -v.sign;
    }
  }
  CHECK(same_marked_diagram(s, flipped));
  for (int choice : {1, -1}) {
    CHECK(resolve(s, {{{1, choice}}}) == resolve(flipped, {{{1, choice}}}));
  }
}

TEST_CASE("kinked singular diagrams realize framing shifts") {
  for (const FramedDiagram& base : {framed_unknot(), framed_trefoil()}) {
    const int next_id = max_crossing_id(base.diagram);
    const SingularFramedDiagram one = make_kinked_singular(base, 1);
    CHECK(one.marked.size() == 1);
    const int k1 = next_id + 1;
    CHECK(resolve_and_remove(one, {{{k1, 1}}}) == base);
    CHECK(resolve_and_remove(one, {{{k1, -1}}}) == shift_framing(base, -2));

    const SingularFramedDiagram two = make_kinked_singular(base, 2);
    const int k2 = next_id + 2;
    CHECK(resolve_and_remove(two, {{{k1, 1}, {k2, 1}}}) == base);
    CHECK(resolve_and_remove(two, {{{k1, -1}, {k2, 1}}}) ==
          shift_framing(base, -2));
    CHECK(resolve_and_remove(two, {{{k1, 1}, {k2, -1}}}) ==
          shift_framing(base, -2));
    CHECK(resolve_and_remove(two, {{{k1, -1}, {k2, -1}}}) ==
          shift_framing(base, -4));
  }
}

TEST_CASE("alternating sums") {
  const SingularFramedDiagram one = make_kinked_singular(framed_unknot(), 1);
  const SingularFramedDiagram two = make_kinked_singular(framed_unknot(), 2);

  CHECK(alternating_sum<IntGroup>(constant_invariant(42), one) == 0);
  CHECK(alternating_sum<IntGroup>(constant_invariant(42), two) == 0);
  CHECK(alternating_sum<IntGroup>(sl_invariant(), one) == 2);
  CHECK(alternating_sum<IntGroup>(sl_invariant(), two) == 0);
}

TEST_CASE("order test") {
  std::vector<SingularFramedDiagram> one_marked;
  std::vector<SingularFramedDiagram> two_marked;
  for (const FramedDiagram& base : {framed_unknot(), framed_trefoil()}) {
    one_marked.push_back(make_kinked_singular(base, 1));
    two_marked.push_back(make_kinked_singular(base, 2));
  }

  CHECK(is_order_at_most<IntGroup>(sl_invariant(), 1, two_marked));
  CHECK_FALSE(is_order_at_most<IntGroup>(sl_invariant(), 0, one_marked));
  CHECK(is_order_at_most<IntGroup>(constant_invariant(5), 0, one_marked));

  try {
    is_order_at_most<IntGroup>(sl_invariant(), 0, two_marked);
    FAIL("expected AssignmentMismatch");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::AssignmentMismatch);
    CHECK(e.index() == std::size_t{0});
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(6, 0) == 1);
  CHECK(binomial(6, 6) == 1);
  CHECK(binomial(6, 3) == 20);
}

TEST_CASE("ladder validation") {
  CHECK_THROWS_AS(validate_ladder(ladder_of(std::nullopt, {})), DomainError);

  try {
    validate_ladder(ladder_of(std::nullopt, {{0, 1}, {4, 2}}));
    FAIL("expected InvalidLadder");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::InvalidLadder);
  }

  try {
    validate_ladder(ladder_of(2, {{-2, 1}, {0, 2}}));
    FAIL("expected InvalidLadder");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::InvalidLadder);
  }

  CHECK_NOTHROW(validate_ladder(ladder_of(0, {{-2, 1}, {0, 2}})));
}

TEST_CASE("extension recursion") {
  // Order 1: value(+2) = 2 value(0) - value(-2).
  const auto extended =
      extend_invariant<IntGroup>(ladder_of(0, {{-2, 3}, {0, 5}}), 1);
  CHECK(extended.values.at(2) == 2 * 5 - 3);

  // The constant ladder is a fixed point at every order.
  for (int n = 1; n <= 5; ++n) {
    auto constant = ladder_of(0, {});
    for (long long r = -2 * (n + 1); r <= 0; r += 2) constant.values[r] = 7;
    const auto out = extend_invariant<IntGroup>(constant, n, 4);
    for (const auto& [r, v] : out.values) CHECK(v == 7);
    CHECK(out.values.count(4) == 1);
  }

  // Degree-1 ladders extend linearly.
  const auto linear = build_ladder<IntGroup>(sl_invariant(), framed_unknot(),
                                             -8, 0, 0, "unknot");
  const auto lifted = extend_invariant<IntGroup>(linear, 1, 6);
  for (const auto& [r, v] : lifted.values) CHECK(v == r);

  // Populated rungs are never rewritten.
  const auto noop = extend_invariant<IntGroup>(
      ladder_of(0, {{-2, 3}, {0, 5}, {2, 99}}), 1, 2);
  CHECK(noop.values.at(2) == 99);

  // Infinite cutoff: nothing to extend.
  const auto infinite = ladder_of(std::nullopt, {{-2, 3}, {0, 5}});
  CHECK(extend_invariant<IntGroup>(infinite, 1).values ==
        infinite.values);

  try {
    extend_invariant<IntGroup>(ladder_of(0, {{0, 1}}), 1);
    FAIL("expected InsufficientRungs");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::InsufficientRungs);
  }

  try {
    extend_invariant<IntGroup>(ladder_of(0, {{-2, 3}, {0, 5}}), 1, 3);
    FAIL("expected InvalidLadder for off-parity target");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::InvalidLadder);
  }
}

TEST_CASE("main identity verification") {
  const auto linear = build_ladder<IntGroup>(sl_invariant(), framed_unknot(),
                                             -6, 4, std::nullopt, "unknot");
  CHECK(verify_main_identity<IntGroup>(linear, 1));

  auto square = ladder_of(std::nullopt, {});
  for (long long r = -4; r <= 4; r += 2) square.values[r] = r * r;
  CHECK_FALSE(verify_main_identity<IntGroup>(square, 1));

  const auto extended =
      extend_invariant<IntGroup>(ladder_of(0, {{-2, 3}, {0, 5}}), 1, 8);
  CHECK(verify_main_identity<IntGroup>(extended, 1));

  try {
    verify_main_identity<IntGroup>(ladder_of(0, {{0, 1}}), 1);
    FAIL("expected InsufficientRungs");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::InsufficientRungs);
  }
}

TEST_CASE("restriction to fronts") {
  const OrientedFront unknot{
      FrontWord{{{EventKind::LeftCusp, 1}, {EventKind::RightCusp, 1}}}};
  const auto phi_sl = restrict_to_legendrian<IntGroup>(sl_invariant());
  const auto phi_c = restrict_to_legendrian<IntGroup>(constant_invariant(9));

  CHECK(phi_sl(unknot) == bennequin(unknot));
  CHECK(phi_c(unknot) == 9);
  CHECK(phi_sl(stabilize(unknot, 1, 1)) == phi_sl(unknot) - 2);
}

TEST_CASE("roundtrip") {
  std::vector<LadderEntry<IntGroup>> entries;
  for (const FramedDiagram& base : {framed_unknot(), framed_trefoil()}) {
    entries.push_back(LadderEntry<IntGroup>{
        base,
        build_ladder<IntGroup>(sl_invariant(), base, -8, 0, 0, "fixture")});
  }
  CHECK(roundtrip_check<IntGroup>(sl_invariant(), entries, 1));
  CHECK(roundtrip_check<IntGroup>(sl_invariant(), entries, 2));

  std::vector<LadderEntry<IntGroup>> const_entries;
  const_entries.push_back(LadderEntry<IntGroup>{
      framed_unknot(), build_ladder<IntGroup>(constant_invariant(3),
                                              framed_unknot(), -4, 0, 0,
                                              "const")});
  CHECK(roundtrip_check<IntGroup>(constant_invariant(3), const_entries, 1));

  const auto square = sl_polynomial({0, 0, 1});
  std::vector<LadderEntry<IntGroup>> square_entries;
  square_entries.push_back(LadderEntry<IntGroup>{
      framed_unknot(),
      build_ladder<IntGroup>(square, framed_unknot(), -8, 0, 0, "square")});
  CHECK_FALSE(roundtrip_check<IntGroup>(square, square_entries, 1));
}

TEST_CASE("polynomial invariants evaluate by horner") {
  const FramedDiagram k = shift_framing(framed_trefoil(), 2);  // sl = 5
  CHECK(sl_polynomial({})(k) == 0);
  CHECK(sl_polynomial({4})(k) == 4);
  CHECK(sl_polynomial({0, 1})(k) == self_linking(k));
  CHECK(sl_polynomial({1, 2, 3})(k) == 1 + 2 * 5 + 3 * 25);
}
