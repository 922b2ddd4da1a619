// Acceptance gate: one check per headline criterion, each printed as a
// single PASS/FAIL line. The process exit code is the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotcalc/corpus.hpp"
#include "knotcalc/fronts.hpp"
#include "knotcalc/topology.hpp"
#include "knotcalc/vassiliev.hpp"

using namespace knotcalc;

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

template <class T>
const T& named(const std::vector<std::pair<std::string, T>>& family,
               const std::string& name) {
  for (const auto& [n, value] : family) {
    if (n == name) return value;
  }
  throw CheckFailure("fixture " + name + " is missing from the corpus");
}

// Second enumeration path for alternating sums: depth-first over the marked
// ids instead of the bit-mask sweep in the library.
long long recursive_alt_sum(const InvariantFn<IntGroup>& x,
                            const SingularFramedDiagram& s) {
  std::vector<int> ids(s.marked.begin(), s.marked.end());
  ResolutionAssignment assignment;
  std::function<long long(std::size_t, int)> walk =
      [&](std::size_t depth, int sign) -> long long {
    if (depth == ids.size()) return sign * x(resolve(s, assignment));
    assignment.choice[ids[depth]] = 1;
    long long total = walk(depth + 1, sign);
    assignment.choice[ids[depth]] = -1;
    total += walk(depth + 1, -sign);
    assignment.choice.erase(ids[depth]);
    return total;
  };
  return walk(0, 1);
}

Word random_reduced_word(std::mt19937_64& rng, int rank, int max_len) {
  Word w;
  const int len = 1 + static_cast<int>(rng() % max_len);
  for (int i = 0; i < len; ++i) {
    int g = 1 + static_cast<int>(rng() % rank);
    w.push_back(rng() % 2 == 0 ? g : -g);
  }
  return reduce(w);
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void check_budget(Clock::time_point start, double limit_ms) {
  const double ms = elapsed_ms(start);
  if (ms > limit_ms) {
    std::ostringstream msg;
    msg << "took " << ms << " ms, budget " << limit_ms << " ms";
    throw CheckFailure(msg.str());
  }
}

// --- criteria ---------------------------------------------------------------

void criterion_1_extension_coefficients(const Corpus&) {
  const auto start = Clock::now();
  for (int n = 1; n <= 5; ++n) {
    InvariantLadder<IntGroup> constant;
    constant.knot_label = "const";
    constant.cutoff = 0;
    for (long long r = -2 * (n + 1); r <= 0; r += 2) constant.values[r] = 7;
    const auto out = extend_invariant<IntGroup>(constant, n, 6);
    for (const auto& [r, v] : out.values) {
      expect(v == 7, "constant ladder moved at order " + std::to_string(n));
    }
  }
  // Order 1 recursion is exactly value(+2) = 2 value(0) - value(-2).
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 25; ++trial) {
    InvariantLadder<IntGroup> ladder;
    ladder.knot_label = "trial";
    ladder.cutoff = 0;
    const long long v0 = static_cast<long long>(rng() % 41) - 20;
    const long long vm2 = static_cast<long long>(rng() % 41) - 20;
    ladder.values[-2] = vm2;
    ladder.values[0] = v0;
    const auto out = extend_invariant<IntGroup>(ladder, 1);
    expect(out.values.at(2) == 2 * v0 - vm2, "order-1 recursion mismatch");
  }
  check_budget(start, 1000.0);
}

void criterion_2_roundtrip(const Corpus& corpus) {
  const auto start = Clock::now();
  const InvariantFn<IntGroup> sl = sl_invariant();
  std::vector<LadderEntry<IntGroup>> entries;
  for (const std::string& name : {"unknot", "trefoil"}) {
    const OrientedFront& front = named(corpus.fronts, name);
    const FramedDiagram base = front_to_framed(front);
    entries.push_back(LadderEntry<IntGroup>{
        base, build_ladder<IntGroup>(sl, base, -8, 0, 0, name)});
  }
  for (const auto& entry : entries) {
    const auto extended = extend_invariant<IntGroup>(entry.ladder, 1, 4);
    expect(verify_main_identity<IntGroup>(extended, 1),
           "identity fails on " + entry.ladder.knot_label);
    for (const auto& [r, v] : extended.values) {
      expect(v == sl(shift_framing(entry.base, r)),
             "extension disagrees with direct evaluation at rung " +
                 std::to_string(r));
    }
  }
  expect(roundtrip_check<IntGroup>(sl, entries, 1), "roundtrip check failed");
  check_budget(start, 1000.0);
}

void criterion_3_order_test(const Corpus& corpus) {
  const InvariantFn<IntGroup> sl = sl_invariant();
  std::vector<SingularFramedDiagram> one_marked;
  std::vector<SingularFramedDiagram> two_marked;
  for (const auto& [name, s] : corpus.singulars) {
    if (s.marked.size() == 1) one_marked.push_back(s);
    if (s.marked.size() == 2) two_marked.push_back(s);
  }
  expect(one_marked.size() + two_marked.size() >= 10,
         "corpus has fewer than 10 singular fixtures");
  expect(!one_marked.empty() && !two_marked.empty(),
         "need both 1- and 2-marked fixtures");

  expect(is_order_at_most<IntGroup>(sl, 1, two_marked),
         "self-linking must pass the order-1 test");
  expect(!is_order_at_most<IntGroup>(sl, 0, one_marked),
         "self-linking must fail the order-0 test");

  // Independent recomputation of every alternating sum, d <= 4.
  std::vector<SingularFramedDiagram> pool;
  for (const auto& [name, s] : corpus.singulars) pool.push_back(s);
  pool.push_back(make_kinked_singular(named(corpus.framed, "trefoil"), 3));
  pool.push_back(make_kinked_singular(named(corpus.framed, "unknot"), 4));
  for (const SingularFramedDiagram& s : pool) {
    expect(s.marked.size() <= 4, "oracle pool is meant for d <= 4");
    expect(alternating_sum<IntGroup>(sl, s) == recursive_alt_sum(sl, s),
           "enumeration paths disagree");
  }
}

void criterion_4_stabilization_grid(const Corpus& corpus) {
  const auto start = Clock::now();
  for (const std::string& name : {"unknot", "trefoil"}) {
    const OrientedFront& base = named(corpus.fronts, name);
    const long long tb = bennequin(base);
    const long long r = rotation_number(base);
    for (int i = 0; i <= 4; ++i) {
      for (int j = 0; i + j <= 4; ++j) {
        const OrientedFront s = stabilize(base, i, j);
        expect(bennequin(s) == tb - (i + j),
               name + " bennequin off at i=" + std::to_string(i) +
                   " j=" + std::to_string(j));
        expect(rotation_number(s) == r + (i - j),
               name + " rotation off at i=" + std::to_string(i) +
                   " j=" + std::to_string(j));
        if (i + j >= 1) {
          const std::string grid_name = name + "^" + std::to_string(i) + "," +
                                        std::to_string(j);
          const OrientedFront& bundled = named(corpus.fronts, grid_name);
          expect(bundled == s, grid_name + " drifted from stabilize()");
        }
      }
    }
  }
  check_budget(start, 1000.0);
}

void criterion_5_move_invariance(const Corpus& corpus) {
  for (const auto& [name, front] : corpus.fronts) {
    const long long tb = bennequin(front);
    const long long r = rotation_number(front);
    for (const auto& [move, site] : enumerate_moves(front)) {
      const OrientedFront moved = front_move(front, move, site);
      expect(bennequin(moved) == tb && rotation_number(moved) == r,
             std::string(front_move_name(move)) + " breaks invariants on " +
                 name);
    }
  }

  for (const auto& [name, fixture] : corpus.framed) {
    std::mt19937_64 rng(5);
    FramedDiagram k = fixture;
    const long long sl = self_linking(k);
    for (int step = 0; step < 50; ++step) {
      random_move(k, rng);
      expect(self_linking(k) == sl, "framed move drifts sl on " + name);
    }
  }

  for (const auto& [name, fixture] : corpus.framed) {
    std::mt19937_64 rng(6);
    FramedDiagram k = fixture;
    const long long parity = ((self_linking(k) % 2) + 2) % 2;
    for (int step = 0; step < 40; ++step) {
      const bool change = !k.diagram.visits.empty() && rng() % 4 == 0;
      if (change) {
        std::vector<int> ids;
        for (const Visit& v : k.diagram.visits) ids.push_back(v.crossing);
        const int target = ids[rng() % ids.size()];
        const long long before = self_linking(k);
        k = apply_event(k, make_crossing_change(k, target));
        const long long delta = self_linking(k) - before;
        expect(delta == 2 || delta == -2,
               "crossing change must move sl by exactly 2 on " + name);
      } else {
        random_move(k, rng);
      }
      expect(((self_linking(k) % 2) + 2) % 2 == parity,
             "sl parity broken on " + name);
    }
  }
}

void criterion_6_euler_realizability(const Corpus&) {
  for (const FGAbelianGroup& g :
       {FGAbelianGroup{{2}}, FGAbelianGroup{{4}}, FGAbelianGroup{{6}},
        FGAbelianGroup{{2, 4}}}) {
    const auto elements = all_elements(g);
    for (const GroupElement& e : elements) {
      bool direct = false;
      for (const GroupElement& x : elements) {
        if (group_equal(g, group_add(g, x, x), e)) {
          direct = true;
          break;
        }
      }
      expect(euler_realizable(e, g) == direct,
             "doubling-image disagreement on a finite group");
    }
  }
  const FGAbelianGroup z{{0}};
  for (long long e = -6; e <= 6; ++e) {
    expect(euler_realizable({e}, z) == (e % 2 == 0),
           "parity rule broken on the free group at " + std::to_string(e));
  }
}

void criterion_7_condition_star(const Corpus& corpus) {
  const auto verdict = [&](const std::string& name) {
    return condition_star(named(corpus.descriptors, name));
  };

  const StarVerdict s2 = verdict("s1xs2");
  expect(s2.status == StarStatus::Fails &&
             s2.rule == StarRule::InterpretationII &&
             star_rule_name(*s2.rule) == "interpretation-ii",
         "s1xs2 descriptor must fail via interpretation-ii");

  const StarVerdict t = verdict("tight");
  expect(t.status == StarStatus::Holds && t.rule == StarRule::Tight &&
             star_rule_name(*t.rule) == "tight",
         "tight descriptor must hold via tight");

  const StarVerdict tor = verdict("torsion");
  expect(tor.status == StarStatus::Holds && tor.rule == StarRule::Torsion &&
             star_rule_name(*tor.rule) == "torsion",
         "torsion descriptor must hold via torsion");

  const StarVerdict a = verdict("atoroidal");
  expect(a.status == StarStatus::Holds && a.rule == StarRule::Atoroidal &&
             star_rule_name(*a.rule) == "atoroidal",
         "atoroidal descriptor must hold via atoroidal");
}

void criterion_8_bundle_group(const Corpus&) {
  const auto start = Clock::now();
  const BundleAlphabet alphabet{3, {1, -1, 1}};
  std::mt19937_64 rng(8);
  const auto random_element = [&] {
    const long long k = static_cast<long long>(rng() % 7) - 3;
    return make_bundle_element(alphabet, k,
                               random_reduced_word(rng, alphabet.rank, 4));
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const BundleGroupElement a = random_element();
    const BundleGroupElement b = random_element();
    const BundleGroupElement c = random_element();
    expect(bundle_equal(bundle_mul(bundle_mul(a, b), c),
                        bundle_mul(a, bundle_mul(b, c))),
           "associativity failed");
    Word uv = a.w;
    uv.insert(uv.end(), b.w.begin(), b.w.end());
    expect(eps_of(alphabet, reduce(uv)) ==
               eps_of(alphabet, a.w) * eps_of(alphabet, b.w),
           "orientation character is not multiplicative");
  }

  int found = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Word gamma;
    do {
      gamma = random_reduced_word(rng, alphabet.rank, 3);
    } while (gamma.empty());
    const long long a_pow = 1 + static_cast<long long>(rng() % 3);
    const long long b_pow = 1 + static_cast<long long>(rng() % 3);
    const bool preserving = eps_of(alphabet, gamma) == 1;
    const long long c =
        preserving ? static_cast<long long>(rng() % 5) - 2 : 0;

    const BundleGroupElement alpha = bundle_pow(
        make_bundle_element(alphabet, 0, gamma), a_pow);
    const BundleGroupElement beta = bundle_mul(
        make_bundle_element(alphabet, c, {}),
        bundle_pow(make_bundle_element(alphabet, 0, gamma), b_pow));

    const TttOutcome outcome = check_toughandtechnical(alpha, beta, 6);
    expect(outcome.witness.has_value(), "no witness for a commuting pair");
    const TttWitness w = *outcome.witness;
    expect(w.n != 0, "witness exponent n must be nonzero");
    const BundleGroupElement lhs = bundle_pow(beta, w.n);
    const BundleGroupElement rhs =
        bundle_mul(bundle_pow(alpha, w.i),
                   make_bundle_element(alphabet, w.j, {}));
    expect(bundle_equal(lhs, rhs), "witness does not re-evaluate to equality");
    ++found;
  }
  expect(found == 100, "expected a witness for every seeded pair");
  check_budget(start, 5000.0);
}

void criterion_9_alpha_nu_and_delta(const Corpus& corpus) {
  std::mt19937_64 rng(9);
  const int rank = 3;
  for (int trial = 0; trial < 500; ++trial) {
    WordPair p{rank, random_reduced_word(rng, rank, 4),
               random_reduced_word(rng, rank, 4)};
    if (rng() % 4 == 0) p.d1.clear();
    const int value = alpha_nu(p);
    WordPair q = p;
    const int steps = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < steps; ++s) {
      if (rng() % 2 == 0) {
        std::swap(q.d1, q.d2);
      } else {
        int g = 1 + static_cast<int>(rng() % rank);
        const Word by{rng() % 2 == 0 ? g : -g};
        q.d1 = conjugate(q.d1, by);
        q.d2 = conjugate(q.d2, by);
      }
      expect(alpha_nu(q) == value, "alpha-nu moved under the group action");
    }
  }

  const MoveSequence& gamma4 = named(corpus.paths, "gamma4_loop");
  expect(delta_I_filtered(gamma4, alpha_nu_filter) == 0,
         "filtered functional must vanish on the gamma4-style loop");

  const MoveSequence& single = named(corpus.paths, "homotopy_single_crossing");
  const long long delta = delta_I(single);
  expect(delta == 1 || delta == -1,
         "single-crossing path must contribute exactly one signed passage");
}

struct Criterion {
  int number;
  std::string name;
  std::function<void(const Corpus&)> body;
};

}  // namespace

int main() {
  Corpus corpus;
  try {
    corpus = load_corpus(default_corpus_dir());
  } catch (const std::exception& e) {
    std::cout << "[FAIL] corpus: " << e.what() << '\n';
    return 1;
  }

  const std::vector<Criterion> criteria = {
      {1, "extension coefficients", criterion_1_extension_coefficients},
      {2, "ladder round trip", criterion_2_roundtrip},
      {3, "order test by brute force", criterion_3_order_test},
      {4, "stabilization grid", criterion_4_stabilization_grid},
      {5, "move invariance", criterion_5_move_invariance},
      {6, "euler realizability", criterion_6_euler_realizability},
      {7, "condition star verdicts", criterion_7_condition_star},
      {8, "bundle group and witnesses", criterion_8_bundle_group},
      {9, "loop classifier and path functionals", criterion_9_alpha_nu_and_delta},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    try {
      c.body(corpus);
      std::ostringstream line;
      line << "[PASS] " << c.number << ". " << c.name << " ("
           << elapsed_ms(start) << " ms)";
      std::cout << line.str() << '\n';
    } catch (const std::exception& e) {
      std::cout << "[FAIL] " << c.number << ". " << c.name << ": " << e.what()
                << '\n';
      ++failures;
    }
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " acceptance criteria passed\n";
  return failures;
}
