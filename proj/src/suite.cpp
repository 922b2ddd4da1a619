#include "knotcalc/suite.hpp"

#include <cctype>
#include <functional>
#include <random>
#include <sstream>

#include "knotcalc/json_io.hpp"

namespace knotcalc {

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& message) {
  if (!ok) throw CheckFailure(message);
}

void run_check(RunReport& report, const std::string& name,
               const std::string& citation,
               const std::function<std::string()>& body) {
  CheckResult result{name, "pass", citation, ""};
  try {
    result.detail = body();
  } catch (const std::exception& e) {
    result.status = "fail";
    result.detail = e.what();
  }
  report.checks.push_back(std::move(result));
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

Word random_reduced_word(std::mt19937_64& rng, int rank, int max_len) {
  Word w;
  const int len = 1 + static_cast<int>(pick(rng, max_len));
  for (int i = 0; i < len; ++i) {
    const int g = 1 + static_cast<int>(pick(rng, rank));
    w.push_back(pick(rng, 2) == 0 ? g : -g);
  }
  return reduce(w);
}

// Independent enumeration of the signed resolution sum of self_linking:
// descending-id odometer, passes and writhe recomputed in place.
long long oracle_alt_sum_sl(const SingularFramedDiagram& s) {
  std::vector<int> ids(s.marked.rbegin(), s.marked.rend());
  std::vector<int> eps(ids.size(), 1);
  long long total = 0;
  while (true) {
    KnotDiagram d = s.diagram;
    for (std::size_t m = 0; m < ids.size(); ++m) {
      bool seen = false;
      for (Visit& v : d.visits) {
        if (v.crossing != ids[m]) continue;
        if (!seen) {
          v.pass = eps[m] > 0 ? Pass::Over : Pass::Under;
          seen = true;
        } else {
          v.pass = eps[m] > 0 ? Pass::Under : Pass::Over;
        }
        v.sign = eps[m];
      }
    }
    long long w = 0;
    for (const Visit& v : d.visits) w += v.sign;
    int sgn = 1;
    for (int e : eps) sgn *= e;
    total += sgn * (w / 2 + s.offset);
    std::size_t i = 0;
    for (; i < eps.size(); ++i) {
      if (eps[i] == 1) {
        eps[i] = -1;
        break;
      }
      eps[i] = 1;
    }
    if (i == eps.size()) break;
  }
  return total;
}

std::string counted(std::size_t n, const std::string& unit) {
  return std::to_string(n) + " " + unit;
}

}  // namespace

bool RunReport::all_passed() const {
  for (const CheckResult& c : checks) {
    if (c.status == "fail") return false;
  }
  return true;
}

RunReport run_suite(const Corpus& corpus, std::uint64_t seed) {
  RunReport report;

  run_check(report, "front move invariance", "fronts.move-invariance", [&] {
    std::size_t sites = 0;
    for (const auto& [name, front] : corpus.fronts) {
      const FrontSummary base = analyze(front).summary;
      for (const auto& [move, site] : enumerate_moves(front)) {
        const FrontSummary after =
            analyze(front_move(front, move, site)).summary;
        expect(after.rotation == base.rotation &&
                   after.bennequin == base.bennequin,
               name + ": " + front_move_name(move) + " at event " +
                   std::to_string(site.index) + " changed the invariants");
        ++sites;
      }
    }
    return counted(corpus.fronts.size(), "fronts") + ", " +
           counted(sites, "applicable sites");
  });

  run_check(report, "stabilization composition",
            "fronts.stabilize-composition", [&] {
              const std::vector<std::pair<int, int>> steps = {
                  {1, 0}, {0, 1}, {2, 1}};
              std::size_t cases = 0;
              for (const auto& [name, front] : corpus.fronts) {
                if (front.word.events.size() > 10) continue;
                for (const auto& [i, j] : steps) {
                  for (const auto& [i2, j2] : steps) {
                    const FrontSummary once =
                        analyze(stabilize(front, i + i2, j + j2)).summary;
                    const FrontSummary twice =
                        analyze(stabilize(stabilize(front, i, j), i2, j2))
                            .summary;
                    expect(once.rotation == twice.rotation &&
                               once.bennequin == twice.bennequin,
                           name + ": composition mismatch");
                    ++cases;
                  }
                }
              }
              return counted(cases, "compositions");
            });

  run_check(report, "orientation reversal", "fronts.reversal", [&] {
    for (const auto& [name, front] : corpus.fronts) {
      const FrontSummary fwd = analyze(front).summary;
      const FrontSummary rev = analyze(reversed(front)).summary;
      expect(rev.rotation == -fwd.rotation, name + ": rotation not negated");
      expect(rev.bennequin == fwd.bennequin, name + ": bennequin changed");
    }
    return counted(corpus.fronts.size(), "fronts");
  });

  run_check(report, "front smoothing consistency", "fronts.smoothing", [&] {
    for (const auto& [name, front] : corpus.fronts) {
      expect(bennequin(front) == self_linking(front_to_framed(front)),
             name + ": smoothed self-linking disagrees");
    }
    return counted(corpus.fronts.size(), "fronts");
  });

  run_check(report, "cusp and rotation parity", "fronts.parity", [&] {
    for (const auto& [name, front] : corpus.fronts) {
      const FrontAnalysis a = analyze(front);
      expect(a.summary.cusp_count % 2 == 0, name + ": odd cusp count");
      expect((a.down_cusps - a.up_cusps) % 2 == 0,
             name + ": fractional rotation number");
    }
    return counted(corpus.fronts.size(), "fronts");
  });

  run_check(report, "framed move invariance", "framed.move-invariance", [&] {
    std::mt19937_64 rng(seed + 6);
    std::size_t moves = 0;
    for (const auto& [name, fixture] : corpus.framed) {
      FramedDiagram k = fixture;
      const long long sl = self_linking(k);
      for (int step = 0; step < 50; ++step) {
        random_move(k, rng);
        expect(self_linking(k) == sl,
               name + ": self-linking drifted at step " +
                   std::to_string(step));
        ++moves;
      }
    }
    return counted(moves, "moves over " +
                              counted(corpus.framed.size(), "fixtures"));
  });

  run_check(report, "crossing change parity", "framed.crossing-parity", [&] {
    std::mt19937_64 rng(seed + 7);
    std::size_t changes = 0;
    for (const auto& [name, fixture] : corpus.framed) {
      FramedDiagram k = fixture;
      const long long sl = self_linking(k);
      for (int step = 0; step < 40; ++step) {
        if (!k.diagram.visits.empty() && pick(rng, 4) == 0) {
          const long long before = self_linking(k);
          const Visit& v =
              k.diagram.visits[pick(rng, k.diagram.visits.size())];
          k = apply_event(k, make_crossing_change(k, v.crossing));
          const long long after = self_linking(k);
          expect(after - before == 2 || after - before == -2,
                 name + ": crossing change moved self-linking by " +
                     std::to_string(after - before));
          ++changes;
        } else {
          random_move(k, rng);
        }
        expect((self_linking(k) - sl) % 2 == 0,
               name + ": parity broken at step " + std::to_string(step));
      }
    }
    return counted(changes, "crossing changes");
  });

  run_check(report, "obstruction additivity", "framed.obstruction-additivity",
            [&] {
              for (const auto& [name, k] : corpus.framed) {
                for (long long a : {2LL, 1LL, -3LL}) {
                  const FramedDiagram k2 = shift_framing(k, a);
                  const FramedDiagram k3 = shift_framing(k, -4);
                  expect(framing_obstruction(k, k3) ==
                             framing_obstruction(k, k2) +
                                 framing_obstruction(k2, k3),
                         name + ": additivity fails through shift " +
                             std::to_string(a));
                }
              }
              return counted(corpus.framed.size() * 3, "triples");
            });

  run_check(report, "path functional additivity", "framed.delta-additivity",
            [&] {
              std::size_t cases = 0;
              for (const auto& [name, path] : corpus.paths) {
                const long long delta = delta_I(path);
                const MoveSequence back = reversed(path);
                expect(delta_I(back) == -delta, name + ": reversal sign");
                expect(delta_I(concat(path, back)) == 0,
                       name + ": round trip not null");
                ++cases;
              }
              std::mt19937_64 rng(seed + 9);
              for (const auto& [name, fixture] : corpus.framed) {
                MoveSequence a{fixture, {}};
                FramedDiagram state = fixture;
                OffsetTradeInsert kink;
                kink.at = pick(rng, state.diagram.visits.size() + 1);
                kink.sign = pick(rng, 2) == 0 ? 1 : -1;
                state = apply_event(state, kink);
                a.events.emplace_back(kink);
                const int id = max_crossing_id(state.diagram);
                CrossingChange flip = make_crossing_change(state, id);
                state = apply_event(state, flip);
                a.events.emplace_back(flip);
                MoveSequence b{state, {}};
                CrossingChange flop = make_crossing_change(state, id);
                b.events.emplace_back(flop);
                expect(delta_I(concat(a, b)) == delta_I(a) + delta_I(b),
                       name + ": concatenation sum");
                ++cases;
              }
              return counted(cases, "paths");
            });

  run_check(report, "alternating sum oracle", "vassiliev.oracle-equivalence",
            [&] {
              std::vector<std::pair<std::string, SingularFramedDiagram>>
                  pool = corpus.singulars;
              for (const auto& [name, k] : corpus.framed) {
                if (pool.size() > corpus.singulars.size() + 6) break;
                pool.emplace_back(name + "+kinks3", make_kinked_singular(k, 3));
                pool.emplace_back(name + "+kinks4", make_kinked_singular(k, 4));
              }
              const InvariantFn<IntGroup> sl = sl_invariant();
              std::size_t checked = 0;
              for (const auto& [name, s] : pool) {
                if (s.marked.size() > 4) continue;
                expect(alternating_sum<IntGroup>(sl, s) ==
                           oracle_alt_sum_sl(s),
                       name + ": enumeration paths disagree");
                ++checked;
              }
              return counted(checked, "singular diagrams");
            });

  run_check(report, "binomial fixed point", "vassiliev.binomial-identity",
            [&] {
              for (int n = 1; n <= 5; ++n) {
                long long sum = 0;
                for (int i = 1; i <= n + 1; ++i) {
                  sum += (i % 2 == 1 ? 1 : -1) * binomial(n + 1, i);
                }
                expect(sum == 1, "coefficient sum at order " +
                                     std::to_string(n));
                InvariantLadder<IntGroup> ladder;
                ladder.knot_label = "constant";
                ladder.cutoff = 0;
                for (long long r = -2 * (n + 1); r <= 0; r += 2) {
                  ladder.values[r] = 7;
                }
                const auto extended = extend_invariant<IntGroup>(ladder, n);
                expect(extended.values.at(2) == 7,
                       "constant not reproduced at order " +
                           std::to_string(n));
              }
              return "orders 1..5";
            });

  run_check(report, "polynomial degree law", "vassiliev.degree-law", [&] {
    const FramedDiagram base = corpus.framed.empty()
                                   ? FramedDiagram{}
                                   : corpus.framed.front().second;
    std::size_t cases = 0;
    for (int n = 1; n <= 3; ++n) {
      std::vector<long long> coeffs(n + 1, 0);
      coeffs[0] = 3;
      coeffs[n] = 2;
      if (n >= 2) coeffs[1] = -1;
      const InvariantFn<IntGroup> x = sl_polynomial(coeffs);
      InvariantLadder<IntGroup> ladder;
      ladder.knot_label = "poly";
      ladder.cutoff = 0;
      for (long long r = -2 * (n + 2); r <= 0; r += 2) {
        ladder.values[r] = x(shift_framing(base, r));
      }
      const auto extended = extend_invariant<IntGroup>(ladder, n, 4);
      for (const auto& [r, v] : extended.values) {
        expect(v == x(shift_framing(base, r)),
               "degree " + std::to_string(n) + " not a fixed point at rung " +
                   std::to_string(r));
      }
      expect(verify_main_identity<IntGroup>(extended, n),
             "degree " + std::to_string(n) + " fails its own order");

      std::vector<long long> higher(n + 2, 0);
      higher[n + 1] = 1;
      const InvariantFn<IntGroup> y = sl_polynomial(higher);
      InvariantLadder<IntGroup> over;
      over.knot_label = "poly-over";
      over.cutoff = 0;
      for (long long r = -2 * (n + 2); r <= 0; r += 2) {
        over.values[r] = y(shift_framing(base, r));
      }
      expect(!verify_main_identity<IntGroup>(over, n),
             "degree " + std::to_string(n + 1) +
                 " passes order " + std::to_string(n));
      ++cases;
    }
    return counted(cases, "orders");
  });

  run_check(report, "kinked alternating identity", "vassiliev.kinked-identity",
            [&] {
              std::size_t cases = 0;
              for (const auto& [name, k] : corpus.framed) {
                for (int n = 1; n <= 2; ++n) {
                  std::vector<long long> coeffs(n + 1, 1);
                  coeffs[0] = -2;
                  const InvariantFn<IntGroup> x = sl_polynomial(coeffs);
                  InvariantLadder<IntGroup> ladder;
                  ladder.knot_label = name;
                  ladder.cutoff = 0;
                  for (long long r = -2 * (n + 1); r <= 0; r += 2) {
                    ladder.values[r] = x(shift_framing(k, r));
                  }
                  long long combo = 0;
                  for (int i = 0; i <= n + 1; ++i) {
                    combo += (i % 2 == 0 ? 1 : -1) * binomial(n + 1, i) *
                             ladder.values.at(-2 * i);
                  }
                  const long long alt = alternating_sum<IntGroup>(
                      x, make_kinked_singular(k, n + 1));
                  expect(alt == combo,
                         name + ": kinked sum differs from ladder combination");
                  if (verify_main_identity<IntGroup>(ladder, n)) {
                    expect(alt == 0, name + ": identity sum nonzero");
                  }
                  ++cases;
                }
              }
              return counted(cases, "ladders");
            });

  run_check(report, "order filtration monotone", "vassiliev.filtration", [&] {
    const std::vector<std::pair<InvariantFn<IntGroup>, int>> graded = {
        {constant_invariant(7), 0}, {sl_invariant(), 1}};
    for (const auto& [x, n] : graded) {
      std::vector<SingularFramedDiagram> at_n;
      std::vector<SingularFramedDiagram> at_next;
      for (const auto& [name, k] : corpus.framed) {
        at_n.push_back(make_kinked_singular(k, n + 1));
        at_next.push_back(make_kinked_singular(k, n + 2));
      }
      expect(is_order_at_most<IntGroup>(x, n, at_n),
             "expected order " + std::to_string(n));
      expect(is_order_at_most<IntGroup>(x, n + 1, at_next),
             "filtration not monotone from order " + std::to_string(n));
    }
    return counted(2 * corpus.framed.size(), "singular diagrams");
  });

  run_check(report, "euler doubling agreement", "topology.euler-doubling",
            [&] {
              const std::vector<FGAbelianGroup> groups = {
                  {{2}}, {{4}}, {{6}}, {{2, 4}}, {{3}}, {{0, 2}}};
              std::size_t cases = 0;
              for (const FGAbelianGroup& g : groups) {
                bool finite = true;
                for (long long m : g.factors) finite = finite && m != 0;
                if (!finite) continue;
                const std::vector<GroupElement> all = all_elements(g);
                for (const GroupElement& e : all) {
                  bool brute = false;
                  for (const GroupElement& x : all) {
                    brute = brute || group_equal(g, group_add(g, x, x), e);
                  }
                  expect(euler_realizable(e, g) == brute,
                         "rule disagrees with brute force");
                  expect(euler_realizable(group_add(g, e, e), g),
                         "double not realizable");
                  ++cases;
                }
              }
              const FGAbelianGroup zz2{{0, 2}};
              expect(euler_realizable({4, 0}, zz2) &&
                         !euler_realizable({3, 0}, zz2) &&
                         !euler_realizable({2, 1}, zz2),
                     "free-coordinate parity rule");
              return counted(cases, "elements");
            });

  run_check(report, "bundle group laws", "topology.bundle-laws", [&] {
    std::mt19937_64 rng(seed + 16);
    const BundleAlphabet alphabet{3, {1, -1, 1}};
    auto random_element = [&] {
      const long long k = static_cast<long long>(pick(rng, 7)) - 3;
      Word w;
      const int len = static_cast<int>(pick(rng, 5));
      for (int i = 0; i < len; ++i) {
        const int g = 1 + static_cast<int>(pick(rng, alphabet.rank));
        w.push_back(pick(rng, 2) == 0 ? g : -g);
      }
      return make_bundle_element(alphabet, k, w);
    };
    const BundleGroupElement e = bundle_identity(alphabet);
    const BundleGroupElement fiber = make_bundle_element(alphabet, 1, {});
    for (int t = 0; t < 1000; ++t) {
      const BundleGroupElement a = random_element();
      const BundleGroupElement b = random_element();
      const BundleGroupElement c = random_element();
      expect(bundle_equal(bundle_mul(bundle_mul(a, b), c),
                          bundle_mul(a, bundle_mul(b, c))),
             "associativity");
      expect(bundle_equal(bundle_mul(a, e), a) &&
                 bundle_equal(bundle_mul(e, a), a),
             "identity");
      Word uv = a.w;
      uv.insert(uv.end(), b.w.begin(), b.w.end());
      expect(eps_of(alphabet, reduce(uv)) ==
                 eps_of(alphabet, a.w) * eps_of(alphabet, b.w),
             "character not multiplicative");
      const BundleGroupElement left =
          bundle_mul(make_bundle_element(alphabet, 0, a.w), fiber);
      expect(left.k == eps_of(alphabet, a.w) && left.w == a.w,
             "fiber conjugation law");
    }
    return "1000 triples";
  });

  run_check(report, "star rule exclusivity", "topology.star-exclusivity", [&] {
    for (const auto& [name, d] : corpus.descriptors) {
      const StarVerdict v = condition_star(d);
      expect(v.status != StarStatus::Fails || !d.flags.tight.value_or(false),
             name + ": fails on a tight descriptor");
    }
    ManifoldDescriptor conflicted;
    conflicted.h2.factors = {0};
    conflicted.euler = {2};
    conflicted.flags.tight = true;
    conflicted.tori.push_back(TorusRecord{{1}, true, 2});
    bool raised = false;
    try {
      condition_star(conflicted);
    } catch (const DomainError& e) {
      raised = e.code() == Errc::InconsistentDescriptor;
    }
    expect(raised, "conflicting descriptor not rejected");
    return counted(corpus.descriptors.size(), "descriptors") +
           ", 1 conflict rejected";
  });

  run_check(report, "loop classifier invariance", "topology.alpha-nu-invariance",
            [&] {
              std::mt19937_64 rng(seed + 18);
              const int rank = 3;
              std::size_t cases = 0;
              for (int t = 0; t < 200; ++t) {
                WordPair p{rank, random_reduced_word(rng, rank, 4),
                           random_reduced_word(rng, rank, 4)};
                if (pick(rng, 4) == 0) p.d1 = {};
                const int value = alpha_nu(p);
                for (int step = 0; step < 3; ++step) {
                  const int g = 1 + static_cast<int>(pick(rng, rank));
                  const Word by = {pick(rng, 2) == 0 ? g : -g};
                  p = WordPair{rank, conjugate(p.d1, by),
                               conjugate(p.d2, by)};
                  expect(alpha_nu(p) == value, "conjugation changed the class");
                  std::swap(p.d1, p.d2);
                  expect(alpha_nu(p) == value, "swap changed the class");
                  ++cases;
                }
              }
              return counted(cases, "orbit steps");
            });

  run_check(report, "commuting pair witnesses", "topology.ttt-witness", [&] {
    std::mt19937_64 rng(seed + 19);
    const BundleAlphabet alphabet{2, {1, -1}};
    const BundleGroupElement fiber = make_bundle_element(alphabet, 1, {});
    std::size_t found = 0;
    for (int t = 0; t < 100; ++t) {
      const Word gamma = random_reduced_word(rng, alphabet.rank, 3);
      if (gamma.empty()) continue;
      const int a = 1 + static_cast<int>(pick(rng, 3));
      const int b = 1 + static_cast<int>(pick(rng, 3));
      Word wa, wb;
      for (int i = 0; i < a; ++i) wa.insert(wa.end(), gamma.begin(), gamma.end());
      for (int i = 0; i < b; ++i) wb.insert(wb.end(), gamma.begin(), gamma.end());
      const BundleGroupElement alpha = make_bundle_element(alphabet, 0, wa);
      long long c = 0;
      if (eps_of(alphabet, gamma) == 1) {
        c = static_cast<long long>(pick(rng, 5)) - 2;
      }
      const BundleGroupElement beta = make_bundle_element(alphabet, c, wb);
      const TttOutcome outcome = check_toughandtechnical(alpha, beta, 6);
      expect(outcome.witness.has_value(), "no witness within bound");
      const TttWitness w = *outcome.witness;
      expect(w.n != 0, "degenerate witness");
      expect(bundle_equal(bundle_pow(beta, w.n),
                          bundle_mul(bundle_pow(alpha, w.i),
                                     bundle_pow(fiber, w.j))),
             "witness fails re-evaluation");
      ++found;
    }
    expect(found >= 80, "too few usable pairs");
    return counted(found, "verified witnesses");
  });

  run_check(report, "json roundtrip", "cli.json-roundtrip", [&] {
    std::size_t cases = 0;
    for (const auto& [name, front] : corpus.fronts) {
      const Json j = front_to_json(front);
      expect(front_from_json(parse_json_text(j.dump())) == front,
             name + ": front roundtrip");
      ++cases;
    }
    for (const auto& [name, k] : corpus.framed) {
      expect(framed_from_json(parse_json_text(framed_to_json(k).dump())) == k,
             name + ": framed roundtrip");
      ++cases;
    }
    for (const auto& [name, path] : corpus.paths) {
      expect(sequence_from_json(
                 parse_json_text(sequence_to_json(path).dump())) == path,
             name + ": path roundtrip");
      ++cases;
    }
    for (const auto& [name, s] : corpus.singulars) {
      expect(singular_from_json(
                 parse_json_text(singular_to_json(s).dump())) == s,
             name + ": singular roundtrip");
      ++cases;
    }
    for (const auto& [name, ladder] : corpus.ladders) {
      const auto back =
          ladder_from_json(parse_json_text(ladder_to_json(ladder).dump()));
      expect(back.knot_label == ladder.knot_label &&
                 back.cutoff == ladder.cutoff && back.values == ladder.values,
             name + ": ladder roundtrip");
      ++cases;
    }
    for (const auto& [name, d] : corpus.descriptors) {
      expect(descriptor_from_json(
                 parse_json_text(descriptor_to_json(d).dump())) == d,
             name + ": descriptor roundtrip");
      ++cases;
    }
    return counted(cases, "fixtures");
  });

  return report;
}

std::string report_text(const RunReport& report) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const CheckResult& c : report.checks) {
    std::string status = c.status;
    for (char& ch : status) ch = std::toupper(static_cast<unsigned char>(ch));
    out << "[" << status << "] " << c.citation << ": " << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
    if (c.status == "pass") ++passed;
  }
  out << passed << "/" << report.checks.size() << " checks passed\n";
  return out.str();
}

std::string report_json(const RunReport& report) {
  std::ostringstream out;
  for (const CheckResult& c : report.checks) {
    Json j;
    j["name"] = c.name;
    j["status"] = c.status;
    j["citation"] = c.citation;
    j["detail"] = c.detail;
    out << j.dump() << '\n';
  }
  return out.str();
}

}  // namespace knotcalc
