#include "knotcalc/topology.hpp"

#include <algorithm>
#include <cstdlib>

namespace knotcalc {

namespace {

void check_dimension(const FGAbelianGroup& g, const GroupElement& e) {
  if (e.size() != g.factors.size()) {
    throw DomainError(Errc::DimensionMismatch,
                      "element has " + std::to_string(e.size()) +
                          " coordinates, group has " +
                          std::to_string(g.factors.size()));
  }
}

}  // namespace

void validate(const FGAbelianGroup& g) {
  for (long long m : g.factors) {
    if (m < 0) {
      throw DomainError(Errc::DimensionMismatch,
                        "invariant factors must be nonnegative");
    }
  }
}

GroupElement normalize(const FGAbelianGroup& g, const GroupElement& e) {
  validate(g);
  check_dimension(g, e);
  GroupElement out = e;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const long long m = g.factors[i];
    if (m > 0) out[i] = ((out[i] % m) + m) % m;
  }
  return out;
}

GroupElement group_add(const FGAbelianGroup& g, const GroupElement& a,
                       const GroupElement& b) {
  check_dimension(g, a);
  check_dimension(g, b);
  GroupElement out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return normalize(g, out);
}

bool group_equal(const FGAbelianGroup& g, const GroupElement& a,
                 const GroupElement& b) {
  return normalize(g, a) == normalize(g, b);
}

std::vector<GroupElement> all_elements(const FGAbelianGroup& g) {
  validate(g);
  for (long long m : g.factors) {
    if (m == 0) {
      throw DomainError(Errc::DimensionMismatch,
                        "cannot enumerate an infinite group");
    }
  }
  std::vector<GroupElement> out;
  GroupElement cur(g.factors.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    for (; i < cur.size(); ++i) {
      if (++cur[i] < g.factors[i]) break;
      cur[i] = 0;
    }
    if (i == cur.size()) break;
  }
  return out;
}

bool euler_realizable(const GroupElement& e, const FGAbelianGroup& h2) {
  GroupElement r = normalize(h2, e);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const long long m = h2.factors[i];
    // 2x = r[i] in Z needs r[i] even; 2x = r[i] mod m is solvable iff m is
    // odd (2 is then a unit) or r[i] is even.
    if (m == 0) {
      if (r[i] % 2 != 0) return false;
    } else if (m % 2 == 0 && r[i] % 2 != 0) {
      return false;
    }
  }
  return true;
}

void validate(const ManifoldDescriptor& d) {
  validate(d.h2);
  check_dimension(d.h2, d.euler);
  for (const TorusRecord& t : d.tori) check_dimension(d.h2, t.cls);
  if (d.h2.factors == std::vector<long long>{0}) {
    for (const TorusRecord& t : d.tori) {
      if (t.pairing != d.euler[0] * t.cls[0]) {
        throw DomainError(Errc::InconsistentDescriptor,
                          "torus pairing " + std::to_string(t.pairing) +
                              " does not match euler evaluation " +
                              std::to_string(d.euler[0] * t.cls[0]));
      }
    }
  }
}

std::string star_rule_name(StarRule rule) {
  switch (rule) {
    case StarRule::InterpretationII:
      return "interpretation-ii";
    case StarRule::Tight:
      return "tight";
    case StarRule::Torsion:
      return "torsion";
    case StarRule::Atoroidal:
      return "atoroidal";
    case StarRule::Parallelizable:
      return "parallelizable";
  }
  return "unknown";
}

StarVerdict condition_star(const ManifoldDescriptor& d) {
  validate(d);

  const TorusRecord* witness = nullptr;
  for (const TorusRecord& t : d.tori) {
    if (t.realizable_by_curve_component && t.pairing != 0) {
      witness = &t;
      break;
    }
  }

  std::optional<StarRule> holds;
  std::string holds_detail;
  GroupElement euler = normalize(d.h2, d.euler);
  bool torsion = true;
  for (std::size_t i = 0; i < euler.size(); ++i) {
    if (d.h2.factors[i] == 0 && euler[i] != 0) torsion = false;
  }
  if (d.flags.tight.value_or(false)) {
    holds = StarRule::Tight;
    holds_detail = "tight contact structure";
  } else if (torsion) {
    holds = StarRule::Torsion;
    holds_detail = "euler class has finite order";
  } else if (d.flags.pi2_zero.value_or(false) &&
             d.flags.no_injective_torus.value_or(false)) {
    holds = StarRule::Atoroidal;
    holds_detail = "aspherical and atoroidal";
  } else if (d.flags.parallelizable_contact.value_or(false)) {
    holds = StarRule::Parallelizable;
    holds_detail = "parallelizable contact structure";
  }

  if (witness && holds) {
    throw DomainError(Errc::InconsistentDescriptor,
                      "realizable torus with nonzero pairing alongside rule " +
                          star_rule_name(*holds));
  }
  if (witness) {
    return StarVerdict{StarStatus::Fails, StarRule::InterpretationII,
                       "realizable torus with pairing " +
                           std::to_string(witness->pairing)};
  }
  if (holds) {
    return StarVerdict{StarStatus::Holds, holds, holds_detail};
  }
  return StarVerdict{StarStatus::Unknown, std::nullopt,
                     "no rule applies to the declared facts"};
}

void validate(const BundleAlphabet& alphabet) {
  if (alphabet.rank < 0 ||
      alphabet.eps.size() != static_cast<std::size_t>(alphabet.rank)) {
    throw DomainError(Errc::AlphabetMismatch,
                      "character table must list one value per generator");
  }
  for (int e : alphabet.eps) {
    if (e != 1 && e != -1) {
      throw DomainError(Errc::AlphabetMismatch,
                        "orientation character values must be +1 or -1");
    }
  }
}

BundleGroupElement bundle_identity(const BundleAlphabet& alphabet) {
  validate(alphabet);
  return BundleGroupElement{alphabet, 0, {}};
}

BundleGroupElement make_bundle_element(const BundleAlphabet& alphabet,
                                       long long k, const Word& w) {
  validate(alphabet);
  for (int letter : w) {
    if (letter == 0 || std::abs(letter) > alphabet.rank) {
      throw DomainError(Errc::AlphabetMismatch,
                        "letter " + std::to_string(letter) +
                            " outside alphabet of rank " +
                            std::to_string(alphabet.rank));
    }
  }
  return BundleGroupElement{alphabet, k, reduce(w)};
}

int eps_of(const BundleAlphabet& alphabet, int letter) {
  const int g = std::abs(letter);
  if (g == 0 || g > alphabet.rank) {
    throw DomainError(Errc::AlphabetMismatch,
                      "letter " + std::to_string(letter) +
                          " outside alphabet of rank " +
                          std::to_string(alphabet.rank));
  }
  return alphabet.eps[g - 1];
}

int eps_of(const BundleAlphabet& alphabet, const Word& w) {
  int out = 1;
  for (int letter : w) out *= eps_of(alphabet, letter);
  return out;
}

BundleGroupElement bundle_mul(const BundleGroupElement& a,
                              const BundleGroupElement& b) {
  if (a.alphabet != b.alphabet) {
    throw DomainError(Errc::AlphabetMismatch,
                      "operands use different alphabets");
  }
  Word w = a.w;
  w.insert(w.end(), b.w.begin(), b.w.end());
  return make_bundle_element(a.alphabet, a.k + eps_of(a.alphabet, a.w) * b.k,
                             w);
}

BundleGroupElement bundle_inverse(const BundleGroupElement& a) {
  return make_bundle_element(a.alphabet, -eps_of(a.alphabet, a.w) * a.k,
                             inverse_word(a.w));
}

BundleGroupElement bundle_pow(const BundleGroupElement& a, long long n) {
  BundleGroupElement base = n < 0 ? bundle_inverse(a) : a;
  BundleGroupElement out = bundle_identity(a.alphabet);
  for (long long i = 0; i < std::abs(n); ++i) out = bundle_mul(out, base);
  return out;
}

bool bundle_equal(const BundleGroupElement& a, const BundleGroupElement& b) {
  if (a.alphabet != b.alphabet) {
    throw DomainError(Errc::AlphabetMismatch,
                      "operands use different alphabets");
  }
  return a.k == b.k && reduce(a.w) == reduce(b.w);
}

TttOutcome check_toughandtechnical(const BundleGroupElement& alpha,
                                   const BundleGroupElement& beta,
                                   int bound) {
  BundleGroupElement a = make_bundle_element(alpha.alphabet, alpha.k, alpha.w);
  BundleGroupElement b = make_bundle_element(beta.alphabet, beta.k, beta.w);
  if (a.w.empty()) {
    throw DomainError(Errc::MoveNotApplicable,
                      "base word of alpha must be nontrivial");
  }
  if (!bundle_equal(bundle_mul(a, b), bundle_mul(b, a))) {
    throw DomainError(Errc::NotCommuting, "alpha and beta do not commute");
  }
  for (int mag_n = 1; mag_n <= bound; ++mag_n) {
    for (int n : {mag_n, -mag_n}) {
      const BundleGroupElement bn = bundle_pow(b, n);
      for (int mag_i = 0; mag_i <= bound; ++mag_i) {
        for (int i : {mag_i, -mag_i}) {
          const BundleGroupElement ai = bundle_pow(a, i);
          if (ai.w == bn.w) {
            // beta^n = alpha^i f^j forces j once the base words agree.
            const long long j = eps_of(a.alphabet, ai.w) * (bn.k - ai.k);
            return TttOutcome{TttWitness{n, i, j}, bound};
          }
          if (mag_i == 0) break;
        }
      }
    }
  }
  return TttOutcome{std::nullopt, bound};
}

void validate(const WordPair& p) {
  if (p.rank < 0) {
    throw DomainError(Errc::AlphabetMismatch, "rank must be nonnegative");
  }
  for (const Word* w : {&p.d1, &p.d2}) {
    for (int letter : *w) {
      if (letter == 0 || std::abs(letter) > p.rank) {
        throw DomainError(Errc::AlphabetMismatch,
                          "letter " + std::to_string(letter) +
                              " outside free group of rank " +
                              std::to_string(p.rank));
      }
    }
  }
}

int alpha_nu(const WordPair& p) {
  validate(p);
  return reduce(p.d1).empty() || reduce(p.d2).empty() ? 0 : 1;
}

namespace {

// All freely reduced words of length <= bound, shortest first.
std::vector<Word> reduced_words_up_to(int rank, int bound) {
  std::vector<Word> out = {Word{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= bound; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int g = 1; g <= rank; ++g) {
        for (int letter : {g, -g}) {
          if (!out[i].empty() && out[i].back() == -letter) continue;
          Word next = out[i];
          next.push_back(letter);
          out.push_back(std::move(next));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace

NuVerdict nu_equivalent(const WordPair& p, const WordPair& q, int bound) {
  validate(p);
  validate(q);
  if (p.rank != q.rank) {
    throw DomainError(Errc::AlphabetMismatch, "pairs have different ranks");
  }
  const Word p1 = reduce(p.d1);
  const Word p2 = reduce(p.d2);
  const Word q1 = reduce(q.d1);
  const Word q2 = reduce(q.d2);

  std::vector<Word> pc = {canonical_cyclic(p1), canonical_cyclic(p2)};
  std::vector<Word> qc = {canonical_cyclic(q1), canonical_cyclic(q2)};
  std::sort(pc.begin(), pc.end());
  std::sort(qc.begin(), qc.end());
  if (pc != qc) return NuVerdict::Distinct;

  for (const Word& c : reduced_words_up_to(p.rank, bound)) {
    const Word c1 = conjugate(p1, c);
    const Word c2 = conjugate(p2, c);
    if ((c1 == q1 && c2 == q2) || (c1 == q2 && c2 == q1)) {
      return NuVerdict::Equal;
    }
  }
  return NuVerdict::UnknownAtBound;
}

int alpha_nu_filter(const SingularFramedDiagram& s) {
  if (!s.loops) return 1;
  return alpha_nu(WordPair{s.loops->rank, s.loops->first, s.loops->second});
}

}  // namespace knotcalc
