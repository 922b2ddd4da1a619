#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotcalc/errors.hpp"
#include "knotcalc/framed.hpp"
#include "knotcalc/words.hpp"

namespace knotcalc {

// Finitely generated abelian group as invariant factors; factor 0 encodes an
// infinite cyclic summand, factor m > 0 a Z/m summand.
struct FGAbelianGroup {
  std::vector<long long> factors;

  bool operator==(const FGAbelianGroup&) const = default;
};

using GroupElement = std::vector<long long>;

void validate(const FGAbelianGroup& g);

// Coordinatewise reduction into [0, m) on finite factors; DimensionMismatch
// unless the element length matches the factor list.
GroupElement normalize(const FGAbelianGroup& g, const GroupElement& e);

GroupElement group_add(const FGAbelianGroup& g, const GroupElement& a,
                       const GroupElement& b);

bool group_equal(const FGAbelianGroup& g, const GroupElement& a,
                 const GroupElement& b);

// Every element of a finite group; DimensionMismatch on an infinite factor.
std::vector<GroupElement> all_elements(const FGAbelianGroup& g);

// True iff e = 2a for some a, solved per coordinate: a free coordinate must
// be even, a mod-m coordinate is solvable iff m is odd or the coordinate is
// even.
bool euler_realizable(const GroupElement& e, const FGAbelianGroup& h2);

// One incompressible-torus record: the pairing value is the evaluation of
// the euler class on the torus class, supplied by the caller.
struct TorusRecord {
  GroupElement cls;
  bool realizable_by_curve_component = false;
  long long pairing = 0;

  bool operator==(const TorusRecord&) const = default;
};

struct ContactFlags {
  std::optional<bool> tight;
  std::optional<bool> pi2_zero;
  std::optional<bool> no_injective_torus;
  std::optional<bool> parallelizable_contact;

  bool operator==(const ContactFlags&) const = default;
};

// Declared facts about a contact manifold; the rule engine consumes exactly
// these and never derives new topology.
struct ManifoldDescriptor {
  FGAbelianGroup h2;
  GroupElement euler;
  ContactFlags flags;
  std::vector<TorusRecord> tori;

  bool operator==(const ManifoldDescriptor&) const = default;
};

// DimensionMismatch on element-length violations; when h2 is free of rank 1
// the pairing of every torus record must equal euler[0]*class[0], else
// InconsistentDescriptor.
void validate(const ManifoldDescriptor& d);

enum class StarStatus { Holds, Fails, Unknown };

enum class StarRule {
  InterpretationII,
  Tight,
  Torsion,
  Atoroidal,
  Parallelizable,
};

std::string star_rule_name(StarRule rule);

struct StarVerdict {
  StarStatus status = StarStatus::Unknown;
  std::optional<StarRule> rule;
  std::string detail;
};

// Fails(InterpretationII) on a realizable torus record with nonzero pairing.
// Otherwise Holds with the first applicable rule of Tight, Torsion (euler of
// finite order), Atoroidal (pi2_zero and no_injective_torus), Parallelizable;
// otherwise Unknown. A Fails witness alongside an applicable Holds rule
// raises InconsistentDescriptor.
StarVerdict condition_star(const ManifoldDescriptor& d);

// Free base group with an orientation character per generator.
struct BundleAlphabet {
  int rank = 0;
  std::vector<int> eps;

  bool operator==(const BundleAlphabet&) const = default;
};

void validate(const BundleAlphabet& alphabet);

// Normal form f^k * w of a circle-bundle group element; w freely reduced.
struct BundleGroupElement {
  BundleAlphabet alphabet;
  long long k = 0;
  Word w;

  bool operator==(const BundleGroupElement&) const = default;
};

BundleGroupElement bundle_identity(const BundleAlphabet& alphabet);

// Reduces the word and checks letters; AlphabetMismatch beyond the rank.
BundleGroupElement make_bundle_element(const BundleAlphabet& alphabet,
                                       long long k, const Word& w);

// Character of a single letter or a whole word; inverse letters carry the
// same value.
int eps_of(const BundleAlphabet& alphabet, int letter);
int eps_of(const BundleAlphabet& alphabet, const Word& w);

// (a.k + eps(a.w) * b.k, reduce(a.w b.w)); AlphabetMismatch unless the
// alphabets agree.
BundleGroupElement bundle_mul(const BundleGroupElement& a,
                              const BundleGroupElement& b);

BundleGroupElement bundle_inverse(const BundleGroupElement& a);

BundleGroupElement bundle_pow(const BundleGroupElement& a, long long n);

bool bundle_equal(const BundleGroupElement& a, const BundleGroupElement& b);

struct TttWitness {
  long long n = 0;
  long long i = 0;
  long long j = 0;

  bool operator==(const TttWitness&) const = default;
};

// witness absent means no exponents |n|, |i| <= bound satisfied the relation.
struct TttOutcome {
  std::optional<TttWitness> witness;
  int bound = 0;
};

// Searches beta^n = alpha^i f^j with n != 0, |n| <= bound, |i| <= bound; j is
// forced once the base words match. MoveNotApplicable when alpha's base word
// is trivial, NotCommuting when the pair fails to commute.
TttOutcome check_toughandtechnical(const BundleGroupElement& alpha,
                                   const BundleGroupElement& beta,
                                   int bound = 6);

// Loops attached at a double point, as words in a free group of the given
// rank.
struct WordPair {
  int rank = 0;
  Word d1;
  Word d2;

  bool operator==(const WordPair&) const = default;
};

void validate(const WordPair& p);

// 0 iff either word freely reduces to empty, 1 otherwise. Constant on orbits
// of simultaneous conjugation and the coordinate swap.
int alpha_nu(const WordPair& p);

enum class NuVerdict { Equal, Distinct, UnknownAtBound };

// Equal when some conjugator of length <= bound carries p to q or to the
// swap of q; Distinct when the multiset of cyclic-reduction classes of the
// coordinates differs; UnknownAtBound otherwise. AlphabetMismatch on rank
// disagreement.
NuVerdict nu_equivalent(const WordPair& p, const WordPair& q, int bound);

// Path filter: classifies a passage snapshot by its declared loop pair; a
// snapshot without loop annotations counts as 1.
int alpha_nu_filter(const SingularFramedDiagram& s);

}  // namespace knotcalc
