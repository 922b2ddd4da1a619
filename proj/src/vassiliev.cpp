#include "knotcalc/vassiliev.hpp"

#include <string>

namespace knotcalc {

int resolution_sign(const ResolutionAssignment& a) {
  int sign = 1;
  for (const auto& [id, eps] : a.choice) {
    if (eps != 1 && eps != -1) {
      throw DomainError(Errc::AssignmentMismatch,
                        "choice at crossing " + std::to_string(id) +
                            " must be +1 or -1");
    }
    sign *= eps;
  }
  return sign;
}

FramedDiagram resolve(const SingularFramedDiagram& s,
                      const ResolutionAssignment& a) {
  validate(s);
  for (const auto& [id, eps] : a.choice) {
    if (!s.marked.count(id)) {
      throw DomainError(Errc::AssignmentMismatch,
                        "choice at crossing " + std::to_string(id) +
                            " which is not marked");
    }
    if (eps != 1 && eps != -1) {
      throw DomainError(Errc::AssignmentMismatch,
                        "choice at crossing " + std::to_string(id) +
                            " must be +1 or -1");
    }
  }
  for (int id : s.marked) {
    if (!a.choice.count(id)) {
      throw DomainError(Errc::AssignmentMismatch,
                        "no choice for marked crossing " + std::to_string(id));
    }
  }
  // Resolution overwrites both pass and sign from the canonical pass layout,
  // so it is independent of the stored representative.
  SingularFramedDiagram canon = canonicalize_marked(s);
  FramedDiagram out{canon.diagram, canon.offset};
  for (Visit& v : out.diagram.visits) {
    auto it = a.choice.find(v.crossing);
    if (it == a.choice.end()) continue;
    if (it->second > 0) {
      v.sign = 1;
    } else {
      v.sign = -1;
      v.pass = v.pass == Pass::Over ? Pass::Under : Pass::Over;
    }
  }
  validate(out);
  return out;
}

SingularFramedDiagram make_kinked_singular(const FramedDiagram& k, int d) {
  validate(k);
  if (d < 0) {
    throw DomainError(Errc::AssignmentMismatch,
                      "kink count must be nonnegative");
  }
  FramedDiagram cur = k;
  std::set<int> marked;
  for (int i = 0; i < d; ++i) {
    OffsetTradeInsert insert;
    insert.at = cur.diagram.visits.size();
    insert.sign = 1;
    cur = apply_move(cur, insert);
    marked.insert(max_crossing_id(cur.diagram));
  }
  return SingularFramedDiagram{cur.diagram, cur.offset, std::move(marked),
                               std::nullopt};
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

InvariantFn<IntGroup> sl_invariant() {
  return [](const FramedDiagram& k) { return self_linking(k); };
}

InvariantFn<IntGroup> constant_invariant(long long c) {
  return [c](const FramedDiagram&) { return c; };
}

InvariantFn<IntGroup> sl_polynomial(const std::vector<long long>& coeffs) {
  return [coeffs](const FramedDiagram& k) {
    const long long sl = self_linking(k);
    long long value = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      value = value * sl + *it;
    }
    return value;
  };
}

}  // namespace knotcalc
