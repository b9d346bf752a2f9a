#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcf/eval.hpp"

namespace lcf {

/// Hard cap on open-ended walks (method-1 style searches and probes).
/// Closed walks have a known length and only hit this on absurd inputs.
inline constexpr std::uint64_t kDefaultStepCap = 1'000'000;

enum class StepLabel : char { g = 'g', f = 'f' };

struct Step {
  StepLabel label;
  Int from;
  Int to;
};

/// An explicit circuit trace in the loosened Collatz graph: starts and ends
/// at `start`, alternating one tripling step with a run of halving steps.
struct CycleWalk {
  Int start;
  std::vector<Step> steps;

  std::size_t g_count() const {
    std::size_t c = 0;
    for (const Step& s : steps) c += (s.label == StepLabel::g) ? 1 : 0;
    return c;
  }
};

struct WalkFailure {
  enum class Kind { odd_halving, endpoint_mismatch, step_cap_exceeded };
  Kind kind;
  std::size_t step_index;  // index the offending step would have had
  Int value;               // value at the point of failure

  std::string describe() const {
    switch (kind) {
      case Kind::odd_halving:
        return "halving required on odd value " + dec(value) + " at step " +
               std::to_string(step_index);
      case Kind::endpoint_mismatch:
        return "walk ended at " + dec(value) + " instead of its start";
      case Kind::step_cap_exceeded:
        return "step cap exceeded at value " + dec(value);
    }
    return "unknown failure";
  }
};

struct WalkResult {
  std::optional<CycleWalk> walk;
  std::optional<WalkFailure> failure;
  bool ok() const { return walk.has_value(); }
};

/// c(n): halve if even, triple-plus-one if odd.
inline Int collatz_step(const Int& n) {
  if (n < 1) throw DomainError("collatz_step: value must be >= 1");
  if (mpz_even_p(n.get_mpz_t())) return Int(n / 2);
  return Int(3 * n + 1);
}

/// Forward relation of the loosened graph: every vertex may be tripled,
/// only even vertices may be halved. Sorted ascending.
inline std::vector<Int> loosened_successors(const Int& n) {
  if (n < 1) throw DomainError("loosened_successors: value must be >= 1");
  std::vector<Int> out;
  if (mpz_even_p(n.get_mpz_t())) out.push_back(n / 2);
  out.push_back(3 * n + 1);
  return out;
}

/// Inverse relation of the loosened graph: {2n}, plus (n-1)/3 when
/// n = 1 (mod 3) — except that 1 keeps only {2}, which is what keeps 0
/// out of the graph. Sorted ascending.
inline std::vector<Int> loosened_children(const Int& n) {
  if (n < 1) throw DomainError("loosened_children: value must be >= 1");
  std::vector<Int> out;
  if (n != 1 && mpz_fdiv_ui(n.get_mpz_t(), 3) == 1) out.push_back((n - 1) / 3);
  out.push_back(2 * n);
  return out;
}

/// Traces the circuit the tuple encodes: from x1, apply one tripling step,
/// then exactly y_i halving steps, for each entry in order. Succeeds iff
/// every halving lands on an even number and the final value is x1 again.
inline WalkResult walk_tuple(const Tuple& t, const Int& x1,
                             std::uint64_t step_cap = kDefaultStepCap) {
  if (t.empty()) throw DomainError("walk_tuple: empty tuple");
  if (x1 < 1) throw DomainError("walk_tuple: start must be >= 1");
  // Length is known up front: one tripling per entry plus all halving runs.
  const std::uint64_t total = checked_add(t.size(), t.entry_sum());
  if (total > step_cap) {
    return {std::nullopt,
            WalkFailure{WalkFailure::Kind::step_cap_exceeded, 0, x1}};
  }

  CycleWalk w{x1, {}};
  w.steps.reserve(static_cast<std::size_t>(total));
  Int v = x1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Int next = 3 * v + 1;
    w.steps.push_back(Step{StepLabel::g, v, next});
    v = std::move(next);
    for (Entry r = 0; r < t[i]; ++r) {
      if (mpz_odd_p(v.get_mpz_t())) {
        return {std::nullopt,
                WalkFailure{WalkFailure::Kind::odd_halving, w.steps.size(), v}};
      }
      Int half = v / 2;
      w.steps.push_back(Step{StepLabel::f, v, half});
      v = std::move(half);
    }
  }
  if (v != x1) {
    return {std::nullopt,
            WalkFailure{WalkFailure::Kind::endpoint_mismatch, w.steps.size(), v}};
  }
  return {std::move(w), std::nullopt};
}

/// Independent verification path for satisfaction: evaluate the LCF, and
/// when the value is a positive integer, confirm it by actually walking the
/// circuit. An integral value whose walk breaks would contradict the
/// closed-form algebra, so that case is an internal error, never a result.
inline SatisfactionResult oracle_satisfies(const Tuple& t) {
  SatisfactionResult algebraic = is_satisfying(t);
  if (!algebraic.satisfying) return algebraic;
  WalkResult w = walk_tuple(t, *algebraic.value);
  if (!w.ok()) {
    throw Error("walk oracle rejected integral LCF value for " + t.display() +
                ": " + w.failure->describe());
  }
  return algebraic;
}

/// Every vertex the walk visits, start included.
inline std::set<Int> cycle_vertices(const CycleWalk& w) {
  std::set<Int> verts;
  for (const Step& s : w.steps) {
    verts.insert(s.from);
    verts.insert(s.to);
  }
  return verts;
}

/// A satisfying tuple is trivial iff its cycle passes through 1, 2, 8 or
/// 16 — the numbers the simple generation method starts from.
inline bool is_trivial_tuple(const Tuple& t) {
  SatisfactionResult s = is_satisfying(t);
  if (!s.satisfying) {
    throw DomainError("is_trivial_tuple: undefined for non-satisfying tuples");
  }
  WalkResult w = walk_tuple(t, *s.value);
  if (!w.ok()) {
    throw Error("is_trivial_tuple: walk rejected satisfying tuple " +
                t.display());
  }
  const std::set<Int> verts = cycle_vertices(*w.walk);
  for (int v : {1, 2, 8, 16}) {
    if (verts.count(Int(v))) return true;
  }
  return false;
}

/// Multiset of traversed edges, keyed by (source vertex, label). Two
/// circuits are equivalent exactly when these multisets coincide; vertex
/// multiplicities are recoverable as per-vertex count sums.
struct EdgeMultiset {
  Int anchor;  // the walk's start vertex
  std::map<std::pair<Int, StepLabel>, std::uint64_t> counts;

  bool operator==(const EdgeMultiset&) const = default;
};

inline EdgeMultiset edge_multiset(const CycleWalk& w) {
  EdgeMultiset m{w.start, {}};
  for (const Step& s : w.steps) ++m.counts[{s.from, s.label}];
  return m;
}

}  // namespace lcf
