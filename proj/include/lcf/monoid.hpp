#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "lcf/walk.hpp"

namespace lcf {

/// An element of the concatenation monoid anchored at k: either the empty
/// tuple (the identity, a member of every anchor's monoid) or a tuple whose
/// LCF value is exactly k. Membership is checked once, at construction.
class MonoidElement {
 public:
  MonoidElement(Tuple tuple, Int anchor)
      : tuple_(std::move(tuple)), anchor_(std::move(anchor)) {
    if (anchor_ < 1) throw DomainError("monoid anchor must be >= 1");
    if (tuple_.empty()) return;
    SatisfactionResult s = is_satisfying(tuple_);
    if (!s.satisfying) {
      throw DomainError("membership: " + tuple_.display() +
                        " is not satisfying");
    }
    if (*s.value != anchor_) {
      throw DomainError("membership: " + tuple_.display() + " has value " +
                        dec(*s.value) + ", not " + dec(anchor_));
    }
  }

  static MonoidElement identity(Int anchor) {
    return MonoidElement(Tuple{}, std::move(anchor));
  }

  const Tuple& tuple() const { return tuple_; }
  const Int& anchor() const { return anchor_; }
  bool is_identity() const { return tuple_.empty(); }

  bool operator==(const MonoidElement&) const = default;

 private:
  Tuple tuple_;
  Int anchor_;
};

inline MonoidElement member(const Tuple& t, const Int& k) {
  return MonoidElement(t, k);
}

/// Entry-sequence concatenation. Closure (the result is again a member of
/// the same monoid) holds by the circuit-splicing argument and is
/// re-checked by the constructor.
inline MonoidElement concat(const MonoidElement& a, const MonoidElement& b) {
  if (a.anchor() != b.anchor()) {
    throw DomainError("concat: anchor mismatch (" + dec(a.anchor()) + " vs " +
                      dec(b.anchor()) + ")");
  }
  std::vector<Entry> joined = a.tuple().entries();
  joined.insert(joined.end(), b.tuple().entries().begin(),
                b.tuple().entries().end());
  return MonoidElement(Tuple(std::move(joined)), a.anchor());
}

/// Edge multiset of the circuit the element traces from its anchor; empty
/// for the identity.
inline EdgeMultiset element_edges(const MonoidElement& e) {
  if (e.is_identity()) return EdgeMultiset{e.anchor(), {}};
  WalkResult w = walk_tuple(e.tuple(), e.anchor());
  if (!w.ok()) {
    throw Error("element walk failed for validated member " +
                e.tuple().display());
  }
  return edge_multiset(*w.walk);
}

/// Circuit equivalence: equal edge multisets (with multiplicities) of the
/// walks from the common anchor. Elements of different monoids are never
/// equivalent.
inline bool equivalent(const MonoidElement& a, const MonoidElement& b) {
  if (a.anchor() != b.anchor()) return false;
  return element_edges(a) == element_edges(b);
}

namespace detail {

/// Walks e's circuit and returns the entry positions (1-based, < n) after
/// which the walk is back at the anchor — exactly the places the tuple
/// splits into smaller members.
inline std::vector<std::size_t> interior_returns(const MonoidElement& e) {
  const Tuple& t = e.tuple();
  const Int& k = e.anchor();
  std::vector<std::size_t> cuts;
  Int v = k;
  for (std::size_t i = 0; i < t.size(); ++i) {
    v = 3 * v + 1;
    for (Entry r = 0; r < t[i]; ++r) {
      if (mpz_odd_p(v.get_mpz_t())) {
        throw Error("interior walk broke for validated member " + t.display());
      }
      v /= 2;
    }
    if (i + 1 < t.size() && v == k) cuts.push_back(i + 1);
  }
  if (v != k) {
    throw Error("interior walk did not close for validated member " +
                t.display());
  }
  return cuts;
}

}  // namespace detail

/// An atom has no interior return to the anchor: no proper prefix of its
/// circuit is itself a member. Equivalently no rotation by 1 <= l < n
/// evaluates to k; the two criteria are proven equal by test.
inline bool is_atom(const MonoidElement& e) {
  if (e.is_identity()) throw DomainError("is_atom: the identity is a unit");
  return detail::interior_returns(e).empty();
}

struct AtomDecomposition {
  Int anchor;
  std::vector<Tuple> atoms;  // concatenation restores the decomposed tuple
};

/// Single-pass prime factorization: cut the tuple at every interior return
/// to the anchor. Each segment is first-return, hence an atom.
inline AtomDecomposition decompose(const MonoidElement& e) {
  if (e.is_identity()) {
    throw DomainError("decompose: identity has no factorization");
  }
  const Tuple& t = e.tuple();
  std::vector<std::size_t> cuts = detail::interior_returns(e);
  cuts.push_back(t.size());
  AtomDecomposition d{e.anchor(), {}};
  std::size_t begin = 0;
  for (std::size_t cut : cuts) {
    d.atoms.emplace_back(std::vector<Entry>(t.entries().begin() + begin,
                                            t.entries().begin() + cut));
    begin = cut;
  }
  return d;
}

/// Ordering used for canonical atom multisets: by length, then
/// lexicographically.
inline bool fingerprint_less(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.entries() < b.entries();
}

/// The sorted multiset of atoms. Factorization is unique up to circuit
/// equivalence, so two members are equivalent iff their fingerprints match;
/// this is the fast path the equivalence tests pin down.
using Fingerprint = std::vector<Tuple>;

inline Fingerprint factorization_fingerprint(const MonoidElement& e) {
  Fingerprint fp = decompose(e).atoms;
  std::sort(fp.begin(), fp.end(), fingerprint_less);
  return fp;
}

/// a | b iff a's atom multiset is contained in b's. Atoms are compared by
/// tuple equality: within one monoid an associate of an element is itself.
inline bool divides(const MonoidElement& a, const MonoidElement& b) {
  if (a.anchor() != b.anchor()) {
    throw DomainError("divides: anchor mismatch");
  }
  if (a.is_identity()) return true;
  if (b.is_identity()) return false;
  std::map<Tuple, std::size_t> need;
  for (const Tuple& atom : decompose(a).atoms) ++need[atom];
  for (const Tuple& atom : decompose(b).atoms) {
    auto it = need.find(atom);
    if (it != need.end() && --it->second == 0) need.erase(it);
  }
  return need.empty();
}

}  // namespace lcf
