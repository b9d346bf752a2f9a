#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "lcf/eval.hpp"

namespace lcf {

/// The rotation orbit of an n-tuple read as n points in Z^n, joined
/// consecutively into a closed polygon: vertex j is the j-fold left
/// rotation, edge j runs from vertex j to vertex (j+1) mod n. Duplicate
/// vertices of periodic tuples are kept, so the vertex count is always n.
struct OrbitPolygon {
  std::size_t dimension = 0;
  std::vector<std::vector<Entry>> vertices;
  std::vector<Int> squared_lengths;  // exact, one per edge
};

inline OrbitPolygon orbit_polygon(const Tuple& t) {
  if (t.empty()) throw DomainError("orbit_polygon: empty tuple");
  const std::size_t n = t.size();
  OrbitPolygon p;
  p.dimension = n;
  p.vertices.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    p.vertices.push_back(rotate(t, k).entries());
  }
  p.squared_lengths.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& a = p.vertices[k];
    const auto& b = p.vertices[(k + 1) % n];
    Int sq = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Int d = Int(a[i]) - Int(b[i]);
      sq += d * d;
    }
    p.squared_lengths.push_back(std::move(sq));
  }
  return p;
}

/// All edges of an orbit polygon have the same exact squared length — each
/// edge's coordinate differences are a cyclic shift of the same multiset.
/// Holds for every tuple, satisfying or not.
inline bool equal_edge_check(const OrbitPolygon& p) {
  for (std::size_t k = 1; k < p.squared_lengths.size(); ++k) {
    if (p.squared_lengths[k] != p.squared_lengths[0]) return false;
  }
  return true;
}

/// The sorted multiset of orbit vertices. For satisfying tuples this is
/// the geometric object of the cycle: fingerprints coincide exactly when
/// the tuples name the same cycle.
inline std::vector<std::vector<Entry>> object_fingerprint(const Tuple& t) {
  if (!is_satisfying(t).satisfying) {
    throw DomainError("object_fingerprint: undefined for non-satisfying tuples");
  }
  OrbitPolygon p = orbit_polygon(t);
  std::sort(p.vertices.begin(), p.vertices.end());
  return std::move(p.vertices);
}

/// True iff the tuple is all-2s (the exempt family) or every orbit vertex
/// touches some coordinate hyperplane — which happens exactly when the
/// tuple contains a 0 entry.
inline bool zero_axis_check(const Tuple& t) {
  if (!is_satisfying(t).satisfying) {
    throw DomainError("zero_axis_check: undefined for non-satisfying tuples");
  }
  if (t.uniform(2)) return true;
  for (const auto& vertex : orbit_polygon(t).vertices) {
    if (std::find(vertex.begin(), vertex.end(), Entry{0}) == vertex.end()) {
      return false;
    }
  }
  return true;
}

/// Centroid of the orbit vertices, exact. Every coordinate equals the mean
/// of the tuple's entries, so the centroid always lies on the diagonal
/// x_1 = x_2 = ... = x_n.
inline std::vector<Rat> diagonal_centroid(const OrbitPolygon& p) {
  std::vector<Rat> centroid;
  centroid.reserve(p.dimension);
  for (std::size_t i = 0; i < p.dimension; ++i) {
    Int col = 0;
    for (const auto& vertex : p.vertices) col += Int(vertex[i]);
    Rat c(col, Int(static_cast<unsigned long>(p.vertices.size())));
    c.canonicalize();
    centroid.push_back(std::move(c));
  }
  return centroid;
}

}  // namespace lcf
