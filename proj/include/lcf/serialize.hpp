#pragma once

#include <cmath>
#include <string>

#include <json.hpp>

#include "lcf/geometry.hpp"
#include "lcf/monoid.hpp"
#include "lcf/walk.hpp"

namespace lcf {

/// Insertion-ordered JSON keeps machine output byte-stable and in the
/// documented field order. Integers that can outgrow 64 bits are emitted
/// as decimal strings; tuple entries stay plain JSON integers.
using Json = nlohmann::ordered_json;

inline Json tuple_json(const Tuple& t) {
  Json arr = Json::array();
  for (Entry e : t.entries()) arr.push_back(e);
  return arr;
}

inline Json walk_json(const CycleWalk& w) {
  Json steps = Json::array();
  for (const Step& s : w.steps) {
    steps.push_back(Json{{"label", s.label == StepLabel::g ? "g" : "f"},
                         {"to", dec(s.to)}});
  }
  return Json{{"start", dec(w.start)}, {"steps", std::move(steps)}};
}

inline Json satisfaction_json(const Tuple& t, const SatisfactionResult& r) {
  Json j;
  j["tuple"] = tuple_json(t);
  j["numerator"] = dec(r.raw.numerator);
  j["denominator"] = dec(r.raw.denominator);
  j["satisfying"] = r.satisfying;
  j["value"] = r.satisfying ? Json(dec(*r.value)) : Json(nullptr);
  return j;
}

inline Json decomposition_json(const Tuple& original,
                               const AtomDecomposition& d) {
  Json atoms = Json::array();
  for (const Tuple& atom : d.atoms) atoms.push_back(tuple_json(atom));
  return Json{{"k", dec(d.anchor)},
              {"tuple", tuple_json(original)},
              {"atoms", std::move(atoms)}};
}

inline Json polygon_json(const OrbitPolygon& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices) {
    Json coords = Json::array();
    for (Entry e : v) coords.push_back(std::to_string(e));
    verts.push_back(std::move(coords));
  }
  Json sq = Json::array();
  Json approx = Json::array();
  for (const Int& s : p.squared_lengths) {
    sq.push_back(dec(s));
    approx.push_back(std::sqrt(mpz_get_d(s.get_mpz_t())));
  }
  return Json{{"n", p.dimension},
              {"vertices", std::move(verts)},
              {"squared_lengths", std::move(sq)},
              {"edge_lengths_approx", std::move(approx)}};
}

/// "vertex_index,coord_0,...,coord_{n-1}" followed by one row per rotation
/// vertex.
inline std::string polygon_csv(const OrbitPolygon& p) {
  std::string out = "vertex_index";
  for (std::size_t i = 0; i < p.dimension; ++i) {
    out += ",coord_" + std::to_string(i);
  }
  out += '\n';
  for (std::size_t k = 0; k < p.vertices.size(); ++k) {
    out += std::to_string(k);
    for (Entry e : p.vertices[k]) out += ',' + std::to_string(e);
    out += '\n';
  }
  return out;
}

}  // namespace lcf
