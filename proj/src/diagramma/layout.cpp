#include "diagramma/layout.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "diagramma/errors.hpp"

namespace diagramma {

namespace {

struct Body {
  AtomId id;
  double radius;
  Vec3 pos;
};

constexpr double kBondFactor = 0.95;   // bonded target distance multiplier
constexpr double kClearFactor = 1.35;  // minimum separation multiplier for non-bonded pairs
constexpr double kOverlapFactor = 1.1; // must match LanguageParams default

// Iteratively pull bonded pairs to their target distance and push unbonded
// pairs past the clearance radius; returns true when the strict contact
// condition holds (bonded < 1.1*(ra+rb), unbonded >= 1.2*(ra+rb)).
bool relax(std::vector<Body>& bodies, const MolecularGraph& x, std::mt19937_64& rng, bool planar) {
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);
  const std::size_t n = bodies.size();
  std::map<AtomId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[bodies[i].id] = i;

  for (int round = 0; round < 600; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Body& a = bodies[i];
        Body& b = bodies[j];
        double sum = a.radius + b.radius;
        bool bonded = x.bond_order(a.id, b.id).has_value();
        Vec3 delta = b.pos - a.pos;
        double dist = delta.norm();
        if (dist < 1e-9) {
          delta = {jitter(rng), jitter(rng), planar ? 0.0 : jitter(rng)};
          dist = delta.norm();
        }
        Vec3 dir = delta * (1.0 / dist);
        double target = bonded ? kBondFactor * sum : std::max(dist, kClearFactor * sum);
        double step = 0.45 * (dist - target);
        a.pos = a.pos + dir * step;
        b.pos = b.pos - dir * step;
        if (planar) { a.pos.z = 0.0; b.pos.z = 0.0; }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double sum = bodies[i].radius + bodies[j].radius;
      double dist = distance(bodies[i].pos, bodies[j].pos);
      if (x.bond_order(bodies[i].id, bodies[j].id)) {
        if (dist >= kOverlapFactor * sum) return false;
      } else {
        if (dist < (kOverlapFactor + 0.1) * sum) return false;
      }
    }
  }
  return true;
}

std::vector<Body> embed3d(const MolecularGraph& x, const ElementTable& table, std::uint64_t seed) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::mt19937_64 rng(seed * 1315423911u + attempt + 1);
    std::vector<Body> bodies;
    double spread = 120.0 * std::cbrt(static_cast<double>(x.atom_count()) + 1.0);
    std::uniform_real_distribution<double> coord(-spread, spread);
    for (const auto& [id, el] : x.atoms())
      bodies.push_back({id, table.at(el).covalent_radius_pm, {coord(rng), coord(rng), coord(rng)}});
    if (relax(bodies, x, rng, false)) return bodies;
  }
  throw LayoutError("no contact-accurate 3D embedding found for " +
                    (x.name ? *x.name : std::string("molecule")) + " (" +
                    std::to_string(x.atom_count()) + " atoms)");
}

// 2D positions only need to be distinct; reuse the relaxer in the plane for
// readable pictures and fall back to a ring if it cannot satisfy contact
// constraints (they do not matter for wireframes).
std::vector<Body> embed2d(const MolecularGraph& x, const ElementTable& table, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 2654435761u + 7);
  std::vector<Body> bodies;
  double spread = 140.0 * std::sqrt(static_cast<double>(x.atom_count()) + 1.0);
  std::uniform_real_distribution<double> coord(-spread, spread);
  for (const auto& [id, el] : x.atoms())
    bodies.push_back({id, table.at(el).covalent_radius_pm, {coord(rng), coord(rng), 0.0}});
  relax(bodies, x, rng, true);

  // Enforce pairwise-distinct positions regardless of relaxation quality.
  for (std::size_t i = 0; i < bodies.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (bodies[i].pos == bodies[j].pos) bodies[i].pos.x += 1.0 + static_cast<double>(i);
  return bodies;
}

}  // namespace

Diagram render_to_language(const MolecularGraph& x, LangId lang_id, const ElementTable& table,
                           std::uint64_t seed) {
  InterpretedLanguage lang = builtin_language(lang_id, table);

  const MolecularGraph* source = &x;
  MolecularGraph heavy;
  if (lang_id == LangId::WIRE2D_HDEP) {
    std::set<std::string> kept = lang.it_elements();
    heavy = restrict_graph(x, kept, nullptr);
    source = &heavy;
  }

  std::string it_prefix;
  std::string dt_prefix;
  switch (lang_id) {
    case LangId::WIRE2D:
    case LangId::WIRE2D_HDEP: it_prefix = "vertex"; dt_prefix = "line"; break;
    case LangId::BALLSTICK3D: it_prefix = "sphere"; dt_prefix = "stick"; break;
    case LangId::SPACEFILL3D: it_prefix = "ball"; break;
  }

  Diagram d;
  d.language = lang_id;
  d.name = x.name;

  bool three_d = lang_id == LangId::BALLSTICK3D || lang_id == LangId::SPACEFILL3D;
  std::vector<Body> bodies =
      three_d ? embed3d(*source, table, seed) : embed2d(*source, table, seed);

  for (const Body& body : bodies) {
    Token t;
    t.id = body.id;
    t.symbol = it_prefix + ":" + source->element_of(body.id);
    TokenPos pos;
    pos.point = body.pos;
    pos.dims = three_d ? 3 : 2;
    if (!three_d) pos.point.z = 0.0;
    t.position = pos;
    d.add_token(std::move(t), &lang);
  }

  if (lang_id != LangId::SPACEFILL3D) {
    TokenId next = 1;
    for (const auto& [id, el] : source->atoms()) next = std::max(next, id + 1);
    for (const Bond& bond : source->bonds()) {
      Token t;
      TokenId id = next++;
      t.id = id;
      t.symbol = dt_prefix + ":" + std::to_string(bond.order);
      d.add_token(std::move(t), &lang);
      d.add_connection(id, bond.a);
      d.add_connection(id, bond.b);
    }
  }
  return d;
}

}  // namespace diagramma
