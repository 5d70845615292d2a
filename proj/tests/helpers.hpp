#pragma once

#include <random>
#include <vector>

#include "affweyl/cosets.hpp"
#include "affweyl/weyl.hpp"

namespace affweyl::testing {

inline AffineWeyl group(char type, int rank) { return AffineWeyl(CartanDatum::build(type, rank)); }

inline Element T(const AffineWeyl& g, Coweight mu) { return g.from_translation(std::move(mu)); }
inline Element W(const AffineWeyl& g, Word w) { return g.from_word(w); }
inline Facet F(std::vector<int> nodes) { return Facet::from_nodes(nodes); }

inline Word random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, rank);
  Word w(len(rng));
  for (auto& x : w) x = letter(rng);
  return w;
}

// Independent check for min/max-min computations: exhaustive min of
// l(w v) over v in W_F.
inline Element brute_min_right(const AffineWeyl& g, const Element& w, Facet f) {
  Element best = w;
  int best_len = g.length(w);
  for (const auto& v : parabolic_subgroup(g, f)) {
    Element x = g.multiply(w, v);
    if (g.length(x) < best_len) {
      best_len = g.length(x);
      best = x;
    }
  }
  return best;
}

// A point in the open base alcove: 2rho / (<2rho, theta> + 1), as
// numerators over the returned denominator.
struct RationalPoint {
  IntVec num;
  Int den;
};

inline RationalPoint alcove_point(const CartanDatum& d) {
  return RationalPoint{d.two_rho(), dot(d.two_rho(), d.highest_root()) + 1};
}

// Value of root + offset at a rational point, times the denominator.
inline Int affine_value(const CartanDatum& d, int root, Int offset, const RationalPoint& x) {
  return dot(d.roots()[root], x.num) + offset * x.den;
}

}  // namespace affweyl::testing
