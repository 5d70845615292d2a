#pragma once

#include <utility>
#include <vector>

#include "affweyl/cosets.hpp"

namespace affweyl {

/// Bruhat-closure stratification of a Schubert variety: the max-min
/// representatives below a given one, their dimensions and the cover
/// relations (lower, upper) as indices into `elements`.
struct StrataPoset {
  std::vector<Element> elements;  // sorted by (length, reduced word)
  std::vector<int> dims;
  std::vector<std::pair<int, int>> covers;
};

// Dimension of the (F', F)-Schubert variety of w: l(_{F'}w^F).
int schubert_dim(const AffineWeyl& group, const Element& w, Facet left, Facet right);

StrataPoset strata(const AffineWeyl& group, const Element& w, Facet left, Facet right);

// {x in W^F : x <= w} for w in W^F.
std::vector<Element> quotient_interval(const AffineWeyl& group, const Element& w, Facet right);

bool is_antidominant(const CartanDatum& datum, const Coweight& mu);
// The unique antidominant element of the W_0-orbit of mu.
Coweight antidominant_rep(const CartanDatum& datum, const Coweight& mu);
// lambda <= mu iff lambda - mu is a non-negative integer combination of
// simple coroots. Both arguments must be antidominant.
bool antidominance_leq(const CartanDatum& datum, const Coweight& lambda, const Coweight& mu);
// |<antidominant_rep(mu), 2 rho>|
Int special_dim(const CartanDatum& datum, const Coweight& mu);

}  // namespace affweyl
