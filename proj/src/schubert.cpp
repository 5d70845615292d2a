#include "affweyl/schubert.hpp"

#include <unordered_set>

#include "affweyl/error.hpp"

namespace affweyl {

int schubert_dim(const AffineWeyl& group, const Element& w, Facet left, Facet right) {
  return group.length(maxmin_rep(group, w, left, right));
}

// Subword products of a reduced word, built right to left and projected
// to W/W_F after every step; left multiplication is well defined on
// cosets x W_F.
std::vector<Element> quotient_interval(const AffineWeyl& group, const Element& w, Facet right) {
  require_proper(group, right);
  const Word word = group.reduced_word(w);
  std::unordered_set<Element, ElementHash> seen{group.identity()};
  std::vector<Element> out{group.identity()};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) {
      Element y = min_right_rep(group, group.left_mult(*it, out[k]), right);
      if (seen.insert(y).second) out.push_back(std::move(y));
    }
  }
  return out;
}

StrataPoset strata(const AffineWeyl& group, const Element& w, Facet left, Facet right) {
  const Element top = maxmin_rep(group, w, left, right);
  StrataPoset poset;
  for (auto& x : quotient_interval(group, top, right))
    if (is_maxmin_rep(group, x, left, right)) poset.elements.push_back(std::move(x));
  sort_by_length_word(group, poset.elements);

  const int n = static_cast<int>(poset.elements.size());
  for (const auto& e : poset.elements) poset.dims.push_back(group.length(e));
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[i][j] = i == j || (poset.dims[i] < poset.dims[j] &&
                             group.bruhat_leq(poset.elements[i], poset.elements[j]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k)
        if (k != i && k != j && leq[i][k] && leq[k][j]) covered = false;
      if (covered) poset.covers.emplace_back(i, j);
    }
  if (n == 0 || !(poset.elements.back() == top))
    throw InvariantViolation("strata do not end in the max-min representative");
  return poset;
}

bool is_antidominant(const CartanDatum& datum, const Coweight& mu) {
  for (const auto& a : datum.simple_roots())
    if (pairing(mu, a) > 0) return false;
  return true;
}

Coweight antidominant_rep(const CartanDatum& datum, const Coweight& mu) {
  if (static_cast<int>(mu.size()) != datum.dimension())
    throw InvalidArgument("coweight " + to_string(mu) + " has wrong dimension");
  Coweight cur = mu;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& a : datum.simple_roots()) {
      const Int c = pairing(cur, a);
      if (c > 0) {
        cur = sub(cur, scale(datum.coroot_of(a), c));
        changed = true;
      }
    }
  }
  return cur;
}

bool antidominance_leq(const CartanDatum& datum, const Coweight& lambda, const Coweight& mu) {
  if (!is_antidominant(datum, lambda) || !is_antidominant(datum, mu))
    throw InvalidArgument("antidominance order compares antidominant coweights only");
  auto coords = datum.coroot_coordinates(sub(lambda, mu));
  if (!coords) return false;
  for (Int c : *coords)
    if (c < 0) return false;
  return true;
}

Int special_dim(const CartanDatum& datum, const Coweight& mu) {
  if (!datum.in_coroot_lattice(mu))
    throw InvalidArgument("coweight " + to_string(mu) + " is not in the translation lattice");
  const Int v = pairing(antidominant_rep(datum, mu), datum.two_rho());
  return v < 0 ? -v : v;
}

}  // namespace affweyl
