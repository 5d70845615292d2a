#include "affweyl/resolution.hpp"

#include <string>

#include "affweyl/error.hpp"
#include "affweyl/schubert.hpp"

namespace affweyl {

Facet stabilizer_parahoric(const AffineWeyl& group, const Element& w, Facet f) {
  require_proper(group, f);
  const int base = group.length(min_right_rep(group, w, f));
  std::vector<int> nodes;
  for (int i = 0; i <= group.rank(); ++i)
    if (group.length(min_right_rep(group, group.left_mult(i, w), f)) <= base) nodes.push_back(i);
  Facet p = Facet::from_nodes(nodes);
  if (!is_proper(group, p))
    throw InvalidArgument("Schubert variety is a point / stabilizer not proper");
  return p;
}

std::vector<ResolutionStep> resolutive_sequence(const AffineWeyl& group, const Element& w, Facet f) {
  require_proper(group, f);
  if (!(min_right_rep(group, w, f) == w))
    throw InvalidArgument("resolutive_sequence expects a minimal representative of w W_F; pass min_right_rep(w, F)");

  std::vector<ResolutionStep> steps;
  Element current = w;
  int len = group.length(current);
  while (len > 0) {
    const Facet p = stabilizer_parahoric(group, current, f);
    Element rest = min_left_rep(group, current, p);
    Element factor = group.multiply(current, group.inverse(rest));
    const int lf = group.length(factor), lr = group.length(rest);
    if (lf == 0) throw InvariantViolation("stabilizer factor of a non-trivial element is trivial");
    if (lf + lr != len) throw InvariantViolation("stabilizer factorization is not length-additive");
    steps.push_back(ResolutionStep{p, Facet(), std::move(factor)});
    current = std::move(rest);
    len = lr;
  }
  for (std::size_t i = 0; i < steps.size(); ++i)
    steps[i].Q = i + 1 < steps.size() ? steps[i].P.intersect(steps[i + 1].P) : steps[i].P.intersect(f);
  return steps;
}

int bott_samelson_dim(const AffineWeyl& group, const std::vector<ResolutionStep>& steps) {
  int total = 0;
  for (const auto& s : steps) total += longest_rep_length(group, s.P, s.Q);
  return total;
}

Element product_of_factors(const AffineWeyl& group, const std::vector<ResolutionStep>& steps,
                           std::size_t first) {
  Element x = group.identity();
  for (std::size_t i = first; i < steps.size(); ++i) x = group.multiply(x, steps[i].factor);
  return x;
}

Word unitary_w_p2_word(int p) {
  Word w;
  for (int i = p; i >= 1; --i)
    for (int j = 0; j < i; ++j) w.push_back(j);
  return w;
}

UnitaryExample unitary_example(int m, int p) {
  if (m < 1) throw InvalidArgument("unitary example needs m >= 1");
  if (p < 1 || p > m)
    throw InvalidArgument("p must satisfy 1 <= p <= m, got p=" + std::to_string(p) + ", m=" + std::to_string(m));
  UnitaryExample ex{.group = AffineWeyl(CartanDatum::build(RootType::C, m)), .m = m, .p = p, .mu_p = {}, .dim = 0,
                    .Q_p = {}, .w_p2 = {}, .strata_count = 0, .steps = {}};
  const AffineWeyl& g = ex.group;
  ex.mu_p.assign(m, 0);
  for (int i = 0; i < p; ++i) ex.mu_p[i] = 1;
  const Facet special = Facet::special(m);

  ex.dim = special_dim(g.datum(), negate(ex.mu_p));
  if (ex.dim != static_cast<Int>(p) * (2 * m + 1 - p))
    throw InvariantViolation("dimension of S_p differs from p(2m+1-p)");

  std::vector<int> q;
  for (int i = 1; i <= m; ++i)
    if (i != p) q.push_back(i);
  ex.Q_p = Facet::from_nodes(q);

  const Element w = maxmin_rep(g, g.from_translation(negate(ex.mu_p)), special, special);
  ex.steps = resolutive_sequence(g, w, special);
  ex.w_p2 = product_of_factors(g, ex.steps, 1);
  if (g.length(ex.w_p2) != p * (p + 1) / 2)
    throw InvariantViolation("w_{p,2} does not have length p(p+1)/2");
  if (ex.w_p2.translation != ex.mu_p)
    throw InvariantViolation("w_{p,2} does not map to mu_p in W_aff / W_0");

  ex.strata_count = static_cast<int>(strata(g, w, special, special).elements.size());
  return ex;
}

}  // namespace affweyl
