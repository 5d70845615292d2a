#include "affweyl/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "affweyl/error.hpp"

namespace affweyl {

Facet Facet::from_nodes(std::span<const int> nodes) {
  std::uint32_t mask = 0;
  for (int n : nodes) {
    if (n < 0 || n >= 32) throw InvalidArgument("facet node out of range: " + std::to_string(n));
    mask |= 1U << n;
  }
  return Facet(mask);
}

Facet Facet::special(int rank) {
  std::uint32_t mask = 0;
  for (int i = 1; i <= rank; ++i) mask |= 1U << i;
  return Facet(mask);
}

Facet Facet::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty() || text == "none" || text == "\xE2\x88\x85") return Facet();
  std::vector<int> nodes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string tok(text.substr(pos, comma - pos));
    std::size_t used = 0;
    int value = -1;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size())
      throw InvalidArgument("cannot parse facet node '" + tok + "' in '" + std::string(text) + "'");
    nodes.push_back(value);
    pos = comma + 1;
  }
  return from_nodes(nodes);
}

std::vector<int> Facet::nodes() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string Facet::to_string() const {
  if (empty()) return "none";
  std::string s;
  for (int n : nodes()) {
    if (!s.empty()) s += ',';
    s += std::to_string(n);
  }
  return s;
}

bool is_proper(const AffineWeyl& group, Facet f) {
  const auto nodes = f.nodes();
  if (!nodes.empty() && nodes.back() > group.rank()) return false;
  return static_cast<int>(nodes.size()) < group.num_nodes();
}

void require_proper(const AffineWeyl& group, Facet f) {
  for (int n : f.nodes())
    if (n > group.rank())
      throw InvalidArgument("facet node " + std::to_string(n) + " exceeds rank " + std::to_string(group.rank()));
  if (!is_proper(group, f))
    throw InvalidArgument("facet {" + f.to_string() + "} is not a proper subset of the affine nodes");
}

std::vector<Facet> proper_facets(const AffineWeyl& group) {
  std::vector<Facet> out;
  const std::uint32_t full = (1U << group.num_nodes()) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < group.num_nodes(); ++i)
      if ((mask >> i) & 1U) nodes.push_back(i);
    out.push_back(Facet::from_nodes(nodes));
  }
  return out;
}

std::vector<Element> parabolic_subgroup(const AffineWeyl& group, Facet f) {
  require_proper(group, f);
  std::unordered_set<Element, ElementHash> seen{group.identity()};
  std::vector<Element> out{group.identity()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i : f.nodes()) {
      Element y = group.right_mult(out[k], i);
      if (seen.insert(y).second) out.push_back(std::move(y));
    }
    if (out.size() > 100000) throw LimitExceeded("parabolic subgroup too large");
  }
  return out;
}

Element min_right_rep(const AffineWeyl& group, const Element& w, Facet f) {
  require_proper(group, f);
  Element x = w;
  int lx = group.length(x);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : f.nodes()) {
      Element y = group.right_mult(x, i);
      const int ly = group.length(y);
      if (ly < lx) {
        x = std::move(y);
        lx = ly;
        changed = true;
        break;
      }
    }
  }
  return x;
}

Element min_left_rep(const AffineWeyl& group, const Element& w, Facet f) {
  require_proper(group, f);
  Element x = w;
  int lx = group.length(x);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : f.nodes()) {
      Element y = group.left_mult(i, x);
      const int ly = group.length(y);
      if (ly < lx) {
        x = std::move(y);
        lx = ly;
        changed = true;
        break;
      }
    }
  }
  return x;
}

Element maxmin_rep(const AffineWeyl& group, const Element& w, Facet left, Facet right) {
  require_proper(group, left);
  Element x = min_right_rep(group, w, right);
  int lx = group.length(x);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : left.nodes()) {
      Element y = min_right_rep(group, group.left_mult(i, x), right);
      const int ly = group.length(y);
      if (ly > lx) {
        x = std::move(y);
        lx = ly;
        changed = true;
        break;
      }
    }
  }
  return x;
}

bool is_maxmin_rep(const AffineWeyl& group, const Element& w, Facet left, Facet right) {
  return maxmin_rep(group, w, left, right) == w;
}

namespace {

// Nodes of the closed alcove's vertices spanning the facet.
std::vector<int> facet_vertices(const CartanDatum& datum, Facet f) {
  std::vector<int> out;
  for (int i = 0; i < datum.num_nodes(); ++i)
    if (!f.contains(i)) out.push_back(i);
  return out;
}

}  // namespace

// Vertex i >= 1 of the closed base alcove is the point where all simple
// roots but alpha_i vanish and theta = 1, so a root a takes the value
// n_i(a) / c_i there; vertex 0 is the origin.
int sign_on_facet(const CartanDatum& datum, int root, Int offset, Facet f) {
  const auto verts = facet_vertices(datum, f);
  if (verts.empty()) throw InvalidArgument("facet has no vertices");
  const IntVec& marks = datum.marks();
  Int lcm = 1;
  for (int i : verts) lcm = std::lcm(lcm, marks[i]);
  const IntVec& coords = datum.simple_coordinates(root);
  Int total = 0;
  for (int i : verts) {
    total += offset * lcm;
    if (i > 0) total += coords[i - 1] * (lcm / marks[i]);
  }
  return (total > 0) - (total < 0);
}

bool vanishes_on_facet(const CartanDatum& datum, int root, Int offset, Facet f) {
  const IntVec& marks = datum.marks();
  const IntVec& coords = datum.simple_coordinates(root);
  for (int i : facet_vertices(datum, f)) {
    const Int value = offset * marks[i] + (i > 0 ? coords[i - 1] : 0);
    if (value != 0) return false;
  }
  return true;
}

int waldspurger_length(const AffineWeyl& group, const Element& w, Facet left, Facet right) {
  require_proper(group, left);
  require_proper(group, right);
  if (!w.omega.empty()) throw InvalidArgument("waldspurger_length requires a trivial omega label");
  const CartanDatum& datum = group.datum();
  int count = 0;
  for (int r = 0; r < static_cast<int>(datum.roots().size()); ++r) {
    const RootVec image = w.finite.apply(datum.roots()[r]);
    // w(alpha) = image + k - <lambda, image> takes values >= k - <lambda,image> - 1 on C.
    const Int kmax = std::max<Int>(0, dot(w.translation, image) + 1);
    for (Int k = 0; k <= kmax; ++k) {
      const AffineRoot alpha{r, k};
      if (!affine_root_positive_on_C(datum, alpha)) continue;
      if (vanishes_on_facet(datum, r, k, right)) continue;
      const AffineRoot moved = group.act(w, alpha);
      if (sign_on_facet(datum, moved.root, moved.offset, left) <= 0) ++count;
    }
  }
  return count;
}

bool LengthWordOrder::operator()(const Element& a, const Element& b) const {
  const int la = group->length(a), lb = group->length(b);
  if (la != lb) return la < lb;
  return format_element(*group, a) < format_element(*group, b);
}

void sort_by_length_word(const AffineWeyl& group, std::vector<Element>& elements) {
  struct Keyed {
    int length;
    Word word;
    std::string text;
    Element element;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(elements.size());
  for (auto& e : elements) {
    Keyed k{group.length(e), {}, {}, std::move(e)};
    if (k.element.omega.empty())
      k.word = group.reduced_word(k.element);
    else
      k.text = format_element(group, k.element);
    keyed.push_back(std::move(k));
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.length != b.length) return a.length < b.length;
    if (a.word != b.word) return a.word < b.word;
    return a.text < b.text;
  });
  elements.clear();
  for (auto& k : keyed) elements.push_back(std::move(k.element));
}

std::vector<Element> enumerate_reps(const AffineWeyl& group, Facet left, Facet right, int bound) {
  require_proper(group, left);
  require_proper(group, right);
  if (bound < 0) throw InvalidArgument("length bound must be non-negative");
  // Level-by-level walk over W^right: every x in W^right of length k+1
  // has a left descent s with s x in W^right of length k.
  std::unordered_set<Element, ElementHash> seen{group.identity()};
  std::vector<Element> level{group.identity()};
  std::vector<Element> reps;
  for (int k = 0; k <= bound && !level.empty(); ++k) {
    std::vector<Element> next;
    for (const auto& x : level) {
      if (is_maxmin_rep(group, x, left, right)) reps.push_back(x);
      if (k == bound) continue;
      for (int i = 0; i <= group.rank(); ++i) {
        Element y = min_right_rep(group, group.left_mult(i, x), right);
        if (group.length(y) != k + 1) continue;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    level = std::move(next);
  }
  sort_by_length_word(group, reps);
  return reps;
}

Element longest_rep(const AffineWeyl& group, Facet f, Facet f_sub) {
  require_proper(group, f);
  if (!f_sub.subset_of(f))
    throw InvalidArgument("facet {" + f_sub.to_string() + "} is not contained in {" + f.to_string() + "}");
  Element best = group.identity();
  int best_len = 0;
  for (const auto& x : parabolic_subgroup(group, f)) {
    bool minimal = true;
    for (int i : f_sub.nodes())
      if (group.is_descent(x, i, Side::Right)) {
        minimal = false;
        break;
      }
    const int lx = group.length(x);
    if (minimal && lx > best_len) {
      best = x;
      best_len = lx;
    }
  }
  return best;
}

int longest_rep_length(const AffineWeyl& group, Facet f, Facet f_sub) {
  return group.length(longest_rep(group, f, f_sub));
}

}  // namespace affweyl
