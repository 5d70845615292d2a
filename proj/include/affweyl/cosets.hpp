#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affweyl/weyl.hpp"

namespace affweyl {

/// A facet in the closure of the base alcove, given by the set of affine
/// nodes whose walls contain it. The empty set is the alcove itself and
/// {1..m} is the special vertex at the origin.
class Facet {
 public:
  Facet() = default;
  static Facet from_nodes(std::span<const int> nodes);
  static Facet special(int rank);
  // "1,2" or "none"; also accepts the empty string as "none".
  static Facet parse(std::string_view text);

  bool contains(int node) const { return node >= 0 && node < 32 && ((mask_ >> node) & 1U); }
  bool empty() const { return mask_ == 0; }
  std::vector<int> nodes() const;
  std::uint32_t mask() const { return mask_; }

  Facet intersect(Facet other) const { return Facet(mask_ & other.mask_); }
  bool subset_of(Facet other) const { return (mask_ & ~other.mask_) == 0; }

  std::string to_string() const;  // "1,2" or "none"

  bool operator==(const Facet&) const = default;
  auto operator<=>(const Facet&) const = default;

 private:
  explicit Facet(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

bool is_proper(const AffineWeyl& group, Facet f);
// Throws InvalidArgument unless f is a proper subset of 0..m.
void require_proper(const AffineWeyl& group, Facet f);
std::vector<Facet> proper_facets(const AffineWeyl& group);

// All elements of the finite parabolic subgroup W_F.
std::vector<Element> parabolic_subgroup(const AffineWeyl& group, Facet f);

// w^F: the unique minimal-length element of w W_F.
Element min_right_rep(const AffineWeyl& group, const Element& w, Facet f);
// ^F w: the unique minimal-length element of W_F w.
Element min_left_rep(const AffineWeyl& group, const Element& w, Facet f);

// _{F'}w^F: the element of maximal length among (v w)^F, v in W_{F'}.
Element maxmin_rep(const AffineWeyl& group, const Element& w, Facet left, Facet right);
bool is_maxmin_rep(const AffineWeyl& group, const Element& w, Facet left, Facet right);

// Counts affine roots alpha outside Sigma(right) with alpha(C) > 0 and
// w(alpha) <= 0 on the facet `left`. Equals l(maxmin_rep(w, left, right)).
int waldspurger_length(const AffineWeyl& group, const Element& w, Facet left, Facet right);

// All max-min representatives of length <= bound, sorted by
// (length, reduced word).
std::vector<Element> enumerate_reps(const AffineWeyl& group, Facet left, Facet right, int bound);

// Longest element of (W_F)^{F_sub}, the minimal representatives of
// W_F / W_{F_sub}.
Element longest_rep(const AffineWeyl& group, Facet f, Facet f_sub);
int longest_rep_length(const AffineWeyl& group, Facet f, Facet f_sub);

// Sign (-1, 0, +1) of the affine function root + offset on the relatively
// open facet f, evaluated exactly at its barycenter.
int sign_on_facet(const CartanDatum& datum, int root, Int offset, Facet f);
// True iff root + offset vanishes identically on f.
bool vanishes_on_facet(const CartanDatum& datum, int root, Int offset, Facet f);

// Strict weak order on elements: by length, then reduced word.
struct LengthWordOrder {
  const AffineWeyl* group;
  bool operator()(const Element& a, const Element& b) const;
};
void sort_by_length_word(const AffineWeyl& group, std::vector<Element>& elements);

}  // namespace affweyl
