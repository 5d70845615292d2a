#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "affweyl/lattice.hpp"
#include "affweyl/root_data.hpp"

namespace affweyl {

// Letters are affine node indices 0..m.
using Word = std::vector<int>;

// Permutation of the affine nodes 0..m; empty means the identity.
using NodePerm = std::vector<int>;

/// An element omega * t_lambda * v of the extended affine Weyl group, in
/// canonical form. t_lambda * v acts on V by x -> v(x) + lambda and
/// omega is an abstract length-zero label acting on the affine diagram
/// by omega s_i omega^-1 = s_{omega(i)}.
struct Element {
  Coweight translation;
  IntMatrix finite;
  NodePerm omega;

  bool operator==(const Element&) const = default;
};

struct ElementHash {
  std::size_t operator()(const Element& x) const noexcept;
};

enum class Side { Left, Right };

/// The affine Weyl group Q^vee x| W_0 of a Cartan datum, optionally
/// extended by length-zero diagram automorphisms.
class AffineWeyl {
 public:
  explicit AffineWeyl(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  int num_nodes() const { return datum_.num_nodes(); }

  Element identity() const;
  Element simple_reflection(int i) const;
  Element from_translation(const Coweight& mu) const;
  Element from_word(const Word& word) const;
  // Validates lambda in Q^vee, v in W_0 and omega a diagram automorphism.
  Element from_parts(Coweight lambda, IntMatrix v, NodePerm omega = {}) const;
  // Pure length-zero element omega.
  Element from_omega(NodePerm omega) const;

  bool is_diagram_automorphism(const NodePerm& omega) const;
  bool in_finite_weyl_group(const IntMatrix& v) const;

  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  Element left_mult(int i, const Element& x) const;
  Element right_mult(const Element& x, int i) const;

  // Length of the affine-Weyl part; omega labels have length zero.
  int length(const Element& x) const;

  bool is_descent(const Element& x, int i, Side side) const;
  std::vector<int> descents(const Element& x, Side side) const;

  // Reduced word of an element with trivial omega label, built by
  // repeatedly stripping the smallest left descent.
  Word reduced_word(const Element& x) const;

  bool bruhat_leq(const Element& u, const Element& w) const;

  // Action on affine roots: w(alpha)(x) = alpha(w^-1 x).
  AffineRoot act(const Element& w, const AffineRoot& alpha) const;

  // Evaluates an affine map element on a point given as numerators over a
  // common positive denominator (result has the same denominator).
  IntVec apply_to_point(const Element& w, std::span<const Int> numerators, Int denominator) const;

 private:
  Element conjugate_by_omega(const Element& a, const NodePerm& omega, bool inverse_side) const;
  void require_plain(const Element& x, const char* what) const;

  CartanDatum datum_;
  std::vector<Element> simple_;
};

bool is_identity_perm(const NodePerm& p);
NodePerm compose(const NodePerm& a, const NodePerm& b);  // (a*b)(i) = a(b(i))
NodePerm invert(const NodePerm& p);

// Text syntax: "w:0,1,0", "t:-1,0|id", "t:-1,0|w:1,2,1", optionally
// followed by "|o:1,0" giving the omega permutation.
Element parse_element(const AffineWeyl& group, std::string_view text);
Word parse_word(std::string_view text);
std::string format_word(const Word& word);  // "w:0,1,0"
std::string format_element(const AffineWeyl& group, const Element& x);

}  // namespace affweyl
