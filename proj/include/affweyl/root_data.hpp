#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "affweyl/lattice.hpp"

namespace affweyl {

enum class RootType { A, B, C, D };

char type_letter(RootType t);
RootType parse_root_type(char letter);

/// A finite reduced root system together with the data of its affine
/// extension: roots and coroots as integer vectors in an ambient basis,
/// 2rho, the highest root and the affine Coxeter matrix.
///
/// Ambient coordinates: type A_m lives in Z^{m+1} (sum-zero hyperplane),
/// types B_m, C_m, D_m in Z^m. For C_m the positive roots are
/// e_i - e_j, e_i + e_j (i < j) and 2e_i, with simple roots
/// e_1 - e_2, ..., e_{m-1} - e_m, 2e_m.
///
/// Affine nodes are numbered 0..m, node 0 being the affine simple root
/// -theta + 1 and node i >= 1 the finite simple root alpha_i.
class CartanDatum {
 public:
  static CartanDatum build(RootType type, int rank);
  static CartanDatum build(char type_letter, int rank);

  RootType type() const { return type_; }
  char letter() const { return type_letter(type_); }
  int rank() const { return rank_; }
  int dimension() const { return dim_; }
  int num_nodes() const { return rank_ + 1; }

  // Simple root alpha_i sits at index i-1.
  const std::vector<RootVec>& simple_roots() const { return simple_; }
  const std::vector<RootVec>& positive_roots() const { return positive_; }
  // All roots; the first num_positive() are positive and root
  // num_positive() + k is the negative of root k.
  const std::vector<RootVec>& roots() const { return roots_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  int negative_of(int root) const;

  std::optional<int> root_index(std::span<const Int> v) const;
  bool is_root(std::span<const Int> v) const { return root_index(v).has_value(); }
  bool is_positive_root(int root) const { return root < num_positive(); }
  // Sign test valid for any root vector (pairs with 2rho).
  bool is_positive(std::span<const Int> root) const;

  const RootVec& coroot(int root) const { return coroots_[root]; }
  RootVec coroot_of(std::span<const Int> root) const;

  const RootVec& highest_root() const { return roots_[highest_]; }
  const Coweight& highest_coroot() const { return coroots_[highest_]; }
  const IntVec& two_rho() const { return two_rho_; }

  // Coefficients of a root in the simple roots (length rank()).
  const IntVec& simple_coordinates(int root) const { return simple_coords_[root]; }
  // Coefficients c_i of theta = sum c_i alpha_i; entry 0 is set to 1.
  const IntVec& marks() const { return marks_; }

  // Cartan matrix entry <alpha_i^vee, alpha_j> for finite nodes 1..m.
  Int cartan(int i, int j) const;
  // Coxeter exponent m(i,j) of the affine diagram; 0 encodes infinity.
  int coxeter_order(int i, int j) const { return coxeter_[i][j]; }

  // Finite part of affine simple root i (node 0 gives -theta).
  RootVec node_root(int i) const;
  Int node_offset(int i) const { return i == 0 ? 1 : 0; }

  // Coefficients of mu in the simple coroots, if mu lies in their Z-span.
  std::optional<IntVec> coroot_coordinates(std::span<const Int> mu) const;
  bool in_coroot_lattice(std::span<const Int> mu) const;

 private:
  CartanDatum() = default;
  void finish();

  RootType type_ = RootType::A;
  int rank_ = 0;
  int dim_ = 0;
  std::vector<RootVec> simple_;
  std::vector<RootVec> positive_;
  std::vector<RootVec> roots_;
  std::vector<RootVec> coroots_;
  std::vector<IntVec> simple_coords_;
  std::map<RootVec, int> index_;
  int highest_ = 0;
  IntVec two_rho_;
  IntVec marks_;
  std::vector<std::vector<int>> coxeter_;
};

// The natural pairing between coweights and roots (a dot product in the
// ambient coordinates).
Int pairing(std::span<const Int> mu, std::span<const Int> root);

/// An affine root a + k: the function x -> <x, a> + k on V.
struct AffineRoot {
  int root = 0;  // index into CartanDatum::roots()
  Int offset = 0;

  bool operator==(const AffineRoot&) const = default;
  auto operator<=>(const AffineRoot&) const = default;
};

// Positive on the base alcove C = {0 < alpha_i(x), theta(x) < 1}.
bool affine_root_positive_on_C(const CartanDatum& datum, const AffineRoot& alpha);

}  // namespace affweyl
