#pragma once

#include <vector>

#include "affweyl/cosets.hpp"

namespace affweyl {

/// One factor of a resolutive sequence: parahoric pair (P, Q) and the
/// factor w_i in W_P, which is the longest element of (W_P)^Q.
struct ResolutionStep {
  Facet P;
  Facet Q;
  Element factor;
};

// Nodes i with l((s_i w)^F) <= l(w^F): the stabilizer of the
// (B, P_F)-Schubert variety of w.
Facet stabilizer_parahoric(const AffineWeyl& group, const Element& w, Facet f);

// Unique length-additive factorization w = w_1 ... w_n driven by
// successive stabilizers. Requires w = w^F.
std::vector<ResolutionStep> resolutive_sequence(const AffineWeyl& group, const Element& w, Facet f);

// Sum of the fiber dimensions l(longest of (W_{P_i})^{Q_i}).
int bott_samelson_dim(const AffineWeyl& group, const std::vector<ResolutionStep>& steps);

// Product of factors first..end (all of them by default).
Element product_of_factors(const AffineWeyl& group, const std::vector<ResolutionStep>& steps,
                           std::size_t first = 0);

/// Resolution data for the Schubert variety of e^{-mu_p},
/// mu_p = (1^(p), 0^(m-p)), in the affine Grassmannian of type C_m.
struct UnitaryExample {
  AffineWeyl group;
  int m = 0;
  int p = 0;
  Coweight mu_p;
  Int dim = 0;
  Facet Q_p;
  Element w_p2;
  int strata_count = 0;
  std::vector<ResolutionStep> steps;
};

UnitaryExample unitary_example(int m, int p);

// Reduced word of w_{p,2}: the blocks (s_0 s_1 ... s_{i-1}) for
// i = p, p-1, ..., 1, multiplied left to right.
Word unitary_w_p2_word(int p);

}  // namespace affweyl
