#pragma once

// Brute-force ground truth built only from words, breadth-first search and
// the canonical-form group law. Used by the test suites and `--verify`.

#include <cstddef>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "affweyl/cosets.hpp"

namespace affweyl {

inline constexpr std::size_t kDefaultBallLimit = 2'000'000;

/// All elements of word length <= radius, with BFS levels as lengths.
class Ball {
 public:
  const AffineWeyl& group() const { return *group_; }
  int radius() const { return radius_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Element& x) const { return members_.contains(x); }

  // Level sizes 0..radius.
  std::vector<std::size_t> level_sizes() const;
  const std::unordered_map<Element, int, ElementHash>& members() const { return members_; }
  const Word& word(const Element& x) const;
  // Members in BFS discovery order.
  const std::vector<Element>& ordered() const { return order_; }

 private:
  friend Ball bfs_ball(const AffineWeyl&, int, std::size_t);
  const AffineWeyl* group_ = nullptr;
  int radius_ = 0;
  std::unordered_map<Element, int, ElementHash> members_;
  std::unordered_map<Element, Word, ElementHash> words_;
  std::vector<Element> order_;
};

Ball bfs_ball(const AffineWeyl& group, int radius, std::size_t limit = kDefaultBallLimit);

int oracle_length(const Ball& ball, const Element& x);

// All products of subwords of `word`.
std::unordered_set<Element, ElementHash> subword_products(const AffineWeyl& group, const Word& word);
// u <= w iff u is a subword product of the stored reduced word of w.
bool oracle_bruhat(const Ball& ball, const Element& u, const Element& w);
bool oracle_bruhat(const AffineWeyl& group, const Element& u, const Word& reduced_word_of_w);

// Number of affine roots positive on C that w sends to roots negative on C,
// counted directly from the affine-root action.
int oracle_inversion_count(const AffineWeyl& group, const Element& w);

struct MaxMinResult {
  Element element;
  int value = 0;
};

// Max over u in W_left of min over v in W_right of l(u w v), by
// exhaustive search over both finite parabolic subgroups.
MaxMinResult oracle_maxmin(const AffineWeyl& group, const Element& w, Facet left, Facet right);

}  // namespace affweyl
