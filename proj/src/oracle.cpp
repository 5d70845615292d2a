#include "affweyl/oracle.hpp"

#include <limits>
#include <string>

#include "affweyl/error.hpp"

namespace affweyl {

std::vector<std::size_t> Ball::level_sizes() const {
  std::vector<std::size_t> sizes(radius_ + 1, 0);
  for (const auto& [x, l] : members_) ++sizes[l];
  return sizes;
}

const Word& Ball::word(const Element& x) const {
  auto it = words_.find(x);
  if (it == words_.end()) throw InvalidArgument("element outside the ball of radius " + std::to_string(radius_));
  return it->second;
}

Ball bfs_ball(const AffineWeyl& group, int radius, std::size_t limit) {
  if (radius < 0) throw InvalidArgument("ball radius must be non-negative");
  Ball ball;
  ball.group_ = &group;
  ball.radius_ = radius;
  const Element e = group.identity();
  ball.members_.emplace(e, 0);
  ball.words_.emplace(e, Word{});
  ball.order_.push_back(e);
  std::vector<Element> level{e};
  for (int k = 1; k <= radius; ++k) {
    std::vector<Element> next;
    for (const auto& x : level) {
      const Word& wx = ball.words_.at(x);
      for (int i = 0; i <= group.rank(); ++i) {
        Element y = group.right_mult(x, i);
        if (ball.members_.contains(y)) continue;
        Word wy = wx;
        wy.push_back(i);
        ball.members_.emplace(y, k);
        ball.words_.emplace(y, std::move(wy));
        ball.order_.push_back(y);
        next.push_back(std::move(y));
        if (ball.members_.size() > limit)
          throw LimitExceeded("ball of radius " + std::to_string(radius) + " exceeds the limit of " +
                              std::to_string(limit) + " elements");
      }
    }
    level = std::move(next);
  }
  return ball;
}

int oracle_length(const Ball& ball, const Element& x) {
  auto it = ball.members().find(x);
  if (it == ball.members().end())
    throw InvalidArgument("element outside the ball of radius " + std::to_string(ball.radius()));
  return it->second;
}

std::unordered_set<Element, ElementHash> subword_products(const AffineWeyl& group, const Word& word) {
  std::unordered_set<Element, ElementHash> reach{group.identity()};
  for (int letter : word) {
    std::vector<Element> extended;
    extended.reserve(reach.size());
    for (const auto& x : reach) extended.push_back(group.right_mult(x, letter));
    for (auto& y : extended) reach.insert(std::move(y));
  }
  return reach;
}

bool oracle_bruhat(const AffineWeyl& group, const Element& u, const Word& reduced_word_of_w) {
  return subword_products(group, reduced_word_of_w).contains(u);
}

bool oracle_bruhat(const Ball& ball, const Element& u, const Element& w) {
  if (!ball.contains(u))
    throw InvalidArgument("element outside the ball of radius " + std::to_string(ball.radius()));
  return oracle_bruhat(ball.group(), u, ball.word(w));
}

int oracle_inversion_count(const AffineWeyl& group, const Element& w) {
  const CartanDatum& datum = group.datum();
  // Root coordinates are bounded by 2, so |<lambda, b>| <= 2 sum |lambda_i|.
  Int kmax = 1;
  for (Int c : w.translation) kmax += 2 * (c < 0 ? -c : c);
  int count = 0;
  for (int r = 0; r < static_cast<int>(datum.roots().size()); ++r)
    for (Int k = 0; k <= kmax; ++k) {
      const AffineRoot alpha{r, k};
      if (!affine_root_positive_on_C(datum, alpha)) continue;
      if (!affine_root_positive_on_C(datum, group.act(w, alpha))) ++count;
    }
  return count;
}

MaxMinResult oracle_maxmin(const AffineWeyl& group, const Element& w, Facet left, Facet right) {
  const auto wl = parabolic_subgroup(group, left);
  const auto wr = parabolic_subgroup(group, right);
  MaxMinResult best{group.identity(), -1};
  for (const auto& u : wl) {
    const Element uw = group.multiply(u, w);
    Element arg;
    int lo = std::numeric_limits<int>::max();
    for (const auto& v : wr) {
      Element x = group.multiply(uw, v);
      const int l = group.length(x);
      if (l < lo) {
        lo = l;
        arg = std::move(x);
      }
    }
    if (lo > best.value) best = MaxMinResult{std::move(arg), lo};
  }
  return best;
}

}  // namespace affweyl
