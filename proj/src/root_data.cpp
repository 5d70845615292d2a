#include "affweyl/root_data.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "affweyl/error.hpp"

namespace affweyl {

namespace {

// Exact fraction in lowest terms with positive denominator.
struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int n, Int d = 1) : num(n), den(d) {  // NOLINT(google-explicit-constructor)
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const Int g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Int numerator() const { return num; }
  Int denominator() const { return den; }

  friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend Rational operator/(Rational a, Rational b) { return {a.num * b.den, a.den * b.num}; }
  Rational& operator-=(Rational b) { return *this = *this - b; }
  bool operator==(Int v) const { return den == 1 && num == v; }
};

RootVec unit(int dim, int i, Int c = 1) {
  RootVec v(dim, 0);
  v[i] = c;
  return v;
}

RootVec combo(int dim, int i, Int ci, int j, Int cj) {
  RootVec v(dim, 0);
  v[i] += ci;
  v[j] += cj;
  return v;
}

// Solves sum_k x_k * columns[k] = rhs exactly. Returns nullopt when the
// system is inconsistent. Columns are assumed linearly independent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<RootVec>& columns,
                                                   std::span<const Int> rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t cols = columns.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = columns[c][r];
    a[r][cols] = rhs[r];
  }
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_col_of_row;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[pivot_row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[pivot_row][c];
      for (std::size_t k = c; k <= cols; ++k) a[r][k] -= f * a[pivot_row][k];
    }
    pivot_col_of_row.push_back(c);
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r)
    if (a[r][cols] != 0) return std::nullopt;
  assert(pivot_row == cols);
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < pivot_row; ++r) {
    std::size_t c = pivot_col_of_row[r];
    x[c] = a[r][cols] / a[r][c];
  }
  return x;
}

}  // namespace

char type_letter(RootType t) {
  switch (t) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
  }
  return '?';
}

RootType parse_root_type(char letter) {
  switch (letter) {
    case 'A': case 'a': return RootType::A;
    case 'B': case 'b': return RootType::B;
    case 'C': case 'c': return RootType::C;
    case 'D': case 'd': return RootType::D;
    default:
      throw InvalidArgument(std::string("unsupported root system type '") + letter +
                            "' (supported: A, B, C, D)");
  }
}

CartanDatum CartanDatum::build(char letter, int rank) {
  return build(parse_root_type(letter), rank);
}

CartanDatum CartanDatum::build(RootType type, int rank) {
  const int min_rank = type == RootType::D ? 4 : (type == RootType::B ? 2 : 1);
  if (rank < min_rank)
    throw InvalidArgument(std::string("type ") + type_letter(type) + " requires rank >= " +
                          std::to_string(min_rank) + ", got " + std::to_string(rank));
  if (rank > 8) throw InvalidArgument("rank above 8 is not supported");

  CartanDatum d;
  d.type_ = type;
  d.rank_ = rank;
  const int m = rank;
  switch (type) {
    case RootType::A:
      d.dim_ = m + 1;
      for (int i = 0; i < m + 1; ++i)
        for (int j = i + 1; j < m + 1; ++j) d.positive_.push_back(combo(d.dim_, i, 1, j, -1));
      for (int i = 0; i < m; ++i) d.simple_.push_back(combo(d.dim_, i, 1, i + 1, -1));
      break;
    case RootType::B:
    case RootType::C:
    case RootType::D: {
      d.dim_ = m;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          d.positive_.push_back(combo(m, i, 1, j, -1));
          d.positive_.push_back(combo(m, i, 1, j, 1));
        }
      if (type == RootType::B)
        for (int i = 0; i < m; ++i) d.positive_.push_back(unit(m, i));
      if (type == RootType::C)
        for (int i = 0; i < m; ++i) d.positive_.push_back(unit(m, i, 2));
      for (int i = 0; i + 1 < m; ++i) d.simple_.push_back(combo(m, i, 1, i + 1, -1));
      if (type == RootType::B) d.simple_.push_back(unit(m, m - 1));
      if (type == RootType::C) d.simple_.push_back(unit(m, m - 1, 2));
      if (type == RootType::D) d.simple_.push_back(combo(m, m - 2, 1, m - 1, 1));
      break;
    }
  }
  d.finish();
  return d;
}

void CartanDatum::finish() {
  const int m = rank_;
  // Simple-root coordinates by closure from the simple roots.
  std::map<RootVec, IntVec> coords;
  for (int i = 0; i < m; ++i) {
    IntVec c(m, 0);
    c[i] = 1;
    coords[simple_[i]] = c;
  }
  std::map<RootVec, int> positive_set;
  for (std::size_t k = 0; k < positive_.size(); ++k) positive_set[positive_[k]] = static_cast<int>(k);
  std::vector<RootVec> frontier(simple_.begin(), simple_.end());
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const auto& r : frontier)
      for (int i = 0; i < m; ++i) {
        RootVec s = add(r, simple_[i]);
        if (!positive_set.contains(s) || coords.contains(s)) continue;
        IntVec c = coords[r];
        c[i] += 1;
        coords[s] = c;
        next.push_back(s);
      }
    frontier = std::move(next);
  }
  if (coords.size() != positive_.size())
    throw InvariantViolation("positive roots are not generated by the simple roots");

  auto height = [&](const RootVec& r) {
    Int h = 0;
    for (Int c : coords[r]) h += c;
    return h;
  };
  std::sort(positive_.begin(), positive_.end(), [&](const RootVec& a, const RootVec& b) {
    Int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return coords[a] > coords[b];
  });

  const int np = static_cast<int>(positive_.size());
  roots_ = positive_;
  for (const auto& r : positive_) roots_.push_back(negate(r));
  for (int k = 0; k < static_cast<int>(roots_.size()); ++k) index_[roots_[k]] = k;

  simple_coords_.resize(roots_.size());
  for (int k = 0; k < np; ++k) {
    simple_coords_[k] = coords[positive_[k]];
    simple_coords_[k + np] = negate(simple_coords_[k]);
  }

  coroots_.clear();
  for (const auto& r : roots_) coroots_.push_back(coroot_of(r));

  highest_ = np - 1;  // unique root of maximal height after sorting
  two_rho_.assign(dim_, 0);
  for (const auto& r : positive_) two_rho_ = add(two_rho_, r);

  marks_.assign(m + 1, 1);
  for (int i = 0; i < m; ++i) marks_[i + 1] = simple_coords_[highest_][i];

  coxeter_.assign(m + 1, std::vector<int>(m + 1, 1));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) {
      if (i == j) continue;
      RootVec a = node_root(i), b = node_root(j);
      Int p = dot(coroot_of(a), b) * dot(coroot_of(b), a);
      switch (p) {
        case 0: coxeter_[i][j] = 2; break;
        case 1: coxeter_[i][j] = 3; break;
        case 2: coxeter_[i][j] = 4; break;
        case 3: coxeter_[i][j] = 6; break;
        default: coxeter_[i][j] = 0; break;  // infinite (affine A_1)
      }
    }
}

int CartanDatum::negative_of(int root) const {
  const int np = num_positive();
  return root < np ? root + np : root - np;
}

std::optional<int> CartanDatum::root_index(std::span<const Int> v) const {
  auto it = index_.find(RootVec(v.begin(), v.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool CartanDatum::is_positive(std::span<const Int> root) const { return dot(two_rho_, root) > 0; }

RootVec CartanDatum::coroot_of(std::span<const Int> root) const {
  const Int norm = dot(root, root);
  RootVec c(root.begin(), root.end());
  for (auto& x : c) {
    if ((2 * x) % norm != 0) throw InvariantViolation("coroot is not integral in ambient coordinates");
    x = 2 * x / norm;
  }
  return c;
}

Int CartanDatum::cartan(int i, int j) const {
  return dot(coroot_of(simple_[i - 1]), simple_[j - 1]);
}

RootVec CartanDatum::node_root(int i) const {
  if (i < 0 || i > rank_) throw InvalidArgument("node index out of range: " + std::to_string(i));
  return i == 0 ? negate(highest_root()) : simple_[i - 1];
}

std::optional<IntVec> CartanDatum::coroot_coordinates(std::span<const Int> mu) const {
  if (static_cast<int>(mu.size()) != dim_) return std::nullopt;
  std::vector<RootVec> simple_coroots;
  for (const auto& a : simple_) simple_coroots.push_back(coroot_of(a));
  auto x = solve_columns(simple_coroots, mu);
  if (!x) return std::nullopt;
  IntVec out;
  for (const auto& q : *x) {
    if (q.denominator() != 1) return std::nullopt;
    out.push_back(q.numerator());
  }
  return out;
}

bool CartanDatum::in_coroot_lattice(std::span<const Int> mu) const {
  return coroot_coordinates(mu).has_value();
}

Int pairing(std::span<const Int> mu, std::span<const Int> root) { return dot(mu, root); }

bool affine_root_positive_on_C(const CartanDatum& datum, const AffineRoot& alpha) {
  return alpha.offset >= 1 || (alpha.offset == 0 && datum.is_positive_root(alpha.root));
}

}  // namespace affweyl
