#include "affweyl/lattice.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace affweyl {

Int dot(std::span<const Int> a, std::span<const Int> b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(std::span<const Int> a, std::span<const Int> b) {
  assert(a.size() == b.size());
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(std::span<const Int> a, std::span<const Int> b) {
  assert(a.size() == b.size());
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec negate(std::span<const Int> a) { return scale(a, -1); }

IntVec scale(std::span<const Int> a, Int factor) {
  IntVec r(a.begin(), a.end());
  for (auto& x : r) x *= factor;
  return r;
}

bool is_zero(std::span<const Int> a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

std::string to_string(std::span<const Int> a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

IntMatrix::IntMatrix(const std::vector<std::vector<Int>>& rows) : IntMatrix(static_cast<int>(rows.size())) {
  for (int r = 0; r < n_; ++r) {
    if (static_cast<int>(rows[r].size()) != n_) throw std::invalid_argument("matrix rows must form a square");
    for (int c = 0; c < n_; ++c) (*this)(r, c) = rows[r][c];
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVec IntMatrix::apply(std::span<const Int> x) const {
  assert(static_cast<int>(x.size()) == n_);
  IntVec r(n_, 0);
  for (int i = 0; i < n_; ++i) {
    Int s = 0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

IntVec IntMatrix::apply_transpose(std::span<const Int> x) const {
  assert(static_cast<int>(x.size()) == n_);
  IntVec r(n_, 0);
  for (int j = 0; j < n_; ++j) {
    Int s = 0;
    for (int i = 0; i < n_; ++i) s += (*this)(i, j) * x[i];
    r[j] = s;
  }
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  assert(n_ == rhs.n_);
  IntMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      Int a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n_; ++j) r(i, j) += a * rhs(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

}  // namespace affweyl
