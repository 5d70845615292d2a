#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace affweyl {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

// Coordinates of a coweight in the translation lattice.
using Coweight = IntVec;
// Coordinates of a (finite) root in the same ambient basis.
using RootVec = IntVec;

Int dot(std::span<const Int> a, std::span<const Int> b);
IntVec add(std::span<const Int> a, std::span<const Int> b);
IntVec sub(std::span<const Int> a, std::span<const Int> b);
IntVec negate(std::span<const Int> a);
IntVec scale(std::span<const Int> a, Int factor);
bool is_zero(std::span<const Int> a);
std::string to_string(std::span<const Int> a);

// Square integer matrix acting on column vectors, row-major storage.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  // Square matrix from its rows; throws std::invalid_argument if ragged.
  explicit IntMatrix(const std::vector<std::vector<Int>>& rows);

  static IntMatrix identity(int n);

  int size() const { return n_; }
  Int& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  Int operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  std::span<const Int> data() const { return a_; }

  IntVec apply(std::span<const Int> x) const;
  IntVec apply_transpose(std::span<const Int> x) const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transpose() const;
  bool is_identity() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<Int> a_;
};

}  // namespace affweyl
