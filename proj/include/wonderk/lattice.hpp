#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wonderk {

using Integer = mpz_class;
using IntVector = std::vector<std::int64_t>;

/// Small dense integer matrix, row-major.  Used for Cartan matrices, Weyl
/// group actions and cone ray matrices; dimensions never exceed a few dozen.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<IntVector> &columns);
  static IntMatrix from_rows(const std::vector<IntVector> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t &operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  const std::vector<std::int64_t> &data() const { return data_; }

  IntMatrix operator*(const IntMatrix &other) const;
  IntVector operator*(std::span<const std::int64_t> v) const;
  IntMatrix transpose() const;

  bool operator==(const IntMatrix &) const = default;
  auto operator<=>(const IntMatrix &) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::int64_t gcd_of(std::span<const std::int64_t> v);

/// Exact determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix &m);

/// Unimodular U with U * p = e_1.  Requires p primitive.
IntMatrix unimodular_completion(std::span<const std::int64_t> p);

/// Inverse of a unimodular matrix; nullopt when |det| != 1.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix &m);

/// Primitive integer generator of the rank-1 lattice orthogonal (for the
/// standard pairing) to the given n-1 linearly independent vectors in Z^n.
IntVector primitive_orthogonal(const std::vector<IntVector> &vectors);

/// gcd of all maximal minors of the n x k matrix with the given columns;
/// the columns extend to a lattice basis iff this is 1.
Integer maximal_minor_gcd(const std::vector<IntVector> &columns);

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

std::string to_string(const IntVector &v);

} // namespace wonderk
