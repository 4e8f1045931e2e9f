#include "wonderk/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace wonderk {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector> &columns) {
  if (columns.empty())
    return {};
  IntMatrix m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < m.rows_; ++i)
      m(i, j) = columns[j].at(i);
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector> &rows) {
  if (rows.empty())
    return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols_; ++j)
      m(i, j) = rows[i].at(j);
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::operator*(const IntMatrix &other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto a = (*this)(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out(i, j) += a * other(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(std::span<const std::int64_t> v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("IntMatrix: vector length mismatch");
  IntVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

std::int64_t gcd_of(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v)
    g = std::gcd(g, x);
  return g;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

Integer determinant(const IntMatrix &m) {
  const std::size_t n = m.rows();
  if (n != m.cols())
    throw std::invalid_argument("determinant: matrix not square");
  if (n == 0)
    return 1;
  std::vector<Integer> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i * n + j] = static_cast<long>(m(i, j));
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0)
        ++p;
      if (p == n)
        return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a[k * n + k] * a[i * n + j] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

IntMatrix unimodular_completion(std::span<const std::int64_t> p) {
  const std::size_t n = p.size();
  IntVector v(p.begin(), p.end());
  IntMatrix u = IntMatrix::identity(n);
  // Euclid on adjacent pairs from the bottom up; each step is a 2x2
  // unimodular row operation applied to both v and u.
  for (std::size_t idx = n; idx-- > 1;) {
    const std::int64_t a = v[idx - 1];
    const std::int64_t b = v[idx];
    if (b == 0)
      continue;
    // extended gcd: x*a + y*b = g
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const std::int64_t q = old_r / r;
      std::int64_t tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_s - q * s;
      old_s = s;
      s = tmp;
      tmp = old_t - q * t;
      old_t = t;
      t = tmp;
    }
    std::int64_t g = old_r, x = old_s, y = old_t;
    if (g < 0) {
      g = -g;
      x = -x;
      y = -y;
    }
    const std::int64_t c = -b / g, d = a / g; // [[x, y], [c, d]] has det 1
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t top = u(idx - 1, j), bottom = u(idx, j);
      u(idx - 1, j) = x * top + y * bottom;
      u(idx, j) = c * top + d * bottom;
    }
    v[idx - 1] = g;
    v[idx] = 0;
  }
  if (v[0] == -1) {
    for (std::size_t j = 0; j < n; ++j)
      u(0, j) = -u(0, j);
    v[0] = 1;
  }
  if (v[0] != 1)
    throw std::invalid_argument("unimodular_completion: vector not primitive");
  return u;
}

namespace {

IntMatrix minor_matrix(const IntMatrix &m, std::size_t skip_row, std::size_t skip_col) {
  IntMatrix out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == skip_row)
      continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == skip_col)
        continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

} // namespace

std::optional<IntMatrix> unimodular_inverse(const IntMatrix &m) {
  const std::size_t n = m.rows();
  const Integer det = determinant(m);
  if (abs(det) != 1)
    return std::nullopt;
  const long d = det.get_si();
  IntMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = d;
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long cof = determinant(minor_matrix(m, j, i)).get_si();
      inv(i, j) = (((i + j) % 2) ? -cof : cof) * d;
    }
  return inv;
}

IntVector primitive_orthogonal(const std::vector<IntVector> &vectors) {
  if (vectors.empty())
    throw std::invalid_argument("primitive_orthogonal: no vectors");
  const std::size_t n = vectors.front().size();
  if (vectors.size() + 1 != n)
    throw std::invalid_argument("primitive_orthogonal: need n-1 vectors in Z^n");
  IntVector out(n);
  if (n == 1) {
    out[0] = 1;
    return out;
  }
  // generalized cross product: signed maximal minors
  const IntMatrix rows = IntMatrix::from_rows(vectors);
  for (std::size_t k = 0; k < n; ++k) {
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t i = 0; i < n - 1; ++i)
      for (std::size_t j = 0, oj = 0; j < n; ++j)
        if (j != k)
          sub(i, oj++) = rows(i, j);
    const long m = determinant(sub).get_si();
    out[k] = (k % 2) ? -m : m;
  }
  const std::int64_t g = gcd_of(out);
  if (g == 0)
    throw std::invalid_argument("primitive_orthogonal: vectors are dependent");
  for (auto &x : out)
    x /= g;
  return out;
}

Integer maximal_minor_gcd(const std::vector<IntVector> &columns) {
  if (columns.empty())
    return 1;
  const std::size_t n = columns.front().size();
  const std::size_t k = columns.size();
  if (k > n)
    return 0;
  Integer g = 0;
  // enumerate k-subsets of rows
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        sub(i, j) = columns[j][pick[i]];
    Integer d = determinant(sub);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j)
      pick[j] = pick[j - 1] + 1;
  }
  return g;
}

std::string to_string(const IntVector &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

} // namespace wonderk
