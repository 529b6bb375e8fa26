#include "prym/correspondence.hpp"

#include <array>
#include <bit>
#include <map>
#include <stdexcept>

#include "prym/error.hpp"
#include "prym/permutation.hpp"

namespace prym {

IntMatrix::IntMatrix(int size) : size_(size), data_(static_cast<std::size_t>(size) * size, 0) {
  if (size < 0) throw ValidationError("matrix size must be non-negative");
}

IntMatrix IntMatrix::identity(int size) {
  IntMatrix m(size);
  for (int i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::ones(int size) {
  IntMatrix m(size);
  std::fill(m.data_.begin(), m.data_.end(), 1);
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (size_ != other.size_) throw ValidationError("matrix size mismatch");
  IntMatrix out(size_);
  for (int i = 0; i < size_; ++i) {
    for (int k = 0; k < size_; ++k) {
      const std::int64_t lhs = (*this)(i, k);
      if (lhs == 0) continue;
      for (int j = 0; j < size_; ++j) {
        std::int64_t term = 0;
        if (__builtin_mul_overflow(lhs, other(k, j), &term) ||
            __builtin_add_overflow(out(i, j), term, &out(i, j))) {
          throw std::overflow_error("integer matrix product overflows int64");
        }
      }
    }
  }
  return out;
}

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < size_; ++i) {
    for (int j = i + 1; j < size_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::int64_t IntMatrix::row_sum(int row) const {
  std::int64_t sum = 0;
  for (int j = 0; j < size_; ++j) sum += (*this)(row, j);
  return sum;
}

std::int64_t IntMatrix::col_sum(int col) const {
  std::int64_t sum = 0;
  for (int i = 0; i < size_; ++i) sum += (*this)(i, col);
  return sum;
}

std::vector<std::vector<std::int64_t>> IntMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(size_));
  for (int i = 0; i < size_; ++i) out[i].assign(data_.begin() + i * size_, data_.begin() + (i + 1) * size_);
  return out;
}

FiberCorrespondence build_subset_matrix(int n) {
  if (n < 2) throw ValidationError("subset correspondence needs n >= 2, got " + std::to_string(n));
  if (n + 2 > kMaxUniverse) throw ValidationError("subset correspondence: n too large");
  const auto subsets = all_subsets(n + 2, n);
  const int size = static_cast<int>(subsets.size());
  FiberCorrespondence out{CorrespondenceKind::subset, n, IntMatrix(size),
                          static_cast<std::int64_t>(n) * (n - 1) / 2};
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      out.matrix(i, j) = std::popcount(subsets[i] & subsets[j]) == n - 2 ? 1 : 0;
    }
  }
  return out;
}

FiberCorrespondence build_grid_matrix(int m) {
  if (m < 2) throw ValidationError("grid correspondence needs m >= 2, got " + std::to_string(m));
  const int size = m * m;
  FiberCorrespondence out{CorrespondenceKind::grid, m, IntMatrix(size), 2 * static_cast<std::int64_t>(m - 1)};
  for (int p = 0; p < size; ++p) {
    for (int r = 0; r < size; ++r) {
      const bool same_row = p / m == r / m;
      const bool same_col = p % m == r % m;
      out.matrix(p, r) = same_row != same_col ? 1 : 0;
    }
  }
  return out;
}

FiberCorrespondence build_correspondence(CorrespondenceKind kind, int parameter) {
  return kind == CorrespondenceKind::subset ? build_subset_matrix(parameter) : build_grid_matrix(parameter);
}

void check_invariants(const FiberCorrespondence& correspondence) {
  const auto& d = correspondence.matrix;
  if (!d.is_symmetric()) throw ConsistencyError("correspondence matrix is not symmetric");
  for (int i = 0; i < d.size(); ++i) {
    if (d(i, i) != 0) throw ConsistencyError("generic fiber has a fixed point at " + std::to_string(i));
    for (int j = 0; j < d.size(); ++j) {
      if (d(i, j) < 0) throw ConsistencyError("correspondence has a negative entry");
    }
    if (d.row_sum(i) != correspondence.bidegree || d.col_sum(i) != correspondence.bidegree) {
      throw ConsistencyError("row/column " + std::to_string(i) + " does not sum to the bidegree " +
                             std::to_string(correspondence.bidegree));
    }
  }
}

IdentityCheck verify_identity(const IntMatrix& d, const Rational& a, const Rational& b, const Rational& c) {
  const IntMatrix square = d * d;
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.size(); ++j) {
      const Rational rhs = (i == j ? a : Rational(0)) + b * d(i, j) + c;
      const Rational lhs(square(i, j));
      if (lhs != rhs) return IdentityCheck{false, IdentityWitness{i, j, lhs, rhs}};
    }
  }
  return IdentityCheck{true, std::nullopt};
}

std::optional<QuadraticIdentity> discover_identity(const IntMatrix& d) {
  if (d.size() == 0) return std::nullopt;
  const IntMatrix square = d * d;

  // Each entry gives one equation a*[i==j] + b*D_ij + c = (D^2)_ij; collect
  // the distinct ones.
  std::map<std::pair<int, std::int64_t>, std::int64_t> equations;
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.size(); ++j) {
      const auto key = std::make_pair(i == j ? 1 : 0, d(i, j));
      const auto [it, inserted] = equations.emplace(key, square(i, j));
      if (!inserted && it->second != square(i, j)) return std::nullopt;
    }
  }

  // Gauss-Jordan over the rationals with unknowns ordered (c, b, a): when the
  // system is underdetermined the free unknown is a, fixed to 0.
  std::vector<std::array<Rational, 4>> rows;
  for (const auto& [key, value] : equations) {
    rows.push_back({Rational(1), Rational(key.second), Rational(key.first), Rational(value)});
  }
  std::array<int, 3> pivot_row{-1, -1, -1};
  std::size_t rank = 0;
  for (int col = 0; col < 3 && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational lead = rows[rank][col];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (int k = 0; k < 4; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    pivot_row[col] = static_cast<int>(rank);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r][3] != 0) return std::nullopt;
  }
  if (rank < 2) return std::nullopt;

  std::array<Rational, 3> solution{};  // free unknowns stay 0
  for (int col = 2; col >= 0; --col) {
    if (pivot_row[col] < 0) continue;
    const auto& row = rows[pivot_row[col]];
    Rational value = row[3];
    for (int k = col + 1; k < 3; ++k) value -= row[k] * solution[k];
    solution[col] = value;
  }
  QuadraticIdentity identity{solution[2], solution[1], solution[0], rank == 3};
  if (!verify_identity(d, identity.a, identity.b, identity.c)) return std::nullopt;
  return identity;
}

ExponentResult exponent_from_identity(const QuadraticIdentity& identity) {
  const auto fail = [&](const std::string& why) {
    return ExponentResult{false, 0,
                          "criterion hypothesis (a) fails: gamma^2 = " + to_string(identity.a) + " + (" +
                              to_string(identity.b) + ") gamma " + why};
  };
  const auto b = to_int64(identity.b);
  if (!b) return fail("has a non-integral linear coefficient");
  const std::int64_t q = 2 - *b;
  if (q < 2) return fail("gives exponent " + std::to_string(q) + " < 2");
  if (identity.a != Rational(q - 1)) {
    return fail("does not factor as (1 - gamma)(gamma + " + std::to_string(q - 1) + ")");
  }
  return ExponentResult{true, q, ""};
}

}  // namespace prym
