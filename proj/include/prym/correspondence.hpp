#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prym/rational.hpp"
#include "prym/scenario.hpp"

namespace prym {

// Dense square integer matrix. Products are overflow-checked; an overflow
// throws std::overflow_error rather than wrapping.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int size);

  static IntMatrix identity(int size);
  static IntMatrix ones(int size);

  int size() const { return size_; }
  std::int64_t& operator()(int row, int col) { return data_[index(row, col)]; }
  std::int64_t operator()(int row, int col) const { return data_[index(row, col)]; }

  IntMatrix operator*(const IntMatrix& other) const;

  bool is_symmetric() const;
  std::int64_t row_sum(int row) const;
  std::int64_t col_sum(int col) const;
  std::vector<std::vector<std::int64_t>> rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(col);
  }
  int size_ = 0;
  std::vector<std::int64_t> data_;
};

// A symmetric correspondence restricted to a generic fiber of the induced
// covering.
struct FiberCorrespondence {
  CorrespondenceKind kind = CorrespondenceKind::subset;
  int parameter = 0;  // n or m
  IntMatrix matrix;
  std::int64_t bidegree = 0;

  int size() const { return matrix.size(); }
};

// Entry (I, J) is 1 iff the n-subsets I, J of n+2 sheets share exactly n-2
// elements. Points indexed by colex rank. Requires n >= 2.
FiberCorrespondence build_subset_matrix(int n);

// Rook-graph adjacency on the m x m grid: P_ij is joined to P_il (l != j) and
// P_kj (k != i). Point (i, j) has index i * m + j. Requires m >= 2.
FiberCorrespondence build_grid_matrix(int m);

FiberCorrespondence build_correspondence(CorrespondenceKind kind, int parameter);

// Symmetric, non-negative, zero diagonal, constant row and column sum equal
// to the bidegree. Throws ConsistencyError naming the first violation.
void check_invariants(const FiberCorrespondence& correspondence);

// D^2 = a I + b D + c U, with U the all-ones matrix.
struct QuadraticIdentity {
  Rational a;
  Rational b;
  Rational c;
  // false when I, D, U restricted to the entries of D are dependent and the
  // canonical solution with a = 0 was chosen
  bool unique = true;
};

struct IdentityWitness {
  int row = 0;
  int col = 0;
  Rational lhs;  // (D^2)_{row,col}
  Rational rhs;  // (a I + b D + c U)_{row,col}
};

struct IdentityCheck {
  bool holds = false;
  std::optional<IdentityWitness> witness;  // first differing entry, row-major

  explicit operator bool() const { return holds; }
};

IdentityCheck verify_identity(const IntMatrix& d, const Rational& a, const Rational& b, const Rational& c);

// Solves for (a, b, c) from the entries of D^2 and confirms the result on
// every entry. Returns nullopt when no such identity exists or the
// coefficients are not determined even after fixing a = 0.
std::optional<QuadraticIdentity> discover_identity(const IntMatrix& d);

struct ExponentResult {
  bool ok = false;
  std::int64_t q = 0;
  std::string diagnostic;
};

// Reads the identity on the Jacobian, where U acts as zero because it factors
// through the Jacobian of the base P^1. Then gamma^2 = a + b gamma, which
// factors as (1 - gamma)(gamma + q - 1) = 0 iff q = 2 - b, a = q - 1 and q is
// an integer >= 2.
ExponentResult exponent_from_identity(const QuadraticIdentity& identity);

}  // namespace prym
