#pragma once

// Exact dense linear algebra over Q and F_p.
//
// Tensor flattening convention (used by every module): the basis vector
// (i, a) of V (x) W has index i * dim(W) + a, i.e. the left factor is major.
// A linear map V -> W is a dim(W) x dim(V) matrix acting on column vectors,
// so the image of basis vector j is column j.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cosmash {

/// Scalars are exchanged as exact rationals. Over F_p a scalar denotes its
/// residue class; `FieldSpec::reduce` yields the canonical representative
/// 0 <= r < p.
using Scalar = mpq_class;

Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& value);

class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals();
  /// Throws DomainError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
  /// 0 for Q.
  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar reduce(const Scalar& value) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;
  bool is_zero(const Scalar& a) const;

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Dense row-major matrix over one exact field. Values are immutable once
/// handed out by the library; mutation is only through `set`/`add_to` while
/// building.
class Matrix {
 public:
  Matrix() : Matrix(FieldSpec::rationals(), 0, 0) {}
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix zero(FieldSpec field, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldSpec field, std::size_t n);
  /// Row-major integer literal; handy for tests and gallery constructors.
  static Matrix from_rows(FieldSpec field, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  bool is_zero_at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void add_to(std::size_t r, std::size_t c, const Scalar& value);

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  // Raw storage for the elimination kernels; exactly one is populated.
  std::vector<std::uint32_t>& residues() noexcept { return residues_; }
  const std::vector<std::uint32_t>& residues() const noexcept { return residues_; }
  std::vector<mpq_class>& rationals() noexcept { return rationals_; }
  const std::vector<mpq_class>& rationals() const noexcept { return rationals_; }

 private:
  void check_index(std::size_t r, std::size_t c) const;

  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> residues_;
  std::vector<mpq_class> rationals_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& a, const Scalar& factor);

Matrix transpose(const Matrix& a);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(std::initializer_list<Matrix> factors);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix column(const Matrix& a, std::size_t j);
Matrix columns(const Matrix& a, std::size_t first, std::size_t count);
Matrix rows_of(const Matrix& a, std::size_t first, std::size_t count);
Matrix select_columns(const Matrix& a, std::span<const std::size_t> indices);

/// e_i in k^n as an n x 1 column.
Matrix basis_vector(FieldSpec field, std::size_t n, std::size_t i);

/// Row-major flattening of an r x c matrix into an (r*c) x 1 column, and back.
Matrix vectorize(const Matrix& a);
Matrix unvectorize(const Matrix& column_vector, std::size_t rows, std::size_t cols);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Columns form the canonical kernel basis read off the RREF: one column per
/// free variable, ordered by free column index.
Matrix kernel_basis(const Matrix& a);

/// Canonical basis of the column space: transposed nonzero rows of rref(A^T).
Matrix column_space_basis(const Matrix& a);

/// Particular solution X of A X = B with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Surjection k^n -> k^(n - rank S) whose kernel is the column span of S,
/// together with the canonical section (projection * section = identity).
struct Quotient {
  Matrix projection;
  Matrix section;
};

Quotient quotient(const Matrix& span, std::size_t ambient_dim);
Matrix quotient_map(const Matrix& span, std::size_t ambient_dim);

/// Throws DomainError if `a` is singular or not square.
Matrix inverse(const Matrix& a);

/// Permutation matrix reordering tensor factors: input factors have the given
/// dimensions; output factor k is input factor order[k].
Matrix tensor_permutation(FieldSpec field, std::span<const std::size_t> dims,
                          std::span<const std::size_t> order);

/// Swap map V (x) W -> W (x) V.
Matrix twist(FieldSpec field, std::size_t dim_v, std::size_t dim_w);

/// First (row, col) where the two same-shaped matrices differ.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix& a,
                                                                    const Matrix& b);

std::string to_string(const Matrix& a);

}  // namespace cosmash
