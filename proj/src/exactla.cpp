#include "cosmash/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "cosmash/error.hpp"

namespace cosmash {

namespace {

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t residue_of_integer(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t residue_of(const mpq_class& q, std::uint32_t p) {
  const std::uint32_t den = residue_of_integer(q.get_den(), p);
  if (den == 0) {
    raise(ErrorKind::DomainError,
          "scalar " + q.get_str() + " has denominator divisible by " + std::to_string(p));
  }
  const std::uint64_t num = residue_of_integer(q.get_num(), p);
  return static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
}

// Arithmetic policies for the elimination kernels.
struct FpOps {
  using value_type = std::uint32_t;
  std::uint32_t p;

  static std::vector<value_type>& data(Matrix& m) { return m.residues(); }
  static const std::vector<value_type>& data(const Matrix& m) { return m.residues(); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p ? s - p : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p - b);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p);
  }
  value_type inv(value_type a) const { return pow_mod(a, p - 2, p); }
};

struct QOps {
  using value_type = mpq_class;

  static std::vector<value_type>& data(Matrix& m) { return m.rationals(); }
  static const std::vector<value_type>& data(const Matrix& m) { return m.rationals(); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return 1 / a; }
};

template <class Fn>
decltype(auto) with_ops(const FieldSpec& field, Fn&& fn) {
  if (field.is_prime_field()) return fn(FpOps{field.characteristic()});
  return fn(QOps{});
}

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
  if (!(a.field() == b.field())) {
    raise(ErrorKind::FieldMismatch, std::string(op) + ": operands over " + a.field().to_string() +
                                        " and " + b.field().to_string());
  }
}

void require_shape(bool ok, const std::string& message) {
  if (!ok) raise(ErrorKind::ShapeError, message);
}

std::string shape(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

// In-place Gauss-Jordan on a row-major block; returns pivot columns. Only the
// first `pivot_cols` columns are eligible as pivots.
template <class Ops>
std::vector<std::size_t> gauss_jordan(const Ops& ops, std::vector<typename Ops::value_type>& m,
                                      std::size_t rows, std::size_t cols,
                                      std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!ops.is_zero(m[i * cols + c])) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[sel * cols + j], m[r * cols + j]);
    }
    const auto inv = ops.inv(m[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) m[r * cols + j] = ops.mul(m[r * cols + j], inv);
    // Collect the nonzero tail of the pivot row once; eliminations only touch it.
    std::vector<std::size_t> support;
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (!ops.is_zero(m[r * cols + j])) support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const auto factor = m[i * cols + c];
      if (ops.is_zero(factor)) continue;
      for (std::size_t j : support) {
        m[i * cols + j] = ops.sub(m[i * cols + j], ops.mul(factor, m[r * cols + j]));
      }
      m[i * cols + c] = ops.zero();
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalars and fields

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) raise(ErrorKind::ParseError, "empty scalar");
  if (s.front() == '+') s.erase(s.begin());
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t start = (t.front() == '-') ? 1 : 0;
    if (start == t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                       [](unsigned char ch) { return std::isdigit(ch) != 0; });
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) raise(ErrorKind::ParseError, "malformed scalar '" + std::string(text) + "'");
    return Scalar(mpz_class(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    raise(ErrorKind::ParseError, "malformed scalar '" + std::string(text) + "'");
  }
  mpz_class d(den);
  if (d == 0) raise(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Scalar q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& value) { return value.get_str(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::rationals() { return FieldSpec(Kind::Rationals, 0); }

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime(p)) {
    raise(ErrorKind::DomainError, "field characteristic " + std::to_string(p) +
                                      " is not a prime below 2^31");
  }
  return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

Scalar FieldSpec::reduce(const Scalar& value) const {
  if (!is_prime_field()) return value;
  return Scalar(residue_of(value, p_));
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }

Scalar FieldSpec::inv(const Scalar& a) const {
  if (is_zero(a)) raise(ErrorKind::DomainError, "inverse of zero");
  if (!is_prime_field()) return 1 / a;
  return Scalar(pow_mod(residue_of(a, p_), p_ - 2, p_));
}

bool FieldSpec::is_zero(const Scalar& a) const {
  if (!is_prime_field()) return sgn(a) == 0;
  return residue_of(a, p_) == 0;
}

std::string FieldSpec::to_string() const {
  return is_prime_field() ? "F_" + std::to_string(p_) : std::string("Q");
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_prime_field()) {
    residues_.assign(rows * cols, 0);
  } else {
    rationals_.assign(rows * cols, mpq_class(0));
  }
}

Matrix Matrix::zero(FieldSpec field, std::size_t rows, std::size_t cols) {
  return Matrix(field, rows, cols);
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(FieldSpec field,
                         std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    require_shape(row.size() == c, "from_rows: ragged rows");
    std::size_t j = 0;
    for (long v : row) m.set(i, j++, Scalar(v));
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require_shape(rows[i].size() == c, "from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void Matrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    raise(ErrorKind::ShapeError, "index (" + std::to_string(r) + "," + std::to_string(c) +
                                     ") outside " + shape(*this));
  }
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  if (field_.is_prime_field()) return Scalar(residues_[r * cols_ + c]);
  return rationals_[r * cols_ + c];
}

bool Matrix::is_zero_at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  if (field_.is_prime_field()) return residues_[r * cols_ + c] == 0;
  return sgn(rationals_[r * cols_ + c]) == 0;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  check_index(r, c);
  if (field_.is_prime_field()) {
    residues_[r * cols_ + c] = residue_of(value, field_.characteristic());
  } else {
    rationals_[r * cols_ + c] = value;
    rationals_[r * cols_ + c].canonicalize();
  }
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& value) {
  check_index(r, c);
  if (field_.is_prime_field()) {
    const FpOps ops{field_.characteristic()};
    auto& slot = residues_[r * cols_ + c];
    slot = ops.add(slot, residue_of(value, field_.characteristic()));
  } else {
    rationals_[r * cols_ + c] += value;
  }
}

bool Matrix::is_zero() const {
  if (field_.is_prime_field()) {
    return std::all_of(residues_.begin(), residues_.end(), [](std::uint32_t v) { return v == 0; });
  }
  return std::all_of(rationals_.begin(), rationals_.end(),
                     [](const mpq_class& v) { return sgn(v) == 0; });
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.residues_ == b.residues_ && a.rationals_ == b.rationals_;
}

// ---------------------------------------------------------------------------
// Arithmetic

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "add");
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(),
                "add: " + shape(a) + " vs " + shape(b));
  return with_ops(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    Matrix out = a;
    auto& o = Ops::data(out);
    const auto& y = Ops::data(b);
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = ops.add(o[i], y[i]);
    return out;
  });
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "sub");
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(),
                "sub: " + shape(a) + " vs " + shape(b));
  return with_ops(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    Matrix out = a;
    auto& o = Ops::data(out);
    const auto& y = Ops::data(b);
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = ops.sub(o[i], y[i]);
    return out;
  });
}

Matrix operator-(const Matrix& a) {
  return with_ops(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    Matrix out = a;
    for (auto& v : Ops::data(out)) v = ops.neg(v);
    return out;
  });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "multiply");
  require_shape(a.cols() == b.rows(), "multiply: " + shape(a) + " * " + shape(b));
  return with_ops(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    Matrix out(a.field(), a.rows(), b.cols());
    auto& o = Ops::data(out);
    const auto& x = Ops::data(a);
    const auto& y = Ops::data(b);
    const std::size_t n = a.cols();
    const std::size_t m = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto& aik = x[i * n + k];
        if (ops.is_zero(aik)) continue;
        for (std::size_t j = 0; j < m; ++j) {
          const auto& bkj = y[k * m + j];
          if (ops.is_zero(bkj)) continue;
          o[i * m + j] = ops.add(o[i * m + j], ops.mul(aik, bkj));
        }
      }
    }
    return out;
  });
}

Matrix scaled(const Matrix& a, const Scalar& factor) {
  return with_ops(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    Matrix tmp(a.field(), 1, 1);
    tmp.set(0, 0, factor);
    const auto f = Ops::data(tmp)[0];
    Matrix out = a;
    for (auto& v : Ops::data(out)) v = ops.mul(v, f);
    return out;
  });
}

Matrix transpose(const Matrix& a) {
  return with_ops(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    Matrix out(a.field(), a.cols(), a.rows());
    auto& o = Ops::data(out);
    const auto& x = Ops::data(a);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) o[j * a.rows() + i] = x[i * a.cols() + j];
    return out;
  });
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "kron");
  return with_ops(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    auto& o = Ops::data(out);
    const auto& x = Ops::data(a);
    const auto& y = Ops::data(b);
    const std::size_t oc = out.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto& aij = x[i * a.cols() + j];
        if (ops.is_zero(aij)) continue;
        for (std::size_t k = 0; k < b.rows(); ++k) {
          for (std::size_t l = 0; l < b.cols(); ++l) {
            const auto& bkl = y[k * b.cols() + l];
            if (ops.is_zero(bkl)) continue;
            o[(i * b.rows() + k) * oc + (j * b.cols() + l)] = ops.mul(aij, bkl);
          }
        }
      }
    }
    return out;
  });
}

Matrix kron(std::initializer_list<Matrix> factors) {
  require_shape(factors.size() > 0, "kron: no factors");
  auto it = factors.begin();
  Matrix out = *it;
  for (++it; it != factors.end(); ++it) out = kron(out, *it);
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "hstack");
  require_shape(a.rows() == b.rows(), "hstack: " + shape(a) + " | " + shape(b));
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.is_zero_at(i, j)) out.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!b.is_zero_at(i, j)) out.set(i, a.cols() + j, b.at(i, j));
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "vstack");
  require_shape(a.cols() == b.cols(), "vstack: " + shape(a) + " / " + shape(b));
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  if (a.field().is_prime_field()) {
    std::copy(a.residues().begin(), a.residues().end(), out.residues().begin());
    std::copy(b.residues().begin(), b.residues().end(),
              out.residues().begin() + static_cast<std::ptrdiff_t>(a.residues().size()));
  } else {
    std::copy(a.rationals().begin(), a.rationals().end(), out.rationals().begin());
    std::copy(b.rationals().begin(), b.rationals().end(),
              out.rationals().begin() + static_cast<std::ptrdiff_t>(a.rationals().size()));
  }
  return out;
}

Matrix columns(const Matrix& a, std::size_t first, std::size_t count) {
  require_shape(first + count <= a.cols(), "columns: range outside " + shape(a));
  Matrix out(a.field(), a.rows(), count);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < count; ++j)
      if (!a.is_zero_at(i, first + j)) out.set(i, j, a.at(i, first + j));
  return out;
}

Matrix column(const Matrix& a, std::size_t j) { return columns(a, j, 1); }

Matrix rows_of(const Matrix& a, std::size_t first, std::size_t count) {
  require_shape(first + count <= a.rows(), "rows_of: range outside " + shape(a));
  Matrix out(a.field(), count, a.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.is_zero_at(first + i, j)) out.set(i, j, a.at(first + i, j));
  return out;
}

Matrix select_columns(const Matrix& a, std::span<const std::size_t> indices) {
  Matrix out(a.field(), a.rows(), indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    require_shape(indices[j] < a.cols(), "select_columns: index outside " + shape(a));
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!a.is_zero_at(i, indices[j])) out.set(i, j, a.at(i, indices[j]));
  }
  return out;
}

Matrix basis_vector(FieldSpec field, std::size_t n, std::size_t i) {
  Matrix v(field, n, 1);
  v.set(i, 0, 1);
  return v;
}

Matrix vectorize(const Matrix& a) {
  // Row-major storage already is the flattening; only the shape changes.
  Matrix v(a.field(), a.rows() * a.cols(), 1);
  v.residues() = a.residues();
  v.rationals() = a.rationals();
  return v;
}

Matrix unvectorize(const Matrix& column_vector, std::size_t rows, std::size_t cols) {
  require_shape(column_vector.cols() == 1 && column_vector.rows() == rows * cols,
                "unvectorize: " + shape(column_vector) + " into " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  Matrix m(column_vector.field(), rows, cols);
  m.residues() = column_vector.residues();
  m.rationals() = column_vector.rationals();
  return m;
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(const Matrix& a) {
  return with_ops(a.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    RrefResult result{a, {}, 0};
    result.pivots = gauss_jordan(ops, Ops::data(result.reduced), a.rows(), a.cols(), a.cols());
    result.rank = result.pivots.size();
    return result;
  });
}

std::size_t rank(const Matrix& a) {
  // Eliminate along the shorter side.
  if (a.rows() > a.cols()) return rref(transpose(a)).rank;
  return rref(a).rank;
}

Matrix kernel_basis(const Matrix& a) {
  const RrefResult r = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  Matrix k(a.field(), n, n - r.rank);
  std::size_t col = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    k.set(f, col, 1);
    for (std::size_t row = 0; row < r.rank; ++row) {
      if (!r.reduced.is_zero_at(row, f)) {
        k.set(r.pivots[row], col, a.field().sub(0, r.reduced.at(row, f)));
      }
    }
    ++col;
  }
  return k;
}

Matrix column_space_basis(const Matrix& a) {
  const RrefResult r = rref(transpose(a));
  return transpose(rows_of(r.reduced, 0, r.rank));
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "solve");
  require_shape(a.rows() == b.rows(), "solve: " + shape(a) + " vs rhs " + shape(b));
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  Matrix aug = hstack(a, b);
  return with_ops(a.field(), [&](const auto& ops) -> std::optional<Matrix> {
    using Ops = std::decay_t<decltype(ops)>;
    auto& m = Ops::data(aug);
    const std::size_t cols = n + k;
    const auto pivots = gauss_jordan(ops, m, a.rows(), cols, n);
    // Inconsistent iff a zero row of the coefficient block has a nonzero rhs.
    for (std::size_t i = pivots.size(); i < a.rows(); ++i) {
      for (std::size_t j = n; j < cols; ++j) {
        if (!ops.is_zero(m[i * cols + j])) return std::nullopt;
      }
    }
    Matrix x(a.field(), n, k);
    auto& xv = Ops::data(x);
    for (std::size_t row = 0; row < pivots.size(); ++row) {
      for (std::size_t j = 0; j < k; ++j) xv[pivots[row] * k + j] = m[row * cols + n + j];
    }
    return x;
  });
}

Quotient quotient(const Matrix& span, std::size_t ambient_dim) {
  require_shape(span.rows() == ambient_dim,
                "quotient_map: span has " + std::to_string(span.rows()) +
                    " rows, ambient dimension " + std::to_string(ambient_dim));
  const FieldSpec field = span.field();
  const RrefResult r = rref(transpose(span));
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  const std::size_t out_dim = ambient_dim - r.rank;
  Quotient q{Matrix(field, out_dim, ambient_dim), Matrix(field, ambient_dim, out_dim)};
  std::size_t t = 0;
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (is_pivot[j]) continue;
    q.projection.set(t, j, 1);
    q.section.set(j, t, 1);
    for (std::size_t row = 0; row < r.rank; ++row) {
      if (!r.reduced.is_zero_at(row, j)) {
        q.projection.set(t, r.pivots[row], field.sub(0, r.reduced.at(row, j)));
      }
    }
    ++t;
  }
  return q;
}

Matrix quotient_map(const Matrix& span, std::size_t ambient_dim) {
  return quotient(span, ambient_dim).projection;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) raise(ErrorKind::DomainError, "inverse of non-square " + shape(a));
  auto x = solve(a, Matrix::identity(a.field(), a.rows()));
  if (!x || rank(a) != a.rows()) raise(ErrorKind::DomainError, "matrix is singular");
  return *x;
}

Matrix tensor_permutation(FieldSpec field, std::span<const std::size_t> dims,
                          std::span<const std::size_t> order) {
  const std::size_t k = dims.size();
  require_shape(order.size() == k, "tensor_permutation: order/dims length mismatch");
  std::vector<bool> seen(k, false);
  for (std::size_t o : order) {
    require_shape(o < k && !seen[o], "tensor_permutation: order is not a permutation");
    seen[o] = true;
  }
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  std::vector<std::size_t> out_dims(k);
  for (std::size_t i = 0; i < k; ++i) out_dims[i] = dims[order[i]];
  Matrix p(field, total, total);
  std::vector<std::size_t> idx(k, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    // Decode flat input index into per-factor indices (left factor major).
    std::size_t rem = flat;
    for (std::size_t i = k; i-- > 0;) {
      idx[i] = rem % dims[i];
      rem /= dims[i];
    }
    std::size_t out = 0;
    for (std::size_t i = 0; i < k; ++i) out = out * out_dims[i] + idx[order[i]];
    p.set(out, flat, 1);
  }
  return p;
}

Matrix twist(FieldSpec field, std::size_t dim_v, std::size_t dim_w) {
  const std::size_t dims[] = {dim_v, dim_w};
  const std::size_t order[] = {1, 0};
  return tensor_permutation(field, dims, order);
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix& a,
                                                                    const Matrix& b) {
  require_same_field(a, b, "compare");
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(),
                "compare: " + shape(a) + " vs " + shape(b));
  // Column-major scan so the witness is the lowest basis element (column).
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a.at(i, j) != b.at(i, j)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::string to_string(const Matrix& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ", ";
      os << format_scalar(a.at(i, j));
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace cosmash
