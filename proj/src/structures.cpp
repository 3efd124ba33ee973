#include "cosmash/structures.hpp"

#include "cosmash/error.hpp"

namespace cosmash {

namespace {

std::vector<std::string> tensor_names(const std::vector<std::string>& names, int factors) {
  std::vector<std::string> out = names;
  for (int f = 1; f < factors; ++f) {
    std::vector<std::string> next;
    next.reserve(out.size() * names.size());
    for (const auto& left : out)
      for (const auto& right : names) next.push_back(left + "(x)" + right);
    out = std::move(next);
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) raise(ErrorKind::ShapeError, what);
}

void check_coalgebra_shapes(const Coalgebra& c) {
  const std::size_t n = c.dim();
  require(c.epsilon.rows() == 1, c.name + ": epsilon must be 1 x n");
  require(c.delta.rows() == n * n && c.delta.cols() == n,
          c.name + ": delta must be n^2 x n with n = " + std::to_string(n));
  require(c.basis_names.size() == n, c.name + ": basis name count differs from dimension");
  require(c.delta.field() == c.field && c.epsilon.field() == c.field,
          c.name + ": structure matrices over different fields");
}

void check_algebra_shapes(const std::string& name, const FieldSpec& field, const Matrix& mult,
                          const Matrix& unit, std::size_t names) {
  const std::size_t n = unit.rows();
  require(unit.cols() == 1, name + ": unit must be n x 1");
  require(mult.rows() == n && mult.cols() == n * n, name + ": mult must be n x n^2");
  require(names == n, name + ": basis name count differs from dimension");
  require(mult.field() == field && unit.field() == field,
          name + ": structure matrices over different fields");
}

void add_identity(Report& report, std::string check, const Matrix& lhs, const Matrix& rhs,
                  const std::vector<std::string>& names) {
  std::string w = witness_column(lhs, rhs, names);
  const bool pass = w.empty();
  report.add(std::move(check), pass, std::move(w));
}

void algebra_checks(Report& report, const FieldSpec& field, const Matrix& mult,
                    const Matrix& unit, const std::vector<std::string>& names) {
  const std::size_t n = unit.rows();
  const auto id = Matrix::identity(field, n);
  add_identity(report, "associativity", mult * kron(mult, id), mult * kron(id, mult),
               tensor_names(names, 3));
  add_identity(report, "left unit", mult * kron(unit, id), id, names);
  add_identity(report, "right unit", mult * kron(id, unit), id, names);
}

}  // namespace

std::vector<std::string> default_names(std::string_view prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(prefix) + std::to_string(i + 1));
  return out;
}

std::string witness_column(const Matrix& lhs, const Matrix& rhs,
                           const std::vector<std::string>& names) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return "shape";
  auto diff = first_difference(lhs, rhs);
  if (!diff) return {};
  const std::size_t col = diff->second;
  return col < names.size() ? names[col] : "#" + std::to_string(col + 1);
}

Algebra HopfAlgebra::algebra() const {
  return Algebra{coalgebra.name, coalgebra.field, coalgebra.basis_names, mult, unit};
}

Coalgebra make_coalgebra(std::string name, Matrix delta, Matrix epsilon,
                         std::vector<std::string> basis_names) {
  if (basis_names.empty()) basis_names = default_names("e", epsilon.cols());
  Coalgebra c{std::move(name), epsilon.field(), std::move(basis_names), std::move(delta),
              std::move(epsilon)};
  check_coalgebra_shapes(c);
  return c;
}

Algebra make_algebra(std::string name, Matrix mult, Matrix unit,
                     std::vector<std::string> basis_names) {
  if (basis_names.empty()) basis_names = default_names("e", unit.rows());
  check_algebra_shapes(name, unit.field(), mult, unit, basis_names.size());
  return Algebra{std::move(name), unit.field(), std::move(basis_names), std::move(mult),
                 std::move(unit)};
}

HopfAlgebra make_hopf(Coalgebra coalgebra, Matrix mult, Matrix unit, Matrix antipode) {
  check_coalgebra_shapes(coalgebra);
  const std::size_t n = coalgebra.dim();
  check_algebra_shapes(coalgebra.name, coalgebra.field, mult, unit, n);
  require(antipode.rows() == n && antipode.cols() == n && antipode.field() == coalgebra.field,
          coalgebra.name + ": antipode must be n x n");
  return HopfAlgebra{std::move(coalgebra), std::move(mult), std::move(unit), std::move(antipode)};
}

Coalgebra unit_coalgebra(FieldSpec field) {
  const auto one = Matrix::identity(field, 1);
  return make_coalgebra("k", one, one, {"1"});
}

HopfAlgebra unit_hopf(FieldSpec field) {
  const auto one = Matrix::identity(field, 1);
  return make_hopf(unit_coalgebra(field), one, one, one);
}

Report check_coalgebra(const Coalgebra& c) {
  check_coalgebra_shapes(c);
  Report report;
  report.subject = "coalgebra " + c.name;
  const auto id = Matrix::identity(c.field, c.dim());
  add_identity(report, "coassociativity", kron(c.delta, id) * c.delta,
               kron(id, c.delta) * c.delta, c.basis_names);
  add_identity(report, "left counit", kron(c.epsilon, id) * c.delta, id, c.basis_names);
  add_identity(report, "right counit", kron(id, c.epsilon) * c.delta, id, c.basis_names);
  return report;
}

Report check_algebra(const Algebra& a) {
  check_algebra_shapes(a.name, a.field, a.mult, a.unit, a.basis_names.size());
  Report report;
  report.subject = "algebra " + a.name;
  algebra_checks(report, a.field, a.mult, a.unit, a.basis_names);
  return report;
}

Report check_hopf(const HopfAlgebra& h) {
  const Coalgebra& c = h.coalgebra;
  check_coalgebra_shapes(c);
  check_algebra_shapes(c.name, c.field, h.mult, h.unit, c.basis_names.size());
  require(h.antipode.rows() == c.dim() && h.antipode.cols() == c.dim(),
          c.name + ": antipode must be n x n");

  Report report;
  report.subject = "hopf " + c.name;
  report.append(check_coalgebra(c));
  algebra_checks(report, c.field, h.mult, h.unit, c.basis_names);

  const std::size_t n = c.dim();
  const auto id = Matrix::identity(c.field, n);
  const auto pairs = tensor_names(c.basis_names, 2);
  const std::size_t dims[] = {n, n, n, n};
  const std::size_t middle_swap[] = {0, 2, 1, 3};
  const auto p = tensor_permutation(c.field, dims, middle_swap);
  add_identity(report, "delta multiplicative", c.delta * h.mult,
               kron(h.mult, h.mult) * p * kron(c.delta, c.delta), pairs);
  add_identity(report, "epsilon multiplicative", c.epsilon * h.mult,
               kron(c.epsilon, c.epsilon), pairs);
  add_identity(report, "delta unital", c.delta * h.unit, kron(h.unit, h.unit), {"1"});
  add_identity(report, "epsilon unital", c.epsilon * h.unit, Matrix::identity(c.field, 1),
               {"1"});
  const auto ue = h.unit * c.epsilon;
  add_identity(report, "left antipode", h.mult * kron(h.antipode, id) * c.delta, ue,
               c.basis_names);
  add_identity(report, "right antipode", h.mult * kron(id, h.antipode) * c.delta, ue,
               c.basis_names);
  return report;
}

Algebra dual_algebra(const Coalgebra& c) {
  const Report r = check_coalgebra(c);
  if (!r.ok()) raise(ErrorKind::AxiomError, r.summary());
  std::vector<std::string> names;
  for (const auto& b : c.basis_names) names.push_back(b + "*");
  return Algebra{c.name + "*", c.field, std::move(names), transpose(c.delta),
                 transpose(c.epsilon)};
}

Coalgebra dual_coalgebra(const Algebra& a) {
  const Report r = check_algebra(a);
  if (!r.ok()) raise(ErrorKind::AxiomError, r.summary());
  std::vector<std::string> names;
  for (const auto& b : a.basis_names) names.push_back(b + "*");
  return Coalgebra{a.name + "*", a.field, std::move(names), transpose(a.mult),
                   transpose(a.unit)};
}

Matrix left_mult(const Algebra& a, std::size_t index) {
  const std::size_t n = a.dim();
  return columns(a.mult, index * n, n);
}

Matrix right_mult(const Algebra& a, std::size_t index) {
  const std::size_t n = a.dim();
  Matrix r(a.field, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (!a.mult.is_zero_at(k, j * n + index)) r.set(k, j, a.mult.at(k, j * n + index));
  return r;
}

bool is_cosemisimple(const Coalgebra& c) {
  const std::size_t n = c.dim();
  const std::uint32_t p = c.field.characteristic();
  if (p != 0 && p <= n)
    raise(ErrorKind::UnsupportedField, "trace-form cosemisimplicity test needs char 0 or p > " +
                                           std::to_string(n) + ", got p = " + std::to_string(p));
  return rank(trace_form(dual_algebra(c))) == n;
}

Matrix trace_form(const Algebra& a) {
  const std::size_t n = a.dim();
  // tr(L_k) for each basis element, then T[a][b] = tr(L_{e_a e_b}).
  Matrix traces(a.field, n, 1);
  for (std::size_t k = 0; k < n; ++k) {
    Scalar t = 0;
    for (std::size_t b = 0; b < n; ++b) t = a.field.add(t, a.mult.at(b, k * n + b));
    traces.set(k, 0, t);
  }
  return unvectorize(transpose(a.mult) * traces, n, n);
}

bool is_separable(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto id = Matrix::identity(a.field, n);
  Matrix system = a.mult;
  Matrix rhs = a.unit;
  for (std::size_t i = 0; i < n; ++i) {
    system = vstack(system, kron(left_mult(a, i), id) - kron(id, right_mult(a, i)));
    rhs = vstack(rhs, Matrix::zero(a.field, n * n, 1));
  }
  return solve(system, rhs).has_value();
}

bool is_cosemisimple_any_char(const Coalgebra& c) { return is_separable(dual_algebra(c)); }

IntegralFunctional left_integral(const HopfAlgebra& h) {
  const Report r = check_hopf(h);
  if (!r.ok()) raise(ErrorKind::AxiomError, r.summary());
  const Coalgebra& c = h.coalgebra;
  const std::size_t n = c.dim();
  // (e_a* phi)(e_k) = sum_j Delta[a n + j][k] phi_j must equal unit[a] phi_k.
  Matrix system(c.field, n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j)
        if (!c.delta.is_zero_at(a * n + j, k)) system.add_to(a * n + k, j, c.delta.at(a * n + j, k));
      if (!h.unit.is_zero_at(a, 0)) system.add_to(a * n + k, k, -h.unit.at(a, 0));
    }
  const Matrix space = kernel_basis(system);
  if (space.cols() == 0) raise(ErrorKind::NoIntegral, h.name() + ": no left integral in H*");
  if (space.cols() > 1)
    raise(ErrorKind::StructureError,
          h.name() + ": integral space has dimension " + std::to_string(space.cols()));
  IntegralFunctional out{transpose(space), false};
  const Scalar at_one = (out.phi * h.unit).at(0, 0);
  if (!c.field.is_zero(at_one)) {
    out.phi = scaled(out.phi, c.field.inv(at_one));
    out.normalized = true;
  }
  return out;
}

bool is_grouplike(const Coalgebra& c, const Matrix& x) {
  if (x.rows() != c.dim() || x.cols() != 1 || x.field() != c.field) return false;
  return c.delta * x == kron(x, x) && c.epsilon * x == Matrix::identity(c.field, 1);
}

bool is_cocommutative(const Coalgebra& c) {
  return twist(c.field, c.dim(), c.dim()) * c.delta == c.delta;
}

bool is_commutative(const HopfAlgebra& h) {
  return h.mult * twist(h.field(), h.dim(), h.dim()) == h.mult;
}

}  // namespace cosmash
