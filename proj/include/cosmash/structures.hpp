#pragma once

// Finite-dimensional coalgebras, algebras and Hopf algebras given by
// structure constants, with exhaustive axiom checks.
//
// Shapes (n = dim): delta is n^2 x n (column k is Delta(e_k)), epsilon is
// 1 x n, mult is n x n^2 (column i*n+j is e_i e_j), unit is n x 1.

#include <string>
#include <vector>

#include "cosmash/exactla.hpp"
#include "cosmash/report.hpp"

namespace cosmash {

struct Coalgebra {
  std::string name;
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::string> basis_names;
  Matrix delta;
  Matrix epsilon;

  std::size_t dim() const { return epsilon.cols(); }
};

struct Algebra {
  std::string name;
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::string> basis_names;
  Matrix mult;
  Matrix unit;

  std::size_t dim() const { return unit.rows(); }
};

struct HopfAlgebra {
  Coalgebra coalgebra;
  Matrix mult;
  Matrix unit;
  Matrix antipode;

  const std::string& name() const { return coalgebra.name; }
  const FieldSpec& field() const { return coalgebra.field; }
  std::size_t dim() const { return coalgebra.dim(); }
  const std::vector<std::string>& basis_names() const { return coalgebra.basis_names; }
  Algebra algebra() const;
};

/// An element of H*, as a row vector against the basis of H.
struct IntegralFunctional {
  Matrix phi;
  bool normalized = false;
};

/// Builders validate shapes (ShapeError) and fill default basis names e1..en.
Coalgebra make_coalgebra(std::string name, Matrix delta, Matrix epsilon,
                         std::vector<std::string> basis_names = {});
Algebra make_algebra(std::string name, Matrix mult, Matrix unit,
                     std::vector<std::string> basis_names = {});
HopfAlgebra make_hopf(Coalgebra coalgebra, Matrix mult, Matrix unit, Matrix antipode);

/// The one-dimensional coalgebra / Hopf algebra k.
Coalgebra unit_coalgebra(FieldSpec field);
HopfAlgebra unit_hopf(FieldSpec field);

Report check_coalgebra(const Coalgebra& c);
Report check_algebra(const Algebra& a);
Report check_hopf(const HopfAlgebra& h);

/// <fg, c> = <f (x) g, Delta c>; unit is epsilon. Throws AxiomError if C is
/// not a coalgebra.
Algebra dual_algebra(const Coalgebra& c);
/// Inverse construction: Delta = mult^T, epsilon = unit^T.
Coalgebra dual_coalgebra(const Algebra& a);

/// T[a][b] = tr(L_{e_a e_b}) on the algebra.
Matrix trace_form(const Algebra& a);

/// Trace-form test on the dual algebra. Requires char 0 or p > dim C,
/// otherwise UnsupportedField.
bool is_cosemisimple(const Coalgebra& c);

/// Separability test: the algebra admits a separability idempotent. Valid in
/// every characteristic over perfect fields, where separable = semisimple.
bool is_separable(const Algebra& a);
bool is_cosemisimple_any_char(const Coalgebra& c);

/// Left integral in H*. NoIntegral if none exists, StructureError if the
/// solution space has dimension > 1.
IntegralFunctional left_integral(const HopfAlgebra& h);

/// x is an n x 1 column.
bool is_grouplike(const Coalgebra& c, const Matrix& x);
bool is_cocommutative(const Coalgebra& c);
bool is_commutative(const HopfAlgebra& h);

/// Left multiplication operator of basis element a in an algebra.
Matrix left_mult(const Algebra& a, std::size_t index);
Matrix right_mult(const Algebra& a, std::size_t index);

/// "name of the column where lhs and rhs first differ", or empty if equal.
std::string witness_column(const Matrix& lhs, const Matrix& rhs,
                           const std::vector<std::string>& names);
std::vector<std::string> default_names(std::string_view prefix, std::size_t n);

}  // namespace cosmash
