#pragma once

// Right comodules over a coalgebra, (C,H)-comodules and their Hom spaces.
//
// A coaction rho: M -> M (x) D is an (m*d) x m matrix; row i*d+a, column j is
// the coefficient of m_i (x) d_a in rho(m_j). Everything is finite
// dimensional, so the rational Hom of the theory coincides with plain Hom and
// its coactions are found by solving linear systems.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cosmash/exactla.hpp"
#include "cosmash/report.hpp"
#include "cosmash/structures.hpp"

namespace cosmash {

using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

struct Comodule {
  std::string name;
  CoalgebraPtr over;
  Matrix rho;
  std::vector<std::string> basis_names;

  std::size_t dim() const { return rho.cols(); }
  const FieldSpec& field() const { return over->field; }
};

/// A coalgebra C with an H-coaction rho: C -> C (x) H. The comodule coalgebra
/// axioms are checked in smashprod; this is only the data.
struct ComoduleCoalgebra {
  std::string name;
  Coalgebra C;
  HopfAlgebra H;
  Matrix rho;
};

using PairPtr = std::shared_ptr<const ComoduleCoalgebra>;

struct CHComodule {
  std::string name;
  PairPtr pair;
  Matrix rhoC;
  Matrix rhoH;
  std::vector<std::string> basis_names;

  std::size_t dim() const { return rhoC.cols(); }
  const FieldSpec& field() const { return pair->C.field; }
  Comodule over_C() const;
  Comodule over_H() const;
};

/// Left comodule lambda: W -> D (x) W, a (d*w) x w matrix.
struct LeftComodule {
  CoalgebraPtr over;
  Matrix lambda;

  std::size_t dim() const { return lambda.cols(); }
};

/// Basis of Hom^D(M,N) as n x m matrices. `coaction`, when present, is an
/// H-coaction on the span written in that basis: (r*h) x r with row c*h+a,
/// column b the coefficient of f_c (x) h_a in rho(f_b).
struct HomSpace {
  std::size_t target_dim = 0;
  std::size_t source_dim = 0;
  std::vector<Matrix> basis;
  std::optional<Matrix> coaction;

  std::size_t dim() const { return basis.size(); }
  /// Columns are vectorized basis maps.
  Matrix basis_matrix(FieldSpec field) const;
  /// Coordinates of f in the basis, or nullopt if f is outside the span.
  std::optional<Matrix> coordinates(const Matrix& f) const;
};

CoalgebraPtr share(Coalgebra c);
PairPtr share(ComoduleCoalgebra p);

Comodule make_comodule(std::string name, CoalgebraPtr over, Matrix rho,
                       std::vector<std::string> basis_names = {});
CHComodule make_ch(std::string name, PairPtr pair, Matrix rhoC, Matrix rhoH,
                   std::vector<std::string> basis_names = {});

/// D over itself via Delta.
Comodule regular_comodule(CoalgebraPtr over);
/// k^dim with rho(v) = v (x) x for a grouplike column x (not verified here).
Comodule grouplike_line(CoalgebraPtr over, const Matrix& x, std::size_t dim = 1,
                        std::string name = {});
/// V (x) D with coaction on the D factor.
Comodule cofree(CoalgebraPtr over, std::size_t dim_v, std::string name = {});
Comodule direct_sum(const Comodule& a, const Comodule& b);
/// Same comodule in the basis given by the columns of the invertible p.
Comodule change_basis(const Comodule& m, const Matrix& p);

CHComodule direct_sum(const CHComodule& a, const CHComodule& b);
CHComodule change_basis(const CHComodule& m, const Matrix& p);

Report check_comodule(const Comodule& m);
Report check_left_comodule(const LeftComodule& w);
Report check_CH(const CHComodule& m);

/// Eq. (1.1) coaction on M (x) N for H-comodules.
Comodule tensor_H(const Comodule& m, const Comodule& n, const HopfAlgebra& h);

/// Columns span {m : rho(m) = m (x) x}. NotGrouplike unless x is grouplike.
Matrix coinvariants(const Comodule& m, const Matrix& x);

/// Linear system in vec(f) (row-major n x m) whose kernel is Hom^D(M,N).
Matrix colinearity_system(const Comodule& m, const Comodule& n);
bool is_colinear(const Comodule& m, const Comodule& n, const Matrix& f);
HomSpace hom_basis(const Comodule& m, const Comodule& n);

/// Hom^C(M,N) with the H-coaction rho(f)(m) = f(m_[0])_[0] (x) f(m_[0])_[1] S(m_[1]).
/// Closure in the span and the evaluation colinearity identity are verified;
/// ClosureError otherwise.
HomSpace h_coaction_on_homC(const CHComodule& m, const CHComodule& n);
/// The coaction of a HomSpace as an H-comodule of dimension dim().
Comodule hom_as_comodule(const HomSpace& hom, CoalgebraPtr h, std::string name = {});

/// M (x) C with C-coaction m (x) c1 (x) c2 and the tensor H-coaction.
CHComodule cofree_right(const CHComodule& m);
/// L (x) M with C-coaction l (x) m_{0} (x) m_{1} and the tensor H-coaction.
CHComodule tensor_L_M(const Comodule& l, const CHComodule& m);

/// phi(f)(l) = f(l (x) -), returned as coordinates (dim Hom x dim L) in the
/// basis of `homC`. f must be colinear for both coactions of L (x) M, and the
/// result H-colinear; NotColinear otherwise.
Matrix adjunction_phi(const Comodule& l, const CHComodule& m, const CHComodule& n,
                      const HomSpace& homC, const Matrix& f);
/// Inverse: g in coordinates back to f: L (x) M -> N.
Matrix adjunction_phi_inv(const Comodule& l, const CHComodule& m, const CHComodule& n,
                          const HomSpace& homC, const Matrix& g);

/// lambda(m_j*) = sum rho[j*d+a][i] d_a (x) m_i*.
LeftComodule left_dual(const Comodule& m);
/// Columns span the equalizer N box_D W inside N (x) W.
Matrix cotensor(const Comodule& n, const LeftComodule& w);

/// Hom^C(M,N) as a (C,H)-comodule, for H commutative and C cocommutative.
CHComodule homC_as_CH(const CHComodule& m, const CHComodule& n);

/// Basis of the smallest subcomodule containing the given columns.
Matrix generated_subcomodule(const Comodule& m, const Matrix& vectors);
/// Restriction to the subspace spanned by `basis` (independent columns).
/// ClosureError if that subspace is not a subcomodule.
Comodule subcomodule(const Comodule& m, const Matrix& basis);

struct QuotientComodule {
  Comodule comodule;
  Matrix projection;  // M -> M/K
  Matrix section;     // M/K -> M, projection * section = id
};
/// M modulo the subcomodule spanned by the columns of `sub`.
QuotientComodule quotient_comodule(const Comodule& m, const Matrix& sub);

bool same_coalgebra(const Coalgebra& a, const Coalgebra& b);

}  // namespace cosmash
