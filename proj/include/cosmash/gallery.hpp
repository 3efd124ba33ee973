#pragma once

// Constructors for standard examples: finite groups, kG and k^G, graded
// coalgebras, the trace map onto coinvariants and the coinvariant coalgebra B.

#include <string>
#include <vector>

#include "cosmash/comodules.hpp"
#include "cosmash/smashprod.hpp"
#include "cosmash/structures.hpp"

namespace cosmash {

struct FiniteGroupTable {
  std::string name;
  std::vector<std::string> element_names;
  std::vector<std::vector<std::size_t>> mult;  // mult[a][b] = index of ab
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;

  std::size_t order() const { return mult.size(); }
};

inline constexpr std::size_t kMaxGroupOrder = 64;

/// Validates the table exhaustively and derives identity and inverses.
/// InvalidGroupTable on any violated law or |G| > 64.
FiniteGroupTable make_group(std::string name, std::vector<std::vector<std::size_t>> mult,
                            std::vector<std::string> element_names = {});

FiniteGroupTable cyclic_group(std::size_t n);
FiniteGroupTable dihedral_group(std::size_t n);  // order 2n
FiniteGroupTable symmetric_group3();
FiniteGroupTable product_group(const FiniteGroupTable& g, const FiniteGroupTable& k);

HopfAlgebra group_algebra(const FiniteGroupTable& g, FieldSpec field);
HopfAlgebra function_hopf(const FiniteGroupTable& g, FieldSpec field);

/// Basis x, p with Delta(x) = x(x)x, Delta(p) = x(x)p + p(x)x, eps = (1, 0).
Coalgebra c2_coalgebra(FieldSpec field);
/// Dual of the n x n matrix algebra: Delta(e_ij) = sum_k e_ik (x) e_kj.
Coalgebra matrix_coalgebra(std::size_t n, FieldSpec field);
/// Path coalgebra of a -> b: grouplikes a, b and Delta(u) = a(x)u + u(x)b.
Coalgebra path_coalgebra(FieldSpec field);

/// rho(c) = c (x) 1_H.
PairPtr trivial_coaction(Coalgebra c, HopfAlgebra h);
/// rho(c_i) = c_i (x) g_deg[i] over kG. NotGraded naming the first offending
/// basis element.
PairPtr graded_coalgebra(Coalgebra c, const FiniteGroupTable& g, std::vector<std::size_t> deg);
/// rho(c) = sum_s action[s](c) (x) delta_s over k^G, for linear maps action[s].
PairPtr function_coaction(Coalgebra c, const FiniteGroupTable& g,
                          const std::vector<Matrix>& action);

/// C with rho^C = Delta and its own H-coaction.
CHComodule regular_ch(const PairPtr& pair);
/// One-dimensional (C,H)-comodule on grouplikes x of C and y of H.
CHComodule line_ch(const PairPtr& pair, const Matrix& x, const Matrix& y, std::string name);
/// kG-comodule of dimension deg.size() with rho(m_i) = m_i (x) g_deg[i].
Comodule graded_H_comodule(const PairPtr& pair, const std::vector<std::size_t>& deg,
                           std::string name);
/// L (x) ... style H-line: k with rho(1) = 1 (x) y.
Comodule line_H(const PairPtr& pair, const Matrix& y, std::string name);

/// The H coalgebra of a pair, sharing ownership with it.
CoalgebraPtr h_coalgebra(const PairPtr& pair);
CoalgebraPtr c_coalgebra(const PairPtr& pair);

struct TraceData {
  PairPtr pair;
  IntegralFunctional phi;
  Matrix Psi;         // c x c
  Matrix B_basis;     // c x b, columns span C^{coH}
  Matrix to_B;        // b x c, Psi in B-coordinates
  CoalgebraPtr B;
  Report checks;
};

/// Psi(c) = phi(c_[1]) c_[0] and B = C^{coH} with Delta'(b) = Psi(b_1) (x) b_2.
/// PreconditionFailed unless H is cosemisimple.
TraceData trace_map(const PairPtr& pair);

/// M^{coH} with rho'(m) = m_{0} (x) Psi(m_{1}), as a B-comodule. The second
/// element is the inclusion M^{coH} -> M (columns).
struct CoinvariantComodule {
  Comodule comodule;
  Matrix inclusion;
};
CoinvariantComodule coinv_B_comodule(const CHComodule& m, const TraceData& t);

}  // namespace cosmash
