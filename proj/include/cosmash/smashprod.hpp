#pragma once

// Comodule coalgebras, the smash coproduct C |x H and the translation between
// (C,H)-comodules and comodules over C |x H.
//
// The basis of D = C |x H is c-index major: c_i |x h_a has index i*dim H + a.

#include "cosmash/comodules.hpp"

namespace cosmash {

/// Coaction axioms of rho plus H-colinearity of Delta_C and epsilon_C.
Report check_comodule_coalgebra(const ComoduleCoalgebra& cc);

struct SmashCoalgebra {
  CoalgebraPtr D;
  PairPtr pair;
  /// pi_C = id (x) eps_H and pi_H = eps_C (x) id, both D -> factor.
  Matrix pi_C;
  Matrix pi_H;
};

/// Delta(c |x h) = (c_1 |x c_2[1] h_2) (x) (c_2[0] |x h_1). AxiomError if the
/// input fails its checks or the result is not a coalgebra.
SmashCoalgebra smash_coproduct(PairPtr pair);

/// The D-coaction rho_D = (rho^C (x) id)(id (x) S) rho^H. Its C-projection is
/// rho^C; its H-projection is (id (x) S) rho^H, because eps_C (x) id maps D onto
/// the co-opposite of H. NoCompatibleCoaction if rho_D is not a comodule.
Comodule ch_to_smash(const CHComodule& m, const SmashCoalgebra& d);
/// Inverse translation: rho^C = (id (x) pi_C) rho_D, rho^H = (id (x) S^-1 pi_H) rho_D.
CHComodule smash_to_ch(const Comodule& m, const SmashCoalgebra& d);

/// x |x 1_H as a column over D.
Matrix transport_grouplike(const SmashCoalgebra& d, const Matrix& x);

/// True iff (pi_C (x) pi_H) Delta_D = id_D, which makes rho_D unique given its
/// two projections.
bool projections_determine_coaction(const SmashCoalgebra& d);

}  // namespace cosmash
