#pragma once

// Injective resolutions by cofree comodules, Ext dimensions (with the
// H-coaction in the (C,H) setting) and numerical checks of the collapse and
// bound statements built on them.

#include <optional>
#include <vector>

#include "cosmash/comodules.hpp"
#include "cosmash/smashprod.hpp"
#include "cosmash/gallery.hpp"

namespace cosmash {

/// How each cokernel Y is embedded in a cofree comodule V (x) D.
///   Full: V = Y and the embedding is rho^Y (the plain cobar step).
///   Compressed: V is a coordinate quotient of Y, chosen greedily (first
///     coordinates dropped first) so that (q (x) id) rho^Y stays injective.
///   CompressedReverse: as Compressed, trying the last coordinates first.
enum class Embedding { Full, Compressed, CompressedReverse };

struct ResolutionOptions {
  Embedding embedding = Embedding::Full;
  /// 0 means unlimited; otherwise ResourceLimit once a term exceeds it.
  std::size_t max_term_dim = 0;
  /// Once a cokernel Y^t is injective, take E^t = Y^t and stop: later terms are 0.
  bool stop_when_injective = false;
};

/// 0 -> N -> E^0 -> E^1 -> ... with E^q = V_q (x) D, except after truncation. Y^0 = N and Y^{q+1} is
/// the cokernel of Y^q -> E^q.
struct Resolution {
  Comodule base;
  std::vector<Comodule> terms;        // E^0 .. E^qmax
  std::vector<std::size_t> generators;  // dim V_q
  std::vector<Comodule> cokernels;    // Y^0 = N, ..., Y^{qmax+1}
  std::vector<Matrix> embeddings;     // iota_q: Y^q -> E^q
  std::vector<Matrix> projections;    // pi_q: E^q -> Y^{q+1}
  /// Degree t with E^t = Y^t injective (not cofree) and E^q = 0 beyond it.
  std::optional<std::size_t> injective_at;

  Matrix augmentation() const { return embeddings.front(); }
  /// d^q = iota_{q+1} pi_q : E^q -> E^{q+1}, for q < qmax.
  Matrix differential(std::size_t q) const;
};

Resolution cobar_resolution(const Comodule& n, std::size_t qmax, ResolutionOptions options = {});
/// Exactness at every position and colinearity of every map.
Report check_resolution(const Resolution& r);

struct ExtTable {
  std::vector<std::size_t> dims;
  /// Present for ext_with_H_structure: degree q cohomology as an H-comodule.
  std::vector<Comodule> coactions;

  /// Coinvariant dimension of each degree (requires coactions).
  std::vector<std::size_t> coinvariant_dims(const Matrix& unit) const;
};

ResolutionOptions compressed();

/// Cohomology of Hom^D(M, E^*) via Hom^D(M, V (x) D) = Hom(M, V).
ExtTable ext_dims(const Comodule& m, const Comodule& n, std::size_t qmax,
                  ResolutionOptions options = compressed());
/// Independent route: modules over the dual algebra and a free resolution of M.
ExtTable ext_via_dual_algebra(const Comodule& m, const Comodule& n, std::size_t qmax);
/// EXT^{C,q}(M,N) with its H-coaction, from a resolution of N over C |x H.
ExtTable ext_with_H_structure(const CHComodule& m, const CHComodule& n, std::size_t qmax,
                              ResolutionOptions options = compressed());
/// R^p(-)^{coH}(N) = Ext^H(k, N).
ExtTable derived_coinvariants(const Comodule& n, const HopfAlgebra& h, std::size_t pmax,
                              ResolutionOptions options = compressed());

/// A Report together with the two sides it compared.
struct SideBySide {
  Report report;
  std::vector<std::size_t> lhs;
  std::vector<std::size_t> rhs;
};

/// Hom^H(L, EXT^{C,q}(M,N)) against Ext^{C|xH,q}(L (x) M, N).
/// PreconditionFailed unless H is cosemisimple.
SideBySide collapse_check(const Comodule& l, const CHComodule& m, const CHComodule& n,
                          std::size_t qmax, ResolutionOptions options = compressed());
/// Abutment dims (rhs) bounded by E_2 totals (lhs), equality at n = 0.
SideBySide grothendieck_bound_check(const Comodule& l, const CHComodule& m,
                                    const CHComodule& n, std::size_t nmax,
                                    ResolutionOptions options = compressed());

enum class CosemisimplicityTest { TraceForm, Separability };
/// cosemisimple(C) and cosemisimple(H) imply cosemisimple(C |x H).
Report semisimple_smash_check(const PairPtr& pair,
                              CosemisimplicityTest test = CosemisimplicityTest::TraceForm);

/// Coradical C_0 = J(D*)^perp as a subcomodule of D (trace-form radical;
/// UnsupportedField outside char 0 or p > dim D).
Comodule coradical(const CoalgebraPtr& d);
/// M is injective iff Ext^1(C_0, M) = 0.
bool injectivity_test(const Comodule& m);
/// M is injective iff rho^M has a colinear retraction M (x) D -> M.
bool splits_into_cofree(const Comodule& m);
/// Injectivity over C and over C |x H agree (H cosemisimple).
Report injectivity_transfer_check(const CHComodule& m);

/// EXT^B(M,N)^{coH} against Ext^B(M, N^{coH}) for B with trivial H-coaction.
SideBySide theorem33_check(const Comodule& m, const CHComodule& n, std::size_t qmax,
                           ResolutionOptions options = compressed());
/// Abutment Ext^{D,n}(k_{x|x1}, N) against E_2 totals of (EXT^{C,q}(k_x, N))^{coH}
/// derived functors; per-degree equality with coinvariants when H is cosemisimple.
SideBySide hochschild_serre_check(const CHComodule& n, const Matrix& x, std::size_t qmax,
                                  ResolutionOptions options = compressed());

}  // namespace cosmash
