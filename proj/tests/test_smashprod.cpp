#include "doctest.h"

#include "cosmash/error.hpp"
#include "support.hpp"

using namespace cosmash;
using namespace cosmash::testing;

namespace {

std::size_t idx(const SmashCoalgebra& d, std::size_t c, std::size_t h) {
  return c * d.pair->H.dim() + h;
}

Matrix d_(const SmashCoalgebra& d, std::size_t c, std::size_t h) {
  return basis_vector(d.D->field, d.D->dim(), idx(d, c, h));
}

}  // namespace

TEST_CASE("check_comodule_coalgebra examples") {
  const auto triv = trivial_coaction(c2_coalgebra(f5()), group_algebra(cyclic_group(2), f5()));
  CHECK(check_comodule_coalgebra(*triv).ok());
  CHECK(check_comodule_coalgebra(*c2h2(f5())).ok());

  ComoduleCoalgebra bad = *c2h2(f5());
  bad.rho = Matrix::from_rows(f5(), {{0, 0}, {1, 0}, {0, 0}, {0, 1}});
  const Report r = check_comodule_coalgebra(bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.first_failure()->name == "delta colinear");
  CHECK(r.first_failure()->witness == "x");
  try {
    graded_coalgebra(c2_coalgebra(f5()), cyclic_group(2), {1, 1});
    FAIL("expected NotGraded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotGraded);
  }
}

TEST_CASE("smash_coproduct examples") {
  const auto d4 = smash_coproduct(c2h2(f5()));
  CHECK(d4.D->dim() == 4);
  CHECK(check_coalgebra(*d4.D).ok());
  // Delta(p|xe) = (x|xg)(x)(p|xe) + (p|xe)(x)(x|xe)
  const Matrix expected = kron(d_(d4, 0, 1), d_(d4, 1, 0)) + kron(d_(d4, 1, 0), d_(d4, 0, 0));
  CHECK(column(d4.D->delta, idx(d4, 1, 0)) == expected);
  CHECK(d4.D->basis_names[idx(d4, 1, 0)] == "p|xe");

  // H = k gives C back
  const auto ck = smash_coproduct(trivial_coaction(c2_coalgebra(q()), unit_hopf(q())));
  CHECK(ck.D->delta == c2_coalgebra(q()).delta);

  // trivial coaction, cocommutative H: tensor product coalgebra
  const auto t = smash_coproduct(kz2_trivial(f7()));
  const auto& c = t.pair->C;
  const auto& h = t.pair->H.coalgebra;
  const std::size_t dims[] = {2, 2, 2, 2};
  const std::size_t order[] = {0, 2, 1, 3};
  CHECK(t.D->delta == tensor_permutation(f7(), dims, order) * kron(c.delta, h.delta));
  CHECK(projections_determine_coaction(d4));
}

TEST_CASE("smash coproduct of a non-cocommutative H") {
  // S3 group algebra acting trivially on C2: Delta(c|xh) = (c1|xh)(x)(c2|xh).
  const auto s3 = symmetric_group3();
  const auto d = smash_coproduct(trivial_coaction(c2_coalgebra(q()), group_algebra(s3, q())));
  CHECK(d.D->dim() == 12);
  CHECK(check_coalgebra(*d.D).ok());
  // matrix coalgebra graded by Z3: deg e_ij = g^(i-j)
  const auto z3 = cyclic_group(3);
  const auto m = graded_coalgebra(matrix_coalgebra(2, q()), z3, {0, 2, 1, 0});
  CHECK(check_coalgebra(*smash_coproduct(m).D).ok());
}

TEST_CASE("ch_to_smash examples and round trips") {
  const auto p = c2h2(f5());
  const auto d4 = smash_coproduct(p);
  const auto kx = line_ch(p, e_(p, 0), h_(p, 0), "kx");
  const auto dk = ch_to_smash(kx, d4);
  CHECK(dk.rho == d_(d4, 0, 0));
  CHECK(check_comodule(dk).ok());

  for (const auto& pair : {c2h2(f5()), kz2_trivial(f5()), c2h2(q())}) {
    const auto d = smash_coproduct(pair);
    for (const auto& m : ch_gallery(pair, 3)) {
      const auto md = ch_to_smash(m, d);
      const auto back = smash_to_ch(md, d);
      CHECK(back.rhoC == m.rhoC);
      CHECK(back.rhoH == m.rhoH);
      CHECK(ch_to_smash(back, d).rho == md.rho);
    }
  }
  // Every comodule over D comes from a (C,H)-comodule: cofree D-comodules too.
  const auto cof = cofree(d4.D, 1);
  CHECK(ch_to_smash(smash_to_ch(cof, d4), d4).rho == cof.rho);

  const auto bad = line_ch(p, e_(p, 1), h_(p, 0), "kp");
  try {
    ch_to_smash(bad, d4);
    FAIL("expected NoCompatibleCoaction");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoCompatibleCoaction);
  }
}

TEST_CASE("the D-coaction needs the antipode when S is not the identity on degrees") {
  const auto z3 = cyclic_group(3);
  const auto p = graded_coalgebra(c2_coalgebra(q()), z3, {0, 1});
  const auto d = smash_coproduct(p);
  const auto c2 = regular_ch(p);
  CHECK(check_comodule(ch_to_smash(c2, d)).ok());
  // Composing rho^C with rho^H directly (no antipode) is not a D-coaction.
  const auto id_h = Matrix::identity(q(), 3);
  const Comodule naive{"naive", d.D, kron(c2.rhoC, id_h) * c2.rhoH, c2.basis_names};
  CHECK_FALSE(check_comodule(naive).ok());
  for (const auto& m : ch_gallery(p, 3)) {
    const auto md = ch_to_smash(m, d);
    const auto back = smash_to_ch(md, d);
    CHECK(back.rhoH == m.rhoH);
  }
}

TEST_CASE("Hom over D agrees with H-coinvariants of Hom^C") {
  int pairs = 0;
  for (const auto& p : {c2h2(f5()), kz2_trivial(f5())}) {
    const auto d = smash_coproduct(p);
    const auto gal = ch_gallery(p, 3);
    for (const auto& m : gal)
      for (const auto& n : gal) {
        const auto lhs = hom_basis(ch_to_smash(m, d), ch_to_smash(n, d)).dim();
        const auto hc = h_coaction_on_homC(m, n);
        const auto rhs = coinvariants(hom_as_comodule(hc, h_coalgebra(p)), p->H.unit).cols();
        CHECK(lhs == rhs);
        // functoriality: D-colinear iff C- and H-colinear
        const auto both = kernel_basis(vstack(colinearity_system(m.over_C(), n.over_C()),
                                              colinearity_system(m.over_H(), n.over_H())));
        CHECK(both.cols() == lhs);
        ++pairs;
      }
  }
  CHECK(pairs >= 20);
}

TEST_CASE("grouplike transport") {
  const auto p = c2h2(f5());
  const auto d = smash_coproduct(p);
  const auto x1 = transport_grouplike(d, e_(p, 0));
  CHECK(x1 == d_(d, 0, 0));
  CHECK(is_grouplike(*d.D, x1));
  CHECK(is_grouplike(*d.D, d_(d, 0, 1)));
  CHECK_FALSE(is_grouplike(*d.D, d_(d, 1, 0)));
}
