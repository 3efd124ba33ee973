#include "doctest.h"

#include "cosmash/error.hpp"
#include "support.hpp"

using namespace cosmash;
using namespace cosmash::testing;

namespace {

std::vector<FiniteGroupTable> small_groups() {
  return {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
          product_group(cyclic_group(2), cyclic_group(2)), symmetric_group3(),
          cyclic_group(5), cyclic_group(6), cyclic_group(7), dihedral_group(4),
          product_group(cyclic_group(2), cyclic_group(4))};
}

}  // namespace

TEST_CASE("group tables are validated") {
  CHECK_THROWS_AS(make_group("bad", {{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(make_group("bad", {{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(make_group("bad", {{0, 2}, {1, 0}}), Error);
  CHECK_THROWS_AS(cyclic_group(65), Error);
  CHECK(cyclic_group(64).order() == 64);
  // non-associative loop of order 5 with identity and inverses
  const std::vector<std::vector<std::size_t>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    make_group("loop", loop);
    FAIL("expected InvalidGroupTable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidGroupTable);
  }
  const auto s3 = symmetric_group3();
  CHECK(s3.mult[1][2] != s3.mult[2][1]);
  CHECK(dihedral_group(3).order() == 6);
}

TEST_CASE("group_algebra and function_hopf pass their axioms and are dual") {
  for (FieldSpec f : {q(), f2(), f5(), f7()})
    for (const auto& g : small_groups()) {
      if (g.order() > 8) continue;
      const auto kg = group_algebra(g, f);
      const auto fn = function_hopf(g, f);
      CHECK(check_hopf(kg).ok());
      CHECK(check_hopf(fn).ok());
      CHECK(fn.coalgebra.delta == transpose(kg.mult));
      CHECK(fn.coalgebra.epsilon == transpose(kg.unit));
      CHECK(fn.mult == transpose(kg.coalgebra.delta));
      CHECK(fn.unit == transpose(kg.coalgebra.epsilon));
      CHECK(fn.antipode == transpose(kg.antipode));
    }
  CHECK_FALSE(is_commutative(group_algebra(symmetric_group3(), q())));
  CHECK(function_hopf(cyclic_group(1), f5()).coalgebra.delta == Matrix::identity(f5(), 1));
}

TEST_CASE("cosemisimplicity of k^G follows Maschke; kG is always cosemisimple") {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (const auto& g : small_groups()) {
      if (g.order() > 8) continue;
      const FieldSpec f = FieldSpec::prime(p);
      const bool maschke = g.order() % p != 0;
      const auto fn = function_hopf(g, f);
      CHECK(is_cosemisimple_any_char(fn.coalgebra) == maschke);
      CHECK(is_cosemisimple_any_char(group_algebra(g, f).coalgebra));
      if (p > g.order()) {
        CHECK(is_cosemisimple(fn.coalgebra) == maschke);
        CHECK(is_cosemisimple(group_algebra(g, f).coalgebra));
      }
      // integrals normalize exactly when cosemisimple
      CHECK(left_integral(fn).normalized == maschke);
      CHECK(left_integral(group_algebra(g, f)).normalized);
    }
  CHECK(is_cosemisimple(group_algebra(cyclic_group(3), f5()).coalgebra));
  CHECK(is_cosemisimple(function_hopf(cyclic_group(2), f5()).coalgebra));
}

TEST_CASE("graded_coalgebra") {
  const auto z2 = cyclic_group(2);
  const auto triv = graded_coalgebra(c2_coalgebra(f5()), z2, {0, 0});
  CHECK(triv->rho == kron(Matrix::identity(f5(), 2), h_(triv, 0)));
  CHECK(check_comodule_coalgebra(*c2h2(f5())).ok());
  CHECK_THROWS_AS(graded_coalgebra(c2_coalgebra(f5()), z2, {1, 0}), Error);
  // every accepted grading gives a smash coalgebra of dimension dim C |G|
  const auto z3 = cyclic_group(3);
  int accepted = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      try {
        const auto p = graded_coalgebra(c2_coalgebra(q()), z3, {a, b});
        const auto d = smash_coproduct(p);
        CHECK(d.D->dim() == 6);
        CHECK(check_coalgebra(*d.D).ok());
        ++accepted;
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotGraded);
      }
    }
  CHECK(accepted == 3);
}

TEST_CASE("trace_map on the running example") {
  const auto p = c2h2(f5());
  const auto t = trace_map(p);
  CHECK(t.phi.phi == Matrix::from_rows(f5(), {{1, 0}}));
  CHECK(t.Psi == Matrix::from_rows(f5(), {{1, 0}, {0, 0}}));
  CHECK(t.B->dim() == 1);
  CHECK(t.B->delta == Matrix::identity(f5(), 1));
  CHECK(t.checks.ok());
  CHECK(t.Psi * t.Psi == t.Psi);
  const auto ci = coinvariants(make_comodule("C", h_coalgebra(p), p->rho), p->H.unit);
  CHECK(rank(hstack(t.Psi, ci)) == rank(ci));
}

TEST_CASE("trace_map trivial coaction and k^G coaction") {
  const auto p = kz2_trivial(f7());
  const auto t = trace_map(p);
  CHECK(t.Psi == Matrix::identity(f7(), 2));
  CHECK(t.B->dim() == 2);
  CHECK(t.checks.ok());

  // kZ3 with Z2 acting by inversion, coaction over k^{Z2}
  const auto z3 = cyclic_group(3);
  const auto z2 = cyclic_group(2);
  const auto a = group_algebra(z3, q());
  Matrix inv(q(), 3, 3);
  for (std::size_t i = 0; i < 3; ++i) inv.set(z3.inverse[i], i, 1);
  const auto pa = function_coaction(a.coalgebra, z2, {Matrix::identity(q(), 3), inv});
  CHECK(check_comodule_coalgebra(*pa).ok());
  const auto ta = trace_map(pa);
  CHECK(ta.checks.ok());
  CHECK(ta.B->dim() == 2);  // e and g + g^2
  CHECK(check_coalgebra(*smash_coproduct(pa).D).ok());
  CHECK_THROWS_AS(trace_map(trivial_coaction(c2_coalgebra(f2()), function_hopf(z2, f2()))),
                  Error);
}

TEST_CASE("coinv_B_comodule") {
  const auto p = c2h2(f5());
  const auto t = trace_map(p);
  const auto c = coinv_B_comodule(regular_ch(p), t);
  CHECK(c.comodule.dim() == 1);
  CHECK(c.comodule.rho == t.B->delta);
  CHECK(check_comodule(c.comodule).ok());
  const auto kx = coinv_B_comodule(line_ch(p, e_(p, 0), h_(p, 0), "kx"), t);
  CHECK(kx.comodule.dim() == 1);
  CHECK(check_comodule(kx.comodule).ok());
  const auto kxg = coinv_B_comodule(line_ch(p, e_(p, 0), h_(p, 1), "kxg"), t);
  CHECK(kxg.comodule.dim() == 0);

  const auto pt = kz2_trivial(f5());
  const auto tt = trace_map(pt);
  for (const auto& m : ch_gallery(pt, 3)) {
    const auto b = coinv_B_comodule(m, tt);
    CHECK(check_comodule(b.comodule).ok());
    if (m.rhoH == kron(Matrix::identity(f5(), m.dim()), pt->H.unit)) CHECK(b.comodule.dim() == m.dim());
  }
  CHECK_THROWS_AS(coinv_B_comodule(regular_ch(pt), t), Error);
}
