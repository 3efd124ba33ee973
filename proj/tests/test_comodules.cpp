#include "doctest.h"

#include "cosmash/error.hpp"
#include "support.hpp"

using namespace cosmash;
using namespace cosmash::testing;

namespace {

struct Running {
  PairPtr p = c2h2(f5());
  CoalgebraPtr C = c_coalgebra(p);
  CoalgebraPtr H = h_coalgebra(p);
  Matrix x = e_(p, 0);
  Matrix e = h_(p, 0);
  Matrix g = h_(p, 1);
  CHComodule kx = line_ch(p, x, e, "kx");
  CHComodule kxg = line_ch(p, x, g, "kxg");
  CHComodule c2 = regular_ch(p);
};

}  // namespace

TEST_CASE("check_comodule examples") {
  Running r;
  CHECK(check_comodule(line_H(r.p, r.e, "k")).ok());
  CHECK(check_comodule(regular_comodule(r.C)).ok());
  CHECK(check_comodule(r.kx.over_C()).ok());
  CHECK_FALSE(check_comodule(grouplike_line(r.C, e_(r.p, 1))).ok());
  CHECK_THROWS_AS(make_comodule("bad", r.C, Matrix::zero(f5(), 3, 1)), Error);
}

TEST_CASE("check_CH examples") {
  Running r;
  CHECK(check_CH(r.kx).ok());
  CHECK(check_CH(r.c2).ok());
  // C2 regarded with the (invalid) grading deg x = g: compatibility fails on x
  auto bad_pair = share(ComoduleCoalgebra{"bad", r.p->C, r.p->H,
                                          Matrix::from_rows(f5(), {{0, 0}, {1, 0}, {0, 0}, {0, 1}})});
  const Report rep = check_CH(regular_ch(bad_pair));
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.first_failure()->name == "compatibility");
  CHECK(rep.first_failure()->witness == "x");
}

TEST_CASE("tensor_H examples") {
  Running r;
  const HopfAlgebra& h = r.p->H;
  const auto k = line_H(r.p, r.e, "k");
  const auto lg = line_H(r.p, r.g, "Lg");
  const auto c2h = r.c2.over_H();
  CHECK(tensor_H(k, c2h, h).rho == c2h.rho);
  CHECK(tensor_H(c2h, k, h).rho == c2h.rho);
  CHECK(tensor_H(lg, lg, h).rho == r.e);
  CHECK(check_comodule(tensor_H(c2h, c2h, h)).ok());
}

TEST_CASE("coinvariants examples") {
  Running r;
  const auto ci = coinvariants(r.c2.over_H(), r.e);
  CHECK(ci == r.x);
  CHECK(coinvariants(line_H(r.p, r.e, "k"), r.e).cols() == 1);
  CHECK(coinvariants(regular_comodule(r.C), r.x) == r.x);
  try {
    coinvariants(regular_comodule(r.C), e_(r.p, 1));
    FAIL("expected NotGrouplike");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotGrouplike);
  }
}

TEST_CASE("hom_basis examples") {
  Running r;
  const auto kxc = r.kx.over_C();
  const auto c2c = r.c2.over_C();
  const auto h1 = hom_basis(kxc, c2c);
  REQUIRE(h1.dim() == 1);
  CHECK(h1.basis[0] == r.x);
  CHECK(hom_basis(kxc, kxc).dim() == 1);
  const auto endo = hom_basis(c2c, c2c);
  CHECK(endo.coordinates(Matrix::identity(f5(), 2)).has_value());
  for (const auto& f : endo.basis) CHECK(is_colinear(c2c, c2c, f));
}

TEST_CASE("h_coaction_on_homC examples") {
  Running r;
  const auto hk = h_coaction_on_homC(r.kx, r.kx);
  REQUIRE(hk.dim() == 1);
  CHECK(*hk.coaction == r.e);
  const auto hc = h_coaction_on_homC(r.kx, r.c2);
  REQUIRE(hc.dim() == 1);
  CHECK(*hc.coaction == r.e);
  // Maps from the degree-g line into k_x carry degree g^-1 = g.
  const auto hg = h_coaction_on_homC(r.kxg, r.kx);
  REQUIRE(hg.dim() == 1);
  CHECK(*hg.coaction == r.g);
  CHECK(check_comodule(hom_as_comodule(hc, r.H)).ok());
}

TEST_CASE("Hom coaction in non-involutive antipode case") {
  // Z3 grading: S(g) = g^2, so the S in the Hom coaction matters.
  const auto z3 = cyclic_group(3);
  const auto p = graded_coalgebra(c2_coalgebra(q()), z3, {0, 1});
  const auto kx = line_ch(p, e_(p, 0), h_(p, 0), "kx");
  const auto kxg = line_ch(p, e_(p, 0), h_(p, 1), "kxg");
  const auto c2 = regular_ch(p);
  CHECK(*h_coaction_on_homC(kxg, kx).coaction == h_(p, 2));
  CHECK(*h_coaction_on_homC(kx, kxg).coaction == h_(p, 1));
  const auto endo = h_coaction_on_homC(c2, c2);
  CHECK(check_comodule(hom_as_comodule(endo, h_coalgebra(p))).ok());
}

TEST_CASE("composition closure and convolution of coactions") {
  for (const auto& p : {c2h2(f5()), kz2_trivial(f5())}) {
    const auto gal = ch_gallery(p, 2);
    const Algebra alg = p->H.algebra();
    const std::size_t h = p->H.dim();
    for (const auto& m : gal)
      for (const auto& n : gal)
        for (const auto& l : gal) {
          const auto mn = h_coaction_on_homC(m, n);
          const auto nl = h_coaction_on_homC(n, l);
          const auto ml = h_coaction_on_homC(m, l);
          for (std::size_t b = 0; b < mn.dim(); ++b)
            for (std::size_t c = 0; c < nl.dim(); ++c) {
              const Matrix gf = nl.basis[c] * mn.basis[b];
              auto coords = ml.coordinates(gf);
              REQUIRE(coords.has_value());
              // rho(g f) = g_[0] f_[0] (x) g_[1] f_[1]
              Matrix lhs = *ml.coaction * *coords;
              Matrix rhs(p->C.field, ml.dim() * h, 1);
              for (std::size_t c2 = 0; c2 < nl.dim(); ++c2)
                for (std::size_t a2 = 0; a2 < h; ++a2) {
                  if (nl.coaction->is_zero_at(c2 * h + a2, c)) continue;
                  for (std::size_t b2 = 0; b2 < mn.dim(); ++b2)
                    for (std::size_t a1 = 0; a1 < h; ++a1) {
                      if (mn.coaction->is_zero_at(b2 * h + a1, b)) continue;
                      const Scalar s = nl.coaction->at(c2 * h + a2, c) * mn.coaction->at(b2 * h + a1, b);
                      auto comp = ml.coordinates(nl.basis[c2] * mn.basis[b2]);
                      REQUIRE(comp.has_value());
                      const Matrix prod = column(alg.mult, a2 * h + a1);
                      rhs = rhs + scaled(kron(*comp, prod), s);
                    }
                }
              CHECK(lhs == rhs);
            }
        }
  }
}

TEST_CASE("cofree_right and tensor_L_M") {
  Running r;
  const auto k = make_ch("k", r.p, r.x, r.e);  // k_x
  const auto kc = cofree_right(k);
  CHECK(kc.dim() == 2);
  CHECK(check_CH(kc).ok());
  CHECK(kc.rhoC == r.p->C.delta);
  const auto c2c = cofree_right(r.c2);
  CHECK(c2c.dim() == 4);
  CHECK(check_CH(c2c).ok());

  const auto lk = tensor_L_M(line_H(r.p, r.e, "k"), r.c2);
  CHECK(lk.rhoC == r.c2.rhoC);
  CHECK(lk.rhoH == r.c2.rhoH);
  const auto lg = tensor_L_M(line_H(r.p, r.g, "Lg"), r.kx);
  CHECK(lg.rhoC == r.x);
  CHECK(lg.rhoH == r.g);
  for (const auto& p : {c2h2(f5()), kz2_trivial(f5())})
    for (const auto& m : ch_gallery(p, 2)) {
      CHECK(check_CH(cofree_right(m)).ok());
      for (std::size_t a = 0; a < p->H.dim(); ++a)
        CHECK(check_CH(tensor_L_M(line_H(p, h_(p, a), "L"), m)).ok());
    }
}

TEST_CASE("adjunction round trips") {
  Running r;
  std::mt19937 rng(11);
  int triples = 0;
  for (const auto& p : {c2h2(f5()), kz2_trivial(f5())}) {
    const auto gal = ch_gallery(p, 2);
    std::vector<Comodule> ls = {line_H(p, h_(p, 0), "k"), line_H(p, h_(p, 1), "Lg"),
                                graded_H_comodule(p, {0, 1}, "L01")};
    for (const auto& l : ls)
      for (const auto& m : gal)
        for (const auto& n : gal) {
          const auto homc = h_coaction_on_homC(m, n);
          const auto lm = tensor_L_M(l, m);
          // Hom^{C,H}(L (x) M, N) = intersection of both colinearity systems
          const Matrix both = vstack(colinearity_system(lm.over_C(), n.over_C()),
                                     colinearity_system(lm.over_H(), n.over_H()));
          const Matrix left = kernel_basis(both);
          const auto right = hom_basis(l, hom_as_comodule(homc, h_coalgebra(p)));
          CHECK(left.cols() == right.dim());
          if (left.cols() == 0) continue;
          // random colinear f
          Matrix coeffs = random_matrix(rng, p->C.field, left.cols(), 1, -2, 2, 0.0);
          const Matrix f = unvectorize(left * coeffs, n.dim(), lm.dim());
          const Matrix g = adjunction_phi(l, m, n, homc, f);
          CHECK(adjunction_phi_inv(l, m, n, homc, g) == f);
          // and from the other side
          for (const auto& gb : right.basis)
            CHECK(adjunction_phi(l, m, n, homc, adjunction_phi_inv(l, m, n, homc, gb)) == gb);
          ++triples;
        }
  }
  CHECK(triples >= 10);

  Running s;
  const auto homc = h_coaction_on_homC(s.kx, s.c2);
  CHECK_THROWS_AS(adjunction_phi(line_H(s.p, s.e, "k"), s.kx, s.c2, homc,
                                 Matrix::from_rows(f5(), {{0}, {1}})),
                  Error);
}

TEST_CASE("left duals and cotensor") {
  Running r;
  const auto kxd = left_dual(r.kx.over_C());
  CHECK(check_left_comodule(kxd).ok());
  CHECK(cotensor(r.kx.over_C(), kxd).cols() == 1);
  // N box C = N
  const auto cd = LeftComodule{r.C, r.p->C.delta};
  CHECK(check_left_comodule(cd).ok());
  for (const auto& p : {c2h2(f5()), kz2_trivial(f5())}) {
    const auto reg = LeftComodule{c_coalgebra(p), p->C.delta};
    for (const auto& n : ch_gallery(p, 3)) {
      const auto nc = n.over_C();
      CHECK(cotensor(nc, reg).cols() == n.dim());
      for (const auto& m : ch_gallery(p, 2)) {
        const auto md = left_dual(m.over_C());
        CHECK(check_left_comodule(md).ok());
        CHECK(cotensor(nc, md).cols() == hom_basis(m.over_C(), nc).dim());
      }
    }
  }
}

TEST_CASE("homC_as_CH") {
  Running r;
  const auto h = homC_as_CH(r.kx, r.kx);
  CHECK(h.dim() == 1);
  CHECK(h.rhoC == r.x);
  CHECK(h.rhoH == r.e);
  CHECK(check_CH(h).ok());
  for (const auto& p : {c2h2(f5()), kz2_trivial(f5())}) {
    const auto gal = ch_gallery(p, 2);
    for (const auto& m : gal)
      for (const auto& n : gal) CHECK(check_CH(homC_as_CH(m, n)).ok());
  }
  // noncocommutative C
  const auto pp = trivial_coaction(path_coalgebra(f5()), group_algebra(cyclic_group(2), f5()));
  const auto a = line_ch(pp, e_(pp, 0), h_(pp, 0), "ka");
  try {
    homC_as_CH(a, a);
    FAIL("expected PreconditionFailed");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::PreconditionFailed);
  }
}

TEST_CASE("direct sums and basis changes stay valid") {
  std::mt19937 rng(3);
  for (const auto& p : {c2h2(f5()), kz2_trivial(q())})
    for (const auto& m : ch_gallery(p, 3)) {
      const auto conj = change_basis(m, random_invertible(rng, p->C.field, m.dim()));
      CHECK(check_CH(conj).ok());
      CHECK(hom_basis(conj.over_C(), m.over_C()).dim() == hom_basis(m.over_C(), m.over_C()).dim());
    }
}
