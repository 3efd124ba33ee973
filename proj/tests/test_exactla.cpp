#include "doctest.h"

#include "cosmash/error.hpp"
#include "cosmash/exactla.hpp"
#include "support.hpp"

using namespace cosmash;
using namespace cosmash::testing;

TEST_CASE("scalars parse exactly and reduce into F_p") {
  CHECK(parse_scalar("-2/7") == Scalar(-2, 7));
  CHECK(parse_scalar("6/4") == Scalar(3, 2));
  CHECK(format_scalar(parse_scalar("  -10/4 ")) == "-5/2");
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("abc"), Error);
  CHECK(f5().reduce(Scalar(1, 2)) == 3);
  CHECK(f5().inv(2) == 3);
  CHECK(f5().is_zero(10));
  CHECK_THROWS_AS(FieldSpec::prime(6), Error);
  CHECK_THROWS_AS(FieldSpec::prime(std::uint64_t{1} << 31), Error);

  Matrix m(f5(), 1, 1);
  CHECK_THROWS_AS(m.set(0, 0, Scalar(1, 5)), Error);
}

TEST_CASE("rref examples") {
  const auto id = Matrix::identity(q(), 2);
  const auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.rank == 2);

  const auto z = Matrix::zero(q(), 3, 2);
  const auto rz = rref(z);
  CHECK(rz.reduced == z);
  CHECK(rz.pivots.empty());
  CHECK(rz.rank == 0);

  // row2 = 3 * row1 over F_5
  const auto a = Matrix::from_rows(f5(), {{2, 4}, {1, 2}});
  const auto ra = rref(a);
  CHECK(ra.reduced == Matrix::from_rows(f5(), {{1, 2}, {0, 0}}));
  CHECK(ra.rank == 1);
  CHECK(ra.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("mixed fields are rejected") {
  const auto a = Matrix::identity(q(), 2);
  const auto b = Matrix::identity(f5(), 2);
  try {
    (void)(a * b);
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
  CHECK_THROWS_AS(kron(a, b), Error);
  CHECK_THROWS_AS(solve(a, b), Error);
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(Matrix::identity(q(), 3)).cols() == 0);
  CHECK(kernel_basis(Matrix::zero(q(), 3, 3)) == Matrix::identity(q(), 3));
  const auto k = kernel_basis(Matrix::from_rows(q(), {{1, 2}}));
  CHECK(k == Matrix::from_rows(q(), {{-2}, {1}}));
}

TEST_CASE("kron examples and flattening convention") {
  CHECK(kron(Matrix::identity(q(), 2), Matrix::identity(q(), 3)) == Matrix::identity(q(), 6));
  const auto a = Matrix::from_rows(q(), {{1, 2}, {3, 4}});
  CHECK(kron(a, Matrix::identity(q(), 1)) == a);
  const auto s = Matrix::from_rows(f5(), {{0, 1}, {1, 0}});
  CHECK(kron(s, Matrix::from_rows(f5(), {{2}})) == Matrix::from_rows(f5(), {{0, 2}, {2, 0}}));
  // e_1 (x) e_0 in k^2 (x) k^3 sits at index 1*3 + 0.
  const auto v = kron(basis_vector(q(), 2, 1), basis_vector(q(), 3, 0));
  CHECK(v == basis_vector(q(), 6, 3));
}

TEST_CASE("quotient_map examples") {
  const auto full = quotient_map(Matrix::identity(q(), 3), 3);
  CHECK(full.rows() == 0);
  CHECK(full.cols() == 3);
  CHECK(quotient_map(Matrix::zero(q(), 3, 0), 3) == Matrix::identity(q(), 3));
  const auto s = Matrix::from_rows(q(), {{1}, {1}});
  const auto qm = quotient_map(s, 2);
  CHECK(qm.rows() == 1);
  CHECK((qm * s).is_zero());
  CHECK(rank(qm) == 1);
  CHECK_THROWS_AS(quotient_map(s, 3), Error);
}

TEST_CASE("solve returns particular solutions and detects inconsistency") {
  const auto a = Matrix::from_rows(q(), {{1, 1}, {2, 2}});
  const auto b = Matrix::from_rows(q(), {{3}, {6}});
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  CHECK_FALSE(solve(a, Matrix::from_rows(q(), {{1}, {3}})));
  const auto m = Matrix::from_rows(f7(), {{2, 1}, {1, 1}});
  CHECK(m * inverse(m) == Matrix::identity(f7(), 2));
  CHECK_THROWS_AS(inverse(a), Error);
}

TEST_CASE("tensor permutations") {
  const auto t = twist(q(), 2, 3);
  const auto a = Matrix::from_rows(q(), {{1, 2}, {3, 4}});
  const auto b = Matrix::from_rows(q(), {{0, 1, 5}, {2, 0, 1}, {1, 1, 1}});
  // tau (a (x) b) = (b (x) a) tau
  CHECK(t * kron(a, b) == kron(b, a) * t);
  const std::size_t dims[] = {2, 3, 2};
  const std::size_t order[] = {2, 0, 1};
  const auto p = tensor_permutation(q(), dims, order);
  const auto c = Matrix::from_rows(q(), {{1, 1}, {0, 1}});
  CHECK(p * kron({a, b, c}) == kron({c, a, b}) * p);
}

TEST_CASE("property: kernel, rank and kron invariants on random matrices") {
  std::mt19937 rng(20240611);
  for (FieldSpec field : {q(), f2(), f5(), f7()}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<int> dim(0, 5);
      const std::size_t r = dim(rng), c = dim(rng);
      const auto a = random_matrix(rng, field, r, c);
      const auto k = kernel_basis(a);
      CHECK((a * k).is_zero());
      CHECK(k.cols() == c - rank(a));
      CHECK(rank(k) == k.cols());
      CHECK(rank(a) == rank(transpose(a)));
      // quotient by the column space
      const auto qm = quotient(a, r);
      CHECK((qm.projection * a).is_zero());
      CHECK(rank(qm.projection) == qm.projection.rows());
      CHECK(qm.projection * qm.section == Matrix::identity(field, qm.projection.rows()));
      // column space basis spans the same space
      const auto cs = column_space_basis(a);
      CHECK(cs.cols() == rank(a));
      CHECK(rank(hstack(cs, a)) == rank(a));
      // kron associativity
      const auto b = random_matrix(rng, field, 2, 3);
      const auto d = random_matrix(rng, field, 3, 1);
      CHECK(kron(kron(a, b), d) == kron(a, kron(b, d)));
      // determinism
      CHECK(rref(a).reduced == rref(a).reduced);
    }
  }
}
