#pragma once

// Shared helpers for the test binaries: deterministic random generators for
// property-style checks.

#include <random>

#include "cosmash/exactla.hpp"

namespace cosmash::testing {

inline FieldSpec f2() { return FieldSpec::prime(2); }
inline FieldSpec f5() { return FieldSpec::prime(5); }
inline FieldSpec f7() { return FieldSpec::prime(7); }
inline FieldSpec q() { return FieldSpec::rationals(); }

inline Matrix random_matrix(std::mt19937& rng, FieldSpec field, std::size_t rows,
                            std::size_t cols, int lo = -3, int hi = 3, double zero_bias = 0.3) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::bernoulli_distribution zero(zero_bias);
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!zero(rng)) m.set(i, j, value(rng));
  return m;
}

/// Random invertible matrix: unit upper times unit lower triangular, so it is
/// invertible over every field.
inline Matrix random_invertible(std::mt19937& rng, FieldSpec field, std::size_t n) {
  std::uniform_int_distribution<int> value(-2, 2);
  Matrix upper = Matrix::identity(field, n);
  Matrix lower = Matrix::identity(field, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      upper.set(i, j, value(rng));
      lower.set(j, i, value(rng));
    }
  return upper * lower;
}

}  // namespace cosmash::testing

#include "cosmash/comodules.hpp"
#include "cosmash/error.hpp"
#include "cosmash/gallery.hpp"
#include "cosmash/smashprod.hpp"

namespace cosmash::testing {

/// The running example: C2 graded by Z2 with deg x = e, deg p = g.
inline PairPtr c2h2(FieldSpec f) { return graded_coalgebra(c2_coalgebra(f), cyclic_group(2), {0, 1}); }

/// kZ2 as a coalgebra with trivial kZ2-coaction.
inline PairPtr kz2_trivial(FieldSpec f) {
  const auto g = cyclic_group(2);
  return trivial_coaction(group_algebra(g, f).coalgebra, group_algebra(g, f));
}

inline Matrix e_(const PairPtr& p, std::size_t i) { return basis_vector(p->C.field, p->C.dim(), i); }
inline Matrix h_(const PairPtr& p, std::size_t i) { return basis_vector(p->C.field, p->H.dim(), i); }

/// Small (C,H)-comodules: every valid line on basis grouplikes, the regular
/// comodule and its twists by H-lines, and direct sums up to `max_dim`.
inline std::vector<CHComodule> ch_gallery(const PairPtr& p, std::size_t max_dim = 3) {
  std::vector<CHComodule> base;
  std::vector<Comodule> hlines;
  for (std::size_t a = 0; a < p->H.dim(); ++a)
    if (is_grouplike(p->H.coalgebra, h_(p, a)))
      hlines.push_back(line_H(p, h_(p, a), "L" + p->H.basis_names()[a]));
  for (std::size_t i = 0; i < p->C.dim(); ++i) {
    if (!is_grouplike(p->C, e_(p, i))) continue;
    for (const auto& l : hlines) {
      auto m = line_ch(p, e_(p, i), l.rho, "k" + p->C.basis_names[i] + "^" + l.name);
      if (check_CH(m).ok()) base.push_back(m);
    }
  }
  const CHComodule reg = regular_ch(p);
  for (const auto& l : hlines) {
    auto t = tensor_L_M(l, reg);
    if (t.dim() <= max_dim) base.push_back(t);
  }
  std::vector<CHComodule> out = base;
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = a; b < base.size(); ++b)
      if (base[a].dim() + base[b].dim() <= max_dim) out.push_back(direct_sum(base[a], base[b]));
  return out;
}

// Random comodules: direct sums of gallery pieces, random subcomodules of
// cofree ones and their quotients, conjugated by a random basis change.
inline std::vector<Comodule> random_comodules(const CoalgebraPtr& d, std::mt19937& rng, int count,
                                       std::size_t max_dim) {
  std::vector<Comodule> pool;
  for (std::size_t i = 0; i < d->dim(); ++i) {
    const Matrix x = basis_vector(d->field, d->dim(), i);
    if (is_grouplike(*d, x)) pool.push_back(grouplike_line(d, x, 1, "k" + d->basis_names[i]));
  }
  pool.push_back(regular_comodule(d));
  std::vector<Comodule> out;
  std::uniform_int_distribution<int> kind(0, 2);
  while (static_cast<int>(out.size()) < count) {
    Comodule c = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    switch (kind(rng)) {
      case 0: {
        const Comodule& other = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        c = direct_sum(c, other);
        break;
      }
      case 1: {
        const Comodule e = cofree(d, 1);
        const Matrix v = random_matrix(rng, d->field, e.dim(), 1, -2, 2, 0.3);
        c = subcomodule(e, generated_subcomodule(e, v));
        break;
      }
      default: {
        const Comodule e = cofree(d, 1);
        const Matrix v = random_matrix(rng, d->field, e.dim(), 1, -2, 2, 0.3);
        c = quotient_comodule(e, generated_subcomodule(e, v)).comodule;
        break;
      }
    }
    if (c.dim() == 0 || c.dim() > max_dim) continue;
    c = change_basis(c, random_invertible(rng, d->field, c.dim()));
    if (!check_comodule(c).ok()) raise(ErrorKind::StructureError, "random comodule fails its axioms");
    out.push_back(c);
  }
  return out;
}

}  // namespace cosmash::testing
