#include "cosmash/smashprod.hpp"

#include "cosmash/error.hpp"

namespace cosmash {

Report check_comodule_coalgebra(const ComoduleCoalgebra& cc) {
  const Coalgebra& c = cc.C;
  const HopfAlgebra& h = cc.H;
  const FieldSpec& f = c.field;
  if (cc.rho.rows() != c.dim() * h.dim() || cc.rho.cols() != c.dim())
    raise(ErrorKind::ShapeError, cc.name + ": H-coaction on C must be (c*h) x c");
  Report report;
  report.subject = "comodule coalgebra " + cc.name;
  auto hptr = std::make_shared<const Coalgebra>(h.coalgebra);
  report.append(check_comodule(Comodule{c.name, hptr, cc.rho, c.basis_names}), "coaction ");

  const auto id_c = Matrix::identity(f, c.dim());
  const auto id_h = Matrix::identity(f, h.dim());
  const auto lhs = kron(c.delta, id_h) * cc.rho;
  const auto rhs = kron({id_c, id_c, h.mult}) * kron({id_c, twist(f, h.dim(), c.dim()), id_h}) *
                   kron(cc.rho, cc.rho) * c.delta;
  std::string w = witness_column(lhs, rhs, c.basis_names);
  report.add("delta colinear", w.empty(), w);
  w = witness_column(kron(c.epsilon, id_h) * cc.rho, h.unit * c.epsilon, c.basis_names);
  report.add("epsilon colinear", w.empty(), w);
  return report;
}

SmashCoalgebra smash_coproduct(PairPtr pair) {
  const ComoduleCoalgebra& cc = *pair;
  const Report hopf = check_hopf(cc.H);
  if (!hopf.ok()) raise(ErrorKind::AxiomError, hopf.summary());
  const Report ccr = check_comodule_coalgebra(cc);
  if (!ccr.ok()) raise(ErrorKind::AxiomError, ccr.summary());

  const Coalgebra& c = cc.C;
  const HopfAlgebra& h = cc.H;
  const FieldSpec& f = c.field;
  const std::size_t n = c.dim(), k = h.dim();
  const auto id_c = Matrix::identity(f, n);
  const auto id_h = Matrix::identity(f, k);
  // c1, c2[0], c2[1], h1, h2  ->  c1, c2[1], h2, c2[0], h1
  const std::size_t dims[] = {n, n, k, k, k};
  const std::size_t order[] = {0, 2, 4, 1, 3};
  const Matrix delta = kron({id_c, h.mult, id_c, id_h}) * tensor_permutation(f, dims, order) *
                       kron({id_c, cc.rho, id_h, id_h}) * kron(c.delta, h.coalgebra.delta);
  const Matrix epsilon = kron(c.epsilon, h.coalgebra.epsilon);

  std::vector<std::string> names;
  for (const auto& a : c.basis_names)
    for (const auto& b : h.basis_names()) names.push_back(a + "|x" + b);
  Coalgebra d = make_coalgebra(c.name + "|x" + h.name(), delta, epsilon, std::move(names));
  const Report dr = check_coalgebra(d);
  if (!dr.ok()) raise(ErrorKind::AxiomError, dr.summary());

  SmashCoalgebra out{share(std::move(d)), std::move(pair), kron(id_c, h.coalgebra.epsilon),
                     kron(c.epsilon, id_h)};
  if (!projections_determine_coaction(out))
    raise(ErrorKind::AmbiguousCoaction,
          out.D->name + ": projections do not determine D-coactions");
  return out;
}

bool projections_determine_coaction(const SmashCoalgebra& d) {
  return kron(d.pi_C, d.pi_H) * d.D->delta == Matrix::identity(d.D->field, d.D->dim());
}

Comodule ch_to_smash(const CHComodule& m, const SmashCoalgebra& d) {
  if (m.pair != d.pair) raise(ErrorKind::DomainError, "ch_to_smash: comodule over another pair");
  const HopfAlgebra& h = m.pair->H;
  const FieldSpec& f = m.field();
  const Report ch = check_CH(m);
  if (!ch.ok()) raise(ErrorKind::NoCompatibleCoaction, ch.summary());
  Matrix rho = kron(m.rhoC, Matrix::identity(f, h.dim())) *
               kron(Matrix::identity(f, m.dim()), h.antipode) * m.rhoH;
  Comodule out = make_comodule(m.name, d.D, std::move(rho), m.basis_names);
  const Report r = check_comodule(out);
  if (!r.ok()) raise(ErrorKind::NoCompatibleCoaction, r.summary());
  return out;
}

CHComodule smash_to_ch(const Comodule& m, const SmashCoalgebra& d) {
  if (!same_coalgebra(*m.over, *d.D))
    raise(ErrorKind::DomainError, "smash_to_ch: comodule is not over " + d.D->name);
  const Report r = check_comodule(m);
  if (!r.ok()) raise(ErrorKind::AxiomError, r.summary());
  const FieldSpec& f = m.field();
  const auto id_m = Matrix::identity(f, m.dim());
  const Matrix s_inv = inverse(d.pair->H.antipode);
  CHComodule out = make_ch(m.name, d.pair, kron(id_m, d.pi_C) * m.rho,
                           kron(id_m, s_inv * d.pi_H) * m.rho, m.basis_names);
  const Report ch = check_CH(out);
  if (!ch.ok()) raise(ErrorKind::AxiomError, ch.summary());
  return out;
}

Matrix transport_grouplike(const SmashCoalgebra& d, const Matrix& x) {
  return kron(x, d.pair->H.unit);
}

}  // namespace cosmash
