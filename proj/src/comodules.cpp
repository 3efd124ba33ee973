#include "cosmash/comodules.hpp"

#include "cosmash/error.hpp"

namespace cosmash {

namespace {

void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) raise(kind, what);
}

void require_same(const Coalgebra& a, const Coalgebra& b, const std::string& what) {
  require(a.field == b.field, ErrorKind::FieldMismatch, what);
  require(same_coalgebra(a, b), ErrorKind::DomainError, what + ": comodules over different coalgebras");
}

CoalgebraPtr c_of(const PairPtr& pair) { return CoalgebraPtr(pair, &pair->C); }
CoalgebraPtr h_of(const PairPtr& pair) { return CoalgebraPtr(pair, &pair->H.coalgebra); }

std::vector<std::string> pair_names(const std::vector<std::string>& left,
                                    const std::vector<std::string>& right) {
  std::vector<std::string> out;
  out.reserve(left.size() * right.size());
  for (const auto& l : left)
    for (const auto& r : right) out.push_back(l + "(x)" + r);
  return out;
}

// Coaction of M (+) N given coactions of the summands over a d-dimensional coalgebra.
Matrix block_coaction(const Matrix& a, const Matrix& b, std::size_t d) {
  const std::size_t ma = a.cols(), mb = b.cols();
  Matrix out(a.field(), (ma + mb) * d, ma + mb);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < ma; ++j)
      if (!a.is_zero_at(r, j)) out.set(r, j, a.at(r, j));
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t j = 0; j < mb; ++j)
      if (!b.is_zero_at(r, j)) out.set(ma * d + r, ma + j, b.at(r, j));
  return out;
}

Matrix conjugate_coaction(const Matrix& rho, const Matrix& p, std::size_t d) {
  return kron(inverse(p), Matrix::identity(p.field(), d)) * rho * p;
}

// Splits an (n*d) x m matrix T into the d maps T_a (n x m) with T_a[p][j] = T[p*d+a][j].
std::vector<Matrix> split_components(const Matrix& t, std::size_t d) {
  const std::size_t n = t.rows() / d;
  std::vector<Matrix> out(d, Matrix(t.field(), n, t.cols()));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t j = 0; j < t.cols(); ++j)
        if (!t.is_zero_at(p * d + a, j)) out[a].set(p, j, t.at(p * d + a, j));
  return out;
}

// Expresses a map-valued coaction in the basis of `hom`: out row c*d+a, column b.
Matrix coaction_in_basis(const HomSpace& hom, FieldSpec field, std::size_t d,
                         const std::vector<Matrix>& images, const std::string& what) {
  const std::size_t r = hom.dim();
  Matrix out(field, r * d, r);
  if (r == 0) return out;
  // one elimination for all r*d components
  Matrix rhs(field, hom.target_dim * hom.source_dim, r * d);
  for (std::size_t b = 0; b < r; ++b) {
    const auto parts = split_components(images[b], d);
    for (std::size_t a = 0; a < d; ++a) {
      const Matrix v = vectorize(parts[a]);
      for (std::size_t i = 0; i < v.rows(); ++i)
        if (!v.is_zero_at(i, 0)) rhs.set(i, b * d + a, v.at(i, 0));
    }
  }
  const auto coords = solve(hom.basis_matrix(field), rhs);
  if (!coords) raise(ErrorKind::ClosureError, what + ": coaction leaves the Hom space");
  for (std::size_t b = 0; b < r; ++b)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t c = 0; c < r; ++c)
        if (!coords->is_zero_at(c, b * d + a)) out.set(c * d + a, b, coords->at(c, b * d + a));
  return out;
}

}  // namespace

bool same_coalgebra(const Coalgebra& a, const Coalgebra& b) {
  if (&a == &b) return true;
  return a.field == b.field && a.dim() == b.dim() && a.delta == b.delta && a.epsilon == b.epsilon;
}

Comodule CHComodule::over_C() const {
  return Comodule{name, c_of(pair), rhoC, basis_names};
}

Comodule CHComodule::over_H() const {
  return Comodule{name, h_of(pair), rhoH, basis_names};
}

Matrix HomSpace::basis_matrix(FieldSpec field) const {
  Matrix out(field, target_dim * source_dim, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const Matrix v = vectorize(basis[b]);
    for (std::size_t i = 0; i < v.rows(); ++i)
      if (!v.is_zero_at(i, 0)) out.set(i, b, v.at(i, 0));
  }
  return out;
}

std::optional<Matrix> HomSpace::coordinates(const Matrix& f) const {
  if (f.rows() != target_dim || f.cols() != source_dim)
    raise(ErrorKind::ShapeError, "map shape does not match the Hom space");
  if (basis.empty()) {
    if (f.is_zero()) return Matrix(f.field(), 0, 1);
    return std::nullopt;
  }
  return solve(basis_matrix(f.field()), vectorize(f));
}

CoalgebraPtr share(Coalgebra c) { return std::make_shared<const Coalgebra>(std::move(c)); }
PairPtr share(ComoduleCoalgebra p) {
  return std::make_shared<const ComoduleCoalgebra>(std::move(p));
}

Comodule make_comodule(std::string name, CoalgebraPtr over, Matrix rho,
                       std::vector<std::string> basis_names) {
  require(over != nullptr, ErrorKind::DomainError, name + ": missing coalgebra");
  require(rho.field() == over->field, ErrorKind::FieldMismatch, name + ": coaction field");
  require(rho.rows() == rho.cols() * over->dim(), ErrorKind::ShapeError,
          name + ": coaction must be (m*d) x m");
  if (basis_names.empty()) basis_names = default_names("m", rho.cols());
  require(basis_names.size() == rho.cols(), ErrorKind::ShapeError, name + ": basis names");
  return Comodule{std::move(name), std::move(over), std::move(rho), std::move(basis_names)};
}

CHComodule make_ch(std::string name, PairPtr pair, Matrix rhoC, Matrix rhoH,
                   std::vector<std::string> basis_names) {
  require(pair != nullptr, ErrorKind::DomainError, name + ": missing (C,H) pair");
  const std::size_t m = rhoC.cols();
  require(rhoC.field() == pair->C.field && rhoH.field() == pair->C.field,
          ErrorKind::FieldMismatch, name + ": coaction field");
  require(rhoC.rows() == m * pair->C.dim(), ErrorKind::ShapeError,
          name + ": C-coaction must be (m*c) x m");
  require(rhoH.cols() == m && rhoH.rows() == m * pair->H.dim(), ErrorKind::ShapeError,
          name + ": H-coaction must be (m*h) x m");
  if (basis_names.empty()) basis_names = default_names("m", m);
  require(basis_names.size() == m, ErrorKind::ShapeError, name + ": basis names");
  return CHComodule{std::move(name), std::move(pair), std::move(rhoC), std::move(rhoH),
                    std::move(basis_names)};
}

Comodule regular_comodule(CoalgebraPtr over) {
  Matrix delta = over->delta;
  auto names = over->basis_names;
  std::string name = over->name;
  return make_comodule(std::move(name), std::move(over), std::move(delta), std::move(names));
}

Comodule grouplike_line(CoalgebraPtr over, const Matrix& x, std::size_t dim, std::string name) {
  require(x.rows() == over->dim() && x.cols() == 1, ErrorKind::ShapeError,
          "grouplike must be a column of length dim D");
  Matrix rho = kron(Matrix::identity(over->field, dim), x);
  return make_comodule(std::move(name), std::move(over), std::move(rho));
}

Comodule cofree(CoalgebraPtr over, std::size_t dim_v, std::string name) {
  Matrix rho = kron(Matrix::identity(over->field, dim_v), over->delta);
  std::vector<std::string> names = pair_names(default_names("v", dim_v), over->basis_names);
  return make_comodule(std::move(name), std::move(over), std::move(rho), std::move(names));
}

Comodule direct_sum(const Comodule& a, const Comodule& b) {
  require_same(*a.over, *b.over, "direct_sum");
  auto names = a.basis_names;
  for (const auto& n : b.basis_names) names.push_back(n + "'");
  return make_comodule(a.name + "+" + b.name, a.over,
                       block_coaction(a.rho, b.rho, a.over->dim()), std::move(names));
}

Comodule change_basis(const Comodule& m, const Matrix& p) {
  return make_comodule(m.name, m.over, conjugate_coaction(m.rho, p, m.over->dim()));
}

CHComodule direct_sum(const CHComodule& a, const CHComodule& b) {
  require(a.pair == b.pair, ErrorKind::DomainError, "direct_sum: different (C,H) pairs");
  auto names = a.basis_names;
  for (const auto& n : b.basis_names) names.push_back(n + "'");
  return make_ch(a.name + "+" + b.name, a.pair, block_coaction(a.rhoC, b.rhoC, a.pair->C.dim()),
                 block_coaction(a.rhoH, b.rhoH, a.pair->H.dim()), std::move(names));
}

CHComodule change_basis(const CHComodule& m, const Matrix& p) {
  return make_ch(m.name, m.pair, conjugate_coaction(m.rhoC, p, m.pair->C.dim()),
                 conjugate_coaction(m.rhoH, p, m.pair->H.dim()));
}

Report check_comodule(const Comodule& m) {
  const Coalgebra& d = *m.over;
  require(m.rho.rows() == m.dim() * d.dim(), ErrorKind::ShapeError,
          m.name + ": coaction must be (m*d) x m");
  Report report;
  report.subject = "comodule " + m.name + " over " + d.name;
  const auto id_m = Matrix::identity(m.field(), m.dim());
  const auto id_d = Matrix::identity(m.field(), d.dim());
  const auto lhs = kron(m.rho, id_d) * m.rho;
  const auto rhs = kron(id_m, d.delta) * m.rho;
  std::string w = witness_column(lhs, rhs, m.basis_names);
  report.add("coassociativity", w.empty(), w);
  w = witness_column(kron(id_m, d.epsilon) * m.rho, id_m, m.basis_names);
  report.add("counit", w.empty(), w);
  return report;
}

Report check_left_comodule(const LeftComodule& w) {
  const Coalgebra& d = *w.over;
  require(w.lambda.rows() == w.dim() * d.dim(), ErrorKind::ShapeError,
          "left coaction must be (d*w) x w");
  Report report;
  report.subject = "left comodule over " + d.name;
  const auto id_w = Matrix::identity(d.field, w.dim());
  const auto id_d = Matrix::identity(d.field, d.dim());
  const auto names = default_names("w", w.dim());
  std::string wit = witness_column(kron(d.delta, id_w) * w.lambda,
                                   kron(id_d, w.lambda) * w.lambda, names);
  report.add("coassociativity", wit.empty(), wit);
  wit = witness_column(kron(d.epsilon, id_w) * w.lambda, id_w, names);
  report.add("counit", wit.empty(), wit);
  return report;
}

Report check_CH(const CHComodule& m) {
  const ComoduleCoalgebra& p = *m.pair;
  Report report;
  report.subject = "CH-comodule " + m.name;
  report.append(check_comodule(m.over_C()), "C ");
  report.append(check_comodule(m.over_H()), "H ");
  const std::size_t c = p.C.dim(), h = p.H.dim(), dim = m.dim();
  const FieldSpec& f = m.field();
  const auto id_m = Matrix::identity(f, dim);
  const auto id_c = Matrix::identity(f, c);
  const auto id_h = Matrix::identity(f, h);
  const auto lhs = kron(m.rhoC, id_h) * m.rhoH;
  const auto rhs = kron({id_m, id_c, p.H.mult}) * kron({id_m, twist(f, h, c), id_h}) *
                   kron(m.rhoH, p.rho) * m.rhoC;
  const std::string w = witness_column(lhs, rhs, m.basis_names);
  report.add("compatibility", w.empty(), w);
  return report;
}

Comodule tensor_H(const Comodule& m, const Comodule& n, const HopfAlgebra& h) {
  require(same_coalgebra(*m.over, h.coalgebra) && same_coalgebra(*n.over, h.coalgebra),
          ErrorKind::DomainError, "tensor_H: comodules must be over H");
  require(m.field() == n.field(), ErrorKind::FieldMismatch, "tensor_H");
  const FieldSpec& f = m.field();
  const std::size_t d = h.dim();
  const auto rho = kron({Matrix::identity(f, m.dim()), Matrix::identity(f, n.dim()), h.mult}) *
                   kron({Matrix::identity(f, m.dim()), twist(f, d, n.dim()),
                         Matrix::identity(f, d)}) *
                   kron(m.rho, n.rho);
  return make_comodule(m.name + "(x)" + n.name, m.over, rho,
                       pair_names(m.basis_names, n.basis_names));
}

Matrix coinvariants(const Comodule& m, const Matrix& x) {
  if (!is_grouplike(*m.over, x))
    raise(ErrorKind::NotGrouplike, "coinvariants: element is not grouplike in " + m.over->name);
  return kernel_basis(m.rho - kron(Matrix::identity(m.field(), m.dim()), x));
}

Matrix colinearity_system(const Comodule& m, const Comodule& n) {
  require_same(*m.over, *n.over, "hom " + m.name + " -> " + n.name);
  const std::size_t d = m.over->dim(), dm = m.dim(), dn = n.dim();
  Matrix system(m.field(), dn * d * dm, dn * dm);
  // rho^N f - (f (x) id) rho^M, entry (p*d+a, l) of the (n*d) x m result.
  for (std::size_t r = 0; r < dn * d; ++r)
    for (std::size_t i = 0; i < dn; ++i) {
      if (n.rho.is_zero_at(r, i)) continue;
      const Scalar v = n.rho.at(r, i);
      for (std::size_t l = 0; l < dm; ++l) system.add_to(r * dm + l, i * dm + l, v);
    }
  for (std::size_t j = 0; j < dm; ++j)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t l = 0; l < dm; ++l) {
        if (m.rho.is_zero_at(j * d + a, l)) continue;
        const Scalar v = -m.rho.at(j * d + a, l);
        for (std::size_t p = 0; p < dn; ++p) system.add_to((p * d + a) * dm + l, p * dm + j, v);
      }
  return system;
}

bool is_colinear(const Comodule& m, const Comodule& n, const Matrix& f) {
  require_same(*m.over, *n.over, "colinearity test");
  require(f.rows() == n.dim() && f.cols() == m.dim(), ErrorKind::ShapeError,
          "map shape does not match source and target");
  return n.rho * f == kron(f, Matrix::identity(f.field(), m.over->dim())) * m.rho;
}

HomSpace hom_basis(const Comodule& m, const Comodule& n) {
  const Matrix k = kernel_basis(colinearity_system(m, n));
  HomSpace out;
  out.target_dim = n.dim();
  out.source_dim = m.dim();
  for (std::size_t b = 0; b < k.cols(); ++b)
    out.basis.push_back(unvectorize(column(k, b), n.dim(), m.dim()));
  return out;
}

HomSpace h_coaction_on_homC(const CHComodule& m, const CHComodule& n) {
  require(m.pair == n.pair, ErrorKind::DomainError, "h_coaction_on_homC: different (C,H) pairs");
  const HopfAlgebra& hopf = m.pair->H;
  const FieldSpec& f = m.field();
  const std::size_t h = hopf.dim(), dn = n.dim();
  HomSpace hom = hom_basis(m.over_C(), n.over_C());
  const auto id_n = Matrix::identity(f, dn);
  const auto id_h = Matrix::identity(f, h);
  const Matrix post = kron(id_n, hopf.mult) * kron({id_n, id_h, hopf.antipode}) * kron(n.rhoH, id_h);
  std::vector<Matrix> images;
  for (const auto& g : hom.basis) images.push_back(post * kron(g, id_h) * m.rhoH);
  const std::string what = "Hom^C(" + m.name + ", " + n.name + ")";
  Matrix coaction = coaction_in_basis(hom, f, h, images, what);

  // Evaluation colinearity: rho^N f_b = sum coef (f_c (x) L_{h_a}) rho^M.
  const Algebra alg = hopf.algebra();
  std::vector<Matrix> left;
  for (std::size_t a = 0; a < h; ++a) left.push_back(left_mult(alg, a));
  for (std::size_t b = 0; b < hom.dim(); ++b) {
    Matrix rhs(f, dn * h, m.dim() * h);
    for (std::size_t a = 0; a < h; ++a) {
      Matrix fa(f, dn, m.dim());
      bool any = false;
      for (std::size_t c = 0; c < hom.dim(); ++c)
        if (!coaction.is_zero_at(c * h + a, b)) {
          fa = fa + scaled(hom.basis[c], coaction.at(c * h + a, b));
          any = true;
        }
      if (any) rhs = rhs + kron(fa, left[a]);
    }
    if (!(n.rhoH * hom.basis[b] == rhs * m.rhoH))
      raise(ErrorKind::ClosureError,
            what + ": evaluation is not H-colinear at basis map " + std::to_string(b + 1));
  }
  hom.coaction = std::move(coaction);
  return hom;
}

Comodule hom_as_comodule(const HomSpace& hom, CoalgebraPtr h, std::string name) {
  require(hom.coaction.has_value(), ErrorKind::DomainError, "Hom space carries no coaction");
  return make_comodule(std::move(name), std::move(h), *hom.coaction, default_names("f", hom.dim()));
}

CHComodule cofree_right(const CHComodule& m) {
  const ComoduleCoalgebra& p = *m.pair;
  const FieldSpec& f = m.field();
  const Matrix rhoC = kron(Matrix::identity(f, m.dim()), p.C.delta);
  const Comodule c_over_h = make_comodule(p.C.name, h_of(m.pair), p.rho, p.C.basis_names);
  const Comodule t = tensor_H(m.over_H(), c_over_h, p.H);
  return make_ch(m.name + "(x)" + p.C.name, m.pair, rhoC, t.rho, t.basis_names);
}

CHComodule tensor_L_M(const Comodule& l, const CHComodule& m) {
  const FieldSpec& f = m.field();
  const Matrix rhoC = kron(Matrix::identity(f, l.dim()), m.rhoC);
  const Comodule t = tensor_H(l, m.over_H(), m.pair->H);
  return make_ch(l.name + "(x)" + m.name, m.pair, rhoC, t.rho, t.basis_names);
}

Matrix adjunction_phi(const Comodule& l, const CHComodule& m, const CHComodule& n,
                      const HomSpace& homC, const Matrix& f) {
  const CHComodule lm = tensor_L_M(l, m);
  require(f.rows() == n.dim() && f.cols() == lm.dim(), ErrorKind::ShapeError,
          "adjunction: f must be dim N x dim(L (x) M)");
  if (!is_colinear(lm.over_C(), n.over_C(), f) || !is_colinear(lm.over_H(), n.over_H(), f))
    raise(ErrorKind::NotColinear, "adjunction: f is not colinear on L (x) M -> N");
  Matrix g(f.field(), homC.dim(), l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i) {
    auto coords = homC.coordinates(columns(f, i * m.dim(), m.dim()));
    if (!coords)
      raise(ErrorKind::NotColinear, "adjunction: f(" + l.basis_names[i] + " (x) -) is not C-colinear");
    for (std::size_t c = 0; c < homC.dim(); ++c)
      if (!coords->is_zero_at(c, 0)) g.set(c, i, coords->at(c, 0));
  }
  const Comodule hom = hom_as_comodule(homC, h_of(m.pair));
  if (!is_colinear(l, hom, g))
    raise(ErrorKind::NotColinear, "adjunction: phi(f) is not H-colinear");
  return g;
}

Matrix adjunction_phi_inv(const Comodule& l, const CHComodule& m, const CHComodule& n,
                          const HomSpace& homC, const Matrix& g) {
  require(g.rows() == homC.dim() && g.cols() == l.dim(), ErrorKind::ShapeError,
          "adjunction: g must be dim Hom x dim L");
  const Comodule hom = hom_as_comodule(homC, h_of(m.pair));
  if (!is_colinear(l, hom, g)) raise(ErrorKind::NotColinear, "adjunction: g is not H-colinear");
  Matrix f(g.field(), n.dim(), l.dim() * m.dim());
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t c = 0; c < homC.dim(); ++c) {
      if (g.is_zero_at(c, i)) continue;
      const Scalar s = g.at(c, i);
      for (std::size_t p = 0; p < n.dim(); ++p)
        for (std::size_t j = 0; j < m.dim(); ++j)
          if (!homC.basis[c].is_zero_at(p, j))
            f.add_to(p, i * m.dim() + j, s * homC.basis[c].at(p, j));
    }
  const CHComodule lm = tensor_L_M(l, m);
  if (!is_colinear(lm.over_C(), n.over_C(), f) || !is_colinear(lm.over_H(), n.over_H(), f))
    raise(ErrorKind::NotColinear, "adjunction: phi^-1(g) is not colinear");
  return f;
}

LeftComodule left_dual(const Comodule& m) {
  const std::size_t d = m.over->dim(), dm = m.dim();
  Matrix lambda(m.field(), d * dm, dm);
  for (std::size_t j = 0; j < dm; ++j)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t i = 0; i < dm; ++i)
        if (!m.rho.is_zero_at(j * d + a, i)) lambda.set(a * dm + i, j, m.rho.at(j * d + a, i));
  return LeftComodule{m.over, std::move(lambda)};
}

Matrix cotensor(const Comodule& n, const LeftComodule& w) {
  require_same(*n.over, *w.over, "cotensor");
  require(w.lambda.rows() == w.dim() * w.over->dim(), ErrorKind::ShapeError,
          "cotensor: left coaction must be (d*w) x w");
  const FieldSpec& f = n.field();
  return kernel_basis(kron(n.rho, Matrix::identity(f, w.dim())) -
                      kron(Matrix::identity(f, n.dim()), w.lambda));
}

CHComodule homC_as_CH(const CHComodule& m, const CHComodule& n) {
  const ComoduleCoalgebra& p = *m.pair;
  if (!is_commutative(p.H))
    raise(ErrorKind::PreconditionFailed, "homC_as_CH: " + p.H.name() + " is not commutative");
  if (!is_cocommutative(p.C))
    raise(ErrorKind::PreconditionFailed, "homC_as_CH: " + p.C.name + " is not cocommutative");
  const HomSpace hom = h_coaction_on_homC(m, n);
  const auto id_c = Matrix::identity(m.field(), p.C.dim());
  std::vector<Matrix> images;
  for (const auto& g : hom.basis) images.push_back(kron(g, id_c) * m.rhoC);
  const std::string what = "Hom^C(" + m.name + ", " + n.name + ")";
  Matrix rhoC = coaction_in_basis(hom, m.field(), p.C.dim(), images, what);
  return make_ch(what, m.pair, std::move(rhoC), *hom.coaction, default_names("f", hom.dim()));
}

Matrix generated_subcomodule(const Comodule& m, const Matrix& vectors) {
  // One application of rho suffices: the span of (id (x) f) rho(w) over f in D*.
  const std::size_t d = m.over->dim();
  const Matrix images = m.rho * vectors;
  Matrix spanning(m.field(), m.dim(), 0);
  for (std::size_t a = 0; a < d; ++a) {
    Matrix part(m.field(), m.dim(), images.cols());
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < images.cols(); ++j)
        if (!images.is_zero_at(i * d + a, j)) part.set(i, j, images.at(i * d + a, j));
    spanning = hstack(spanning, part);
  }
  return column_space_basis(spanning);
}

Comodule subcomodule(const Comodule& m, const Matrix& basis) {
  require(basis.rows() == m.dim(), ErrorKind::ShapeError, "subcomodule basis has wrong length");
  auto coords = solve(kron(basis, Matrix::identity(m.field(), m.over->dim())), m.rho * basis);
  if (!coords) raise(ErrorKind::ClosureError, m.name + ": subspace is not a subcomodule");
  return make_comodule(m.name + "_sub", m.over, std::move(*coords));
}

QuotientComodule quotient_comodule(const Comodule& m, const Matrix& sub) {
  Quotient qt = quotient(sub, m.dim());
  const auto id_d = Matrix::identity(m.field(), m.over->dim());
  const Matrix pushed = kron(qt.projection, id_d) * m.rho;
  if (!(pushed * sub).is_zero())
    raise(ErrorKind::ClosureError, m.name + ": quotient by a non-subcomodule");
  Comodule out = make_comodule(m.name + "_quo", m.over, pushed * qt.section);
  return QuotientComodule{std::move(out), std::move(qt.projection), std::move(qt.section)};
}

}  // namespace cosmash
