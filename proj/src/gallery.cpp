#include "cosmash/gallery.hpp"

#include "cosmash/error.hpp"

namespace cosmash {

namespace {

[[noreturn]] void bad_table(const std::string& name, const std::string& why) {
  raise(ErrorKind::InvalidGroupTable, name + ": " + why);
}

std::vector<std::string> prefixed(const std::string& prefix, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(prefix + n);
  return out;
}

}  // namespace

FiniteGroupTable make_group(std::string name, std::vector<std::vector<std::size_t>> mult,
                            std::vector<std::string> element_names) {
  const std::size_t n = mult.size();
  if (n == 0) bad_table(name, "empty table");
  if (n > kMaxGroupOrder) bad_table(name, "order exceeds " + std::to_string(kMaxGroupOrder));
  for (const auto& row : mult) {
    if (row.size() != n) bad_table(name, "table is not square");
    for (std::size_t v : row)
      if (v >= n) bad_table(name, "entry out of range");
  }
  if (element_names.empty()) element_names = default_names("g", n);
  if (element_names.size() != n) bad_table(name, "element name count differs from order");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          bad_table(name, "not associative at (" + element_names[a] + ", " + element_names[b] +
                              ", " + element_names[c] + ")");

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = mult[e][g] == g && mult[g][e] == g;
    if (ok) identity = e;
  }
  if (identity == n) bad_table(name, "no identity element");

  std::vector<std::size_t> inverse(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h)
      if (mult[g][h] == identity && mult[h][g] == identity) inverse[g] = h;
    if (inverse[g] == n) bad_table(name, element_names[g] + " has no inverse");
  }
  return FiniteGroupTable{std::move(name), std::move(element_names), std::move(mult), identity,
                          std::move(inverse)};
}

FiniteGroupTable cyclic_group(std::size_t n) {
  if (n == 0) bad_table("Z0", "empty table");
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
    names.push_back(a == 0 ? "e" : a == 1 ? "g" : "g" + std::to_string(a));
  }
  return make_group("Z" + std::to_string(n), std::move(mult), std::move(names));
}

FiniteGroupTable dihedral_group(std::size_t n) {
  if (n == 0) bad_table("D0", "empty table");
  // r^i s^a has index 2i + a; (r^i s^a)(r^j s^b) = r^(i + (-1)^a j) s^(a+b).
  const std::size_t order = 2 * n;
  std::vector<std::vector<std::size_t>> mult(order, std::vector<std::size_t>(order));
  std::vector<std::string> names;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x / 2, a = x % 2;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t j = y / 2, b = y % 2;
      const std::size_t r = a == 0 ? (i + j) % n : (i + n - j) % n;
      mult[x][y] = 2 * r + ((a + b) % 2);
    }
    std::string nm = i == 0 ? "" : (i == 1 ? "r" : "r" + std::to_string(i));
    if (a == 1) nm += "s";
    names.push_back(nm.empty() ? "e" : nm);
  }
  return make_group("D" + std::to_string(order), std::move(mult), std::move(names));
}

FiniteGroupTable symmetric_group3() {
  // Permutations of {0,1,2} in lexicographic order; (s t)(i) = s(t(i)).
  const std::vector<std::vector<std::size_t>> perms = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const std::vector<std::string> names = {"e", "(12)", "(01)", "(012)", "(021)", "(02)"};
  std::vector<std::vector<std::size_t>> mult(6, std::vector<std::size_t>(6));
  for (std::size_t s = 0; s < 6; ++s)
    for (std::size_t t = 0; t < 6; ++t) {
      std::vector<std::size_t> st(3);
      for (std::size_t i = 0; i < 3; ++i) st[i] = perms[s][perms[t][i]];
      for (std::size_t u = 0; u < 6; ++u)
        if (perms[u] == st) mult[s][t] = u;
    }
  return make_group("S3", std::move(mult), names);
}

FiniteGroupTable product_group(const FiniteGroupTable& g, const FiniteGroupTable& k) {
  const std::size_t n = g.order(), m = k.order();
  std::vector<std::vector<std::size_t>> mult(n * m, std::vector<std::size_t>(n * m));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n * m; ++a) {
    for (std::size_t b = 0; b < n * m; ++b)
      mult[a][b] = g.mult[a / m][b / m] * m + k.mult[a % m][b % m];
    names.push_back("(" + g.element_names[a / m] + "," + k.element_names[a % m] + ")");
  }
  return make_group(g.name + "x" + k.name, std::move(mult), std::move(names));
}

HopfAlgebra group_algebra(const FiniteGroupTable& g, FieldSpec field) {
  const std::size_t n = g.order();
  Matrix delta(field, n * n, n), eps(field, 1, n), mult(field, n, n * n), unit(field, n, 1),
      s(field, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    delta.set(a * n + a, a, 1);
    eps.set(0, a, 1);
    s.set(g.inverse[a], a, 1);
    for (std::size_t b = 0; b < n; ++b) mult.set(g.mult[a][b], a * n + b, 1);
  }
  unit.set(g.identity, 0, 1);
  auto c = make_coalgebra("k" + g.name, std::move(delta), std::move(eps), g.element_names);
  return make_hopf(std::move(c), std::move(mult), std::move(unit), std::move(s));
}

HopfAlgebra function_hopf(const FiniteGroupTable& g, FieldSpec field) {
  const std::size_t n = g.order();
  Matrix delta(field, n * n, n), eps(field, 1, n), mult(field, n, n * n), unit(field, n, 1),
      s(field, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    mult.set(a, a * n + a, 1);
    unit.set(a, 0, 1);
    s.set(g.inverse[a], a, 1);
    for (std::size_t b = 0; b < n; ++b) delta.set(a * n + b, g.mult[a][b], 1);
  }
  eps.set(0, g.identity, 1);
  auto c = make_coalgebra("k^" + g.name, std::move(delta), std::move(eps),
                          prefixed("d", g.element_names));
  return make_hopf(std::move(c), std::move(mult), std::move(unit), std::move(s));
}

Coalgebra c2_coalgebra(FieldSpec field) {
  return make_coalgebra("C2", Matrix::from_rows(field, {{1, 0}, {0, 1}, {0, 1}, {0, 0}}),
                        Matrix::from_rows(field, {{1, 0}}), {"x", "p"});
}

Coalgebra matrix_coalgebra(std::size_t n, FieldSpec field) {
  const std::size_t d = n * n;
  Matrix delta(field, d * d, d), eps(field, 1, d);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ij = i * n + j;
      names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      if (i == j) eps.set(0, ij, 1);
      for (std::size_t k = 0; k < n; ++k) delta.set((i * n + k) * d + (k * n + j), ij, 1);
    }
  return make_coalgebra("M" + std::to_string(n) + "c", std::move(delta), std::move(eps),
                        std::move(names));
}

Coalgebra path_coalgebra(FieldSpec field) {
  // basis a, b, u
  Matrix delta(field, 9, 3);
  delta.set(0 * 3 + 0, 0, 1);
  delta.set(1 * 3 + 1, 1, 1);
  delta.set(0 * 3 + 2, 2, 1);
  delta.set(2 * 3 + 1, 2, 1);
  return make_coalgebra("A2path", std::move(delta), Matrix::from_rows(field, {{1, 1, 0}}),
                        {"a", "b", "u"});
}

PairPtr trivial_coaction(Coalgebra c, HopfAlgebra h) {
  Matrix rho = kron(Matrix::identity(c.field, c.dim()), h.unit);
  std::string name = "(" + c.name + "," + h.name() + ")";
  return share(ComoduleCoalgebra{std::move(name), std::move(c), std::move(h), std::move(rho)});
}

PairPtr graded_coalgebra(Coalgebra c, const FiniteGroupTable& g, std::vector<std::size_t> deg) {
  if (deg.size() != c.dim()) raise(ErrorKind::ShapeError, "one degree per basis element");
  HopfAlgebra h = group_algebra(g, c.field);
  Matrix rho(c.field, c.dim() * g.order(), c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (deg[i] >= g.order()) raise(ErrorKind::ShapeError, "degree out of range");
    rho.set(i * g.order() + deg[i], i, 1);
  }
  std::string name = "(" + c.name + "," + h.name() + ")";
  ComoduleCoalgebra cc{std::move(name), std::move(c), std::move(h), std::move(rho)};
  const Report r = check_comodule_coalgebra(cc);
  if (const Check* bad = r.first_failure())
    raise(ErrorKind::NotGraded, cc.C.name + ": grading violates " + bad->name + " at " + bad->witness);
  return share(std::move(cc));
}

PairPtr function_coaction(Coalgebra c, const FiniteGroupTable& g,
                          const std::vector<Matrix>& action) {
  if (action.size() != g.order()) raise(ErrorKind::ShapeError, "one map per group element");
  HopfAlgebra h = function_hopf(g, c.field);
  const std::size_t n = c.dim(), k = g.order();
  Matrix rho(c.field, n * k, n);
  for (std::size_t s = 0; s < k; ++s) {
    if (action[s].rows() != n || action[s].cols() != n)
      raise(ErrorKind::ShapeError, "action maps must be dim C x dim C");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!action[s].is_zero_at(i, j)) rho.set(i * k + s, j, action[s].at(i, j));
  }
  std::string name = "(" + c.name + "," + h.name() + ")";
  return share(ComoduleCoalgebra{std::move(name), std::move(c), std::move(h), std::move(rho)});
}

CoalgebraPtr h_coalgebra(const PairPtr& pair) { return CoalgebraPtr(pair, &pair->H.coalgebra); }
CoalgebraPtr c_coalgebra(const PairPtr& pair) { return CoalgebraPtr(pair, &pair->C); }

CHComodule regular_ch(const PairPtr& pair) {
  return make_ch(pair->C.name, pair, pair->C.delta, pair->rho, pair->C.basis_names);
}

CHComodule line_ch(const PairPtr& pair, const Matrix& x, const Matrix& y, std::string name) {
  return make_ch(std::move(name), pair, x, y, {"v"});
}

Comodule graded_H_comodule(const PairPtr& pair, const std::vector<std::size_t>& deg,
                           std::string name) {
  const std::size_t h = pair->H.dim();
  Matrix rho(pair->C.field, deg.size() * h, deg.size());
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (deg[i] >= h) raise(ErrorKind::ShapeError, "degree out of range");
    rho.set(i * h + deg[i], i, 1);
  }
  return make_comodule(std::move(name), h_coalgebra(pair), std::move(rho));
}

Comodule line_H(const PairPtr& pair, const Matrix& y, std::string name) {
  return make_comodule(std::move(name), h_coalgebra(pair), y, {"v"});
}

TraceData trace_map(const PairPtr& pair) {
  const ComoduleCoalgebra& cc = *pair;
  const FieldSpec& f = cc.C.field;
  if (!is_cosemisimple_any_char(cc.H.coalgebra))
    raise(ErrorKind::PreconditionFailed, "trace_map: " + cc.H.name() + " is not cosemisimple");
  TraceData t{pair, left_integral(cc.H), {}, {}, {}, {}, {}};
  if (!t.phi.normalized)
    raise(ErrorKind::PreconditionFailed, "trace_map: integral vanishes on 1");
  const std::size_t n = cc.C.dim();
  const auto id_c = Matrix::identity(f, n);
  t.Psi = kron(id_c, t.phi.phi) * cc.rho;

  const Comodule c_over_h = make_comodule(cc.C.name, h_coalgebra(pair), cc.rho, cc.C.basis_names);
  t.B_basis = coinvariants(c_over_h, cc.H.unit);
  const std::size_t b = t.B_basis.cols();
  auto to_b = solve(t.B_basis, t.Psi);
  if (!to_b) raise(ErrorKind::StructureError, "trace_map: image of Psi is not inside C^coH");
  t.to_B = *to_b;

  const Matrix delta_on_b = cc.C.delta * t.B_basis;
  Matrix delta_b = kron(t.to_B, t.to_B) * delta_on_b;
  Matrix eps_b = cc.C.epsilon * t.B_basis;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < b; ++j) {
    std::string nm;
    for (std::size_t i = 0; i < n; ++i) {
      if (t.B_basis.is_zero_at(i, j)) continue;
      const Scalar v = t.B_basis.at(i, j);
      if (!nm.empty()) nm += "+";
      if (v != 1) nm += format_scalar(v) + "*";
      nm += cc.C.basis_names[i];
    }
    names.push_back(nm);
  }
  t.B = share(make_coalgebra("B", std::move(delta_b), std::move(eps_b), names));

  Report& r = t.checks;
  r.subject = "trace map on " + cc.name;
  const auto bnames = t.B->basis_names;
  auto add = [&](const std::string& check, const Matrix& lhs, const Matrix& rhs,
                 const std::vector<std::string>& nm) {
    const std::string w = witness_column(lhs, rhs, nm);
    r.add(check, w.empty(), w);
  };
  add("Psi idempotent", t.Psi * t.Psi, t.Psi, cc.C.basis_names);
  r.add("image of Psi is C^coH", rank(t.Psi) == b && rank(hstack(t.Psi, t.B_basis)) == b);
  const Matrix left = kron(t.Psi, id_c) * delta_on_b;
  add("Psi(b1)(x)b2 = b1(x)Psi(b2)", left, kron(id_c, t.Psi) * delta_on_b, bnames);
  add("Psi(b1)(x)b2 = Psi(b1)(x)Psi(b2)", left, kron(t.Psi, t.Psi) * delta_on_b, bnames);
  add("Delta' lands in B(x)B", kron(t.B_basis, t.B_basis) * t.B->delta, left, bnames);
  r.append(check_coalgebra(*t.B), "B ");
  add("Psi comultiplicative", kron(t.to_B, t.to_B) * cc.C.delta, t.B->delta * t.to_B,
      cc.C.basis_names);
  add("Psi counital", t.B->epsilon * t.to_B, cc.C.epsilon, cc.C.basis_names);
  return t;
}

CoinvariantComodule coinv_B_comodule(const CHComodule& m, const TraceData& t) {
  if (m.pair != t.pair)
    raise(ErrorKind::PreconditionFailed, "coinv_B_comodule: trace data from another pair");
  const FieldSpec& f = m.field();
  const Matrix k = coinvariants(m.over_H(), m.pair->H.unit);
  const Matrix image = kron(Matrix::identity(f, m.dim()), t.Psi) * m.rhoC * k;
  auto coords = solve(kron(k, t.B_basis), image);
  if (!coords)
    raise(ErrorKind::ClosureError, m.name + ": rho' does not land in M^coH (x) B");
  Comodule out = make_comodule(m.name + "^coH", t.B, std::move(*coords));
  return CoinvariantComodule{std::move(out), k};
}

}  // namespace cosmash
