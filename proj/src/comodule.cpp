#include "hgx/comodule.hpp"

namespace hgx {

bool same_hopf(const HopfAlgebraPresentation& a, const HopfAlgebraPresentation& b) {
  return a.algebra.field == b.algebra.field && a.algebra.dim == b.algebra.dim &&
         a.algebra.mult == b.algebra.mult && a.algebra.unit == b.algebra.unit &&
         a.coalgebra.comult == b.coalgebra.comult && a.coalgebra.counit == b.coalgebra.counit &&
         a.antipode == b.antipode;
}

Report check_comodule(const Comodule& c) {
  Report rep{"comodule"};
  const auto& h = *c.hopf;
  size_t d = c.dim, dh = h.dim();
  Field f = h.field();
  bool right = c.side == Side::Right;
  if (c.coaction.cols() != d || c.coaction.rows() != d * dh)
    throw Error("DimensionMismatch", "comodule coaction dims");
  Matrix id_m = Matrix::identity(f, d), id_h = Matrix::identity(f, dh);
  bool coassoc = true, counit_ok = true;
  for (size_t j = 0; j < d; ++j) {
    Vec w = c.coaction.col(j);
    if (right) {
      if (apply_kron(c.coaction, id_h, w) != apply_kron(id_m, h.coalgebra.comult, w)) coassoc = false;
      if (apply_kron(id_m, h.coalgebra.counit, w) != vec_unit(f, d, j)) counit_ok = false;
    } else {
      if (apply_kron(h.coalgebra.comult, id_m, w) != apply_kron(id_h, c.coaction, w)) coassoc = false;
      if (apply_kron(h.coalgebra.counit, id_m, w) != vec_unit(f, d, j)) counit_ok = false;
    }
  }
  rep.add("coassociativity", coassoc);
  rep.add("counit", counit_ok);
  return rep;
}

Subspace coinvariants(const Comodule& c) {
  const auto& h = *c.hopf;
  Field f = h.field();
  Matrix unit_col = Matrix::from_cols(f, {h.unit()}, h.dim());
  Matrix incl = c.side == Side::Right ? Matrix::identity(f, c.dim).kron(unit_col)
                                      : unit_col.kron(Matrix::identity(f, c.dim));
  return kernel(c.coaction - incl);
}

Subspace cotensor(const Comodule& m, const Comodule& n) {
  if (m.side != Side::Right || n.side != Side::Left)
    throw Error("SideMismatch", "cotensor needs a (right, left) pair");
  if (!same_hopf(*m.hopf, *n.hopf)) throw Error("SideMismatch", "cotensor over different Hopf algebras");
  Field f = m.hopf->field();
  size_t dm = m.dim, dn = n.dim, dh = m.hopf->dim();
  Matrix c(f, dm * dh * dn, dm * dn);
  for (size_t i = 0; i < dm; ++i)
    for (size_t j = 0; j < dn; ++j) {
      Vec v = kron_vec(m.coaction.col(i), vec_unit(f, dn, j));
      vec_axpy(v, -Scalar::one(f), kron_vec(vec_unit(f, dm, i), n.coaction.col(j)));
      c.set_col(i * dn + j, v);
    }
  return kernel(c);
}

Report check_comodule_algebra(const ComoduleAlgebra& a) {
  Report rep{"comodule algebra"};
  if (a.algebra.dim != a.com.dim) throw Error("DimensionMismatch", "comodule algebra dims");
  rep.merge(check_algebra(a.algebra));
  rep.merge(check_comodule(a.com));
  const auto& h = *a.hopf();
  size_t d = a.dim();
  bool mult_ok = true, unit_ok;
  if (a.com.side == Side::Right) {
    unit_ok = a.com.coact(a.algebra.unit) == kron_vec(a.algebra.unit, h.unit());
    for (size_t i = 0; i < d && mult_ok; ++i)
      for (size_t j = 0; j < d; ++j)
        if (a.com.coact(a.algebra.mul_basis(i, j)) !=
            mul_tensor(a.algebra, h.algebra, a.com.coaction.col(i), a.com.coaction.col(j))) {
          mult_ok = false;
          break;
        }
  } else {
    unit_ok = a.com.coact(a.algebra.unit) == kron_vec(h.unit(), a.algebra.unit);
    for (size_t i = 0; i < d && mult_ok; ++i)
      for (size_t j = 0; j < d; ++j)
        if (a.com.coact(a.algebra.mul_basis(i, j)) !=
            mul_tensor(h.algebra, a.algebra, a.com.coaction.col(i), a.com.coaction.col(j))) {
          mult_ok = false;
          break;
        }
  }
  rep.add("coaction is an algebra map", mult_ok);
  rep.add("coaction of the unit", unit_ok);
  return rep;
}

ComoduleAlgebra op_left_comodule(const ComoduleAlgebra& b) {
  if (b.com.side != Side::Right)
    throw Error("SideMismatch", "op_left_comodule expects a right comodule algebra");
  const auto& h = *b.hopf();
  Field f = b.field();
  size_t d = b.dim(), dh = h.dim();
  ComoduleAlgebra r;
  r.algebra = b.algebra.opposite();
  r.com.hopf = b.com.hopf;
  r.com.dim = d;
  r.com.side = Side::Left;
  r.com.coaction = Matrix(f, dh * d, d);
  Matrix id_b = Matrix::identity(f, d);
  for (size_t j = 0; j < d; ++j) {
    Vec tw = twist_vec(b.com.coaction.col(j), d, dh);  // b₍₁₎⊗b₍₀₎ in H⊗B
    r.com.coaction.set_col(j, apply_kron(h.antipode_inverse, id_b, tw));
  }
  return r;
}

Vec mul_tensor(const AlgebraPresentation& a, const AlgebraPresentation& b, const Vec& u, const Vec& v) {
  size_t da = a.dim, db = b.dim;
  if (u.size() != da * db || v.size() != da * db) throw Error("DimensionMismatch", "mul_tensor");
  Vec r = vec_zero(a.field, da * db);
  for (size_t ij = 0; ij < u.size(); ++ij) {
    if (u[ij].is_zero()) continue;
    for (size_t kl = 0; kl < v.size(); ++kl) {
      if (v[kl].is_zero()) continue;
      vec_axpy(r, u[ij] * v[kl], kron_vec(a.mul_basis(ij / db, kl / db), b.mul_basis(ij % db, kl % db)));
    }
  }
  return r;
}

CotensorAlgebra cotensor_algebra_left(const ComoduleAlgebra& a, const ComoduleAlgebra& b_left) {
  if (b_left.com.side != Side::Left) throw Error("SideMismatch", "cotensor_algebra_left");
  CotensorAlgebra out;
  out.space = cotensor(a.com, b_left.com);
  out.ambient = AlgebraPresentation::tensor(a.algebra, b_left.algebra);
  // closure is Lemma 2.1 territory; a failure indicates an upstream bug
  for (size_t i = 0; i < out.space.dim(); ++i)
    for (size_t j = 0; j < out.space.dim(); ++j)
      if (!out.space.contains(out.ambient.mul(out.space.basis_vector(i), out.space.basis_vector(j))))
        throw Error("NotClosed", "cotensor subspace not closed under the product");
  if (!out.space.contains(out.ambient.unit)) throw Error("NotClosed", "1⊗1 not in the cotensor subspace");
  out.algebra = AlgebraPresentation::on_subspace(out.ambient, out.space, "c");
  out.embedding = out.space.embedding();
  return out;
}

CotensorAlgebra cotensor_algebra(const ComoduleAlgebra& a, const ComoduleAlgebra& b_right) {
  return cotensor_algebra_left(a, op_left_comodule(b_right));
}

Report check_rel_hopf_module(const RelHopfModule& m) {
  Report rep{"relative Hopf module"};
  const auto& a = *m.alg;
  const auto& h = *a.hopf();
  Field f = a.field();
  size_t d = m.dim, da = a.dim(), dh = h.dim();
  if (m.action.rows() != d || m.action.cols() != da * d)
    throw Error("DimensionMismatch", "module action dims");
  rep.merge(check_comodule(m.as_comodule()));
  bool unital = true, assoc = true;
  for (size_t j = 0; j < d; ++j)
    if (m.act(a.algebra.unit, vec_unit(f, d, j)) != vec_unit(f, d, j)) unital = false;
  for (size_t p = 0; p < da && assoc; ++p)
    for (size_t q = 0; q < da && assoc; ++q)
      for (size_t j = 0; j < d; ++j) {
        Vec ej = vec_unit(f, d, j);
        if (m.act(a.algebra.mul_basis(p, q), ej) !=
            m.act(vec_unit(f, da, p), m.act(vec_unit(f, da, q), ej))) {
          assoc = false;
          break;
        }
      }
  rep.add("action unital", unital);
  rep.add("action associative", assoc);
  bool compat = true;
  for (size_t p = 0; p < da && compat; ++p)
    for (size_t j = 0; j < d; ++j) {
      Vec lhs = m.coaction.apply(m.act(vec_unit(f, da, p), vec_unit(f, d, j)));
      Vec rhs = vec_zero(f, d * dh);
      const Vec ra = a.com.coaction.col(p);
      const Vec rm = m.coaction.col(j);
      for (size_t su = 0; su < ra.size(); ++su) {
        if (ra[su].is_zero()) continue;
        for (size_t tv = 0; tv < rm.size(); ++tv) {
          if (rm[tv].is_zero()) continue;
          Vec part = kron_vec(m.act(vec_unit(f, da, su / dh), vec_unit(f, d, tv / dh)),
                              h.mul_basis_pair(su % dh, tv % dh));
          vec_axpy(rhs, ra[su] * rm[tv], part);
        }
      }
      if (lhs != rhs) {
        compat = false;
        break;
      }
    }
  rep.add("coaction compatible with the action", compat);
  return rep;
}

RelHopfModule regular_rel_hopf_module(ComodAlgPtr a) {
  RelHopfModule m;
  m.alg = a;
  m.dim = a->dim();
  m.action = a->algebra.mult;
  m.coaction = a->com.coaction;
  return m;
}

RelHopfModule direct_sum(const RelHopfModule& m, size_t copies) {
  Field f = m.alg->field();
  size_t d = m.dim, da = m.alg->dim(), dh = m.alg->hopf()->dim();
  RelHopfModule s;
  s.alg = m.alg;
  s.dim = d * copies;
  s.action = Matrix(f, s.dim, da * s.dim);
  s.coaction = Matrix(f, s.dim * dh, s.dim);
  for (size_t c = 0; c < copies; ++c)
    for (size_t j = 0; j < d; ++j) {
      for (size_t p = 0; p < da; ++p) {
        Vec v = m.act(vec_unit(f, da, p), vec_unit(f, d, j));
        for (size_t t = 0; t < d; ++t) s.action.at(c * d + t, p * s.dim + c * d + j) = v[t];
      }
      Vec w = m.coaction.col(j);
      for (size_t t = 0; t < d; ++t)
        for (size_t u = 0; u < dh; ++u) s.coaction.at((c * d + t) * dh + u, c * d + j) = w[t * dh + u];
    }
  return s;
}

namespace {

Vec flatten(const Matrix& m) {
  Vec flat;
  flat.reserve(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) flat.push_back(m.at(i, j));
  return flat;
}

Matrix unflatten(Field f, const Vec& v, size_t rows, size_t cols) {
  Matrix m(f, rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
  return m;
}

/// ρ̃(f): M → N⊗H, m ↦ f(m₍₀₎)₍₀₎ ⊗ S⁻¹(m₍₁₎)f(m₍₀₎)₍₁₎.
Matrix rho_tilde(const HopfAlgebraPresentation& h, const Matrix& rho_m, const Matrix& rho_n,
                 const Matrix& f_map) {
  Field f = h.field();
  size_t dm = f_map.cols(), dn = f_map.rows(), dh = h.dim();
  Matrix out(f, dn * dh, dm);
  for (size_t j = 0; j < dm; ++j) {
    Vec acc = vec_zero(f, dn * dh);
    const Vec w = rho_m.col(j);
    for (size_t tu = 0; tu < w.size(); ++tu) {
      if (w[tu].is_zero()) continue;
      size_t t = tu / dh, u = tu % dh;
      Vec z = rho_n.apply(f_map.col(t));
      for (size_t pq = 0; pq < z.size(); ++pq) {
        if (z[pq].is_zero()) continue;
        size_t p = pq / dh, q = pq % dh;
        Vec tail = h.mul(h.antipode_inverse.col(u), vec_unit(f, dh, q));
        vec_axpy(acc, w[tu] * z[pq], kron_vec(vec_unit(f, dn, p), tail));
      }
    }
    out.set_col(j, acc);
  }
  return out;
}

}  // namespace

Vec RationalHom::coordinates(const Matrix& f) const {
  auto c = hom_space.coordinates(flatten(f));
  if (!c) throw Error("NotInSubspace", "map is not left A-linear");
  return *c;
}

Matrix RationalHom::from_coordinates(const Vec& c) const {
  Matrix f(alg->field(), target_dim, source_dim);
  for (size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero())
      for (size_t u = 0; u < target_dim; ++u)
        for (size_t v = 0; v < source_dim; ++v) f.at(u, v) += c[k] * basis[k].at(u, v);
  return f;
}

RationalHom rational_hom(ComodAlgPtr a, const RelHopfModule& m, const RelHopfModule& n) {
  {
    Report rm = check_rel_hopf_module(m);
    if (!rm.all_passed()) throw Error("NotRelativeHopfModule", "source fails: " + rm.to_string());
    Report rn = check_rel_hopf_module(n);
    if (!rn.all_passed()) throw Error("NotRelativeHopfModule", "target fails: " + rn.to_string());
  }
  const auto& h = *a->hopf();
  Field f = a->field();
  size_t dm = m.dim, dn = n.dim, da = a->dim(), dh = h.dim();

  RationalHom rh;
  rh.alg = a;
  rh.source_dim = dm;
  rh.target_dim = dn;
  rh.source_coaction = m.coaction;
  rh.target_coaction = n.coaction;
  rh.source_action = m.action;
  rh.target_action = n.action;

  // basis of the left A-linear maps: F L_p^M = L_p^N F for all p
  std::vector<Matrix> lm, ln;
  for (size_t p = 0; p < da; ++p) {
    Matrix lp_m(f, dm, dm), lp_n(f, dn, dn);
    for (size_t j = 0; j < dm; ++j) lp_m.set_col(j, m.act(vec_unit(f, da, p), vec_unit(f, dm, j)));
    for (size_t j = 0; j < dn; ++j) lp_n.set_col(j, n.act(vec_unit(f, da, p), vec_unit(f, dn, j)));
    lm.push_back(lp_m);
    ln.push_back(lp_n);
  }
  size_t unknowns = dn * dm;
  Matrix constraints(f, da * dn * dm, unknowns);
  for (size_t u = 0; u < dn; ++u)
    for (size_t v = 0; v < dm; ++v) {
      Matrix e(f, dn, dm);
      e.at(u, v) = Scalar::one(f);
      size_t col = u * dm + v;
      for (size_t p = 0; p < da; ++p) {
        Vec flat = flatten(e * lm[p] - ln[p] * e);
        for (size_t r = 0; r < flat.size(); ++r) constraints.at(p * dn * dm + r, col) = flat[r];
      }
    }
  rh.hom_space = kernel(constraints);
  for (size_t i = 0; i < rh.hom_space.dim(); ++i)
    rh.basis.push_back(unflatten(f, rh.hom_space.basis_vector(i), dn, dm));

  size_t k = rh.basis.size();
  // ν: Hom⊗H → Hom_k(M, N⊗H), ν(f⊗h)(m) = f(m)⊗h, in flattened coordinates
  Matrix nu(f, dn * dh * dm, k * dh);
  for (size_t bi = 0; bi < k; ++bi)
    for (size_t u = 0; u < dh; ++u) {
      Matrix img(f, dn * dh, dm);
      for (size_t j = 0; j < dm; ++j) img.set_col(j, kron_vec(rh.basis[bi].col(j), vec_unit(f, dh, u)));
      nu.set_col(bi * dh + u, flatten(img));
    }
  if (nu.rank() != k * dh) throw Error("CoactionNotRational", "ν is not injective on the hom space");

  Matrix targets(f, dn * dh * dm, k);
  for (size_t bi = 0; bi < k; ++bi)
    targets.set_col(bi, flatten(rho_tilde(h, m.coaction, n.coaction, rh.basis[bi])));
  auto sol = nu.solve(targets);
  if (!sol) throw Error("CoactionNotRational", "ρ̃ does not factor through Hom(M,N)⊗H");
  rh.coaction = *sol;
  return rh;
}

bool rational_hom_coaction_formula_holds(const RationalHom& rh) {
  const auto& h = *rh.alg->hopf();
  Field f = h.field();
  size_t dh = h.dim(), dn = rh.target_dim, dm = rh.source_dim;
  for (size_t bi = 0; bi < rh.dim(); ++bi) {
    // Σ f₍₀₎(m)⊗f₍₁₎ from the solved coaction
    Vec rho_f = rh.coaction.col(bi);
    Matrix lhs(f, dn * dh, dm);
    for (size_t ku = 0; ku < rho_f.size(); ++ku) {
      if (rho_f[ku].is_zero()) continue;
      size_t kk = ku / dh, u = ku % dh;
      for (size_t j = 0; j < dm; ++j)
        for (size_t p = 0; p < dn; ++p) {
          const Scalar& c = rh.basis[kk].at(p, j);
          if (!c.is_zero()) lhs.at(p * dh + u, j) += rho_f[ku] * c;
        }
    }
    Matrix rhs = rho_tilde(h, rh.source_coaction, rh.target_coaction, rh.basis[bi]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::optional<DualBasis> find_dual_basis(const ComoduleAlgebra& a, const RelHopfModule& m) {
  Field f = a.field();
  size_t dm = m.dim, da = a.dim();
  // unknowns: dm maps G_i (da x dm each), left A-linear, with Σ_i G_i(x)·e_i = x
  size_t per = da * dm, unknowns = dm * per;
  std::vector<Matrix> lm, la;
  for (size_t p = 0; p < da; ++p) {
    Matrix lp_m(f, dm, dm);
    for (size_t j = 0; j < dm; ++j) lp_m.set_col(j, m.act(vec_unit(f, da, p), vec_unit(f, dm, j)));
    lm.push_back(lp_m);
    la.push_back(a.algebra.left_mult(vec_unit(f, da, p)));
  }
  size_t lin_rows = dm * da * da * dm;
  size_t sum_rows = dm * dm;
  Matrix sys(f, lin_rows + sum_rows, unknowns);
  Vec rhs = vec_zero(f, lin_rows + sum_rows);
  for (size_t i = 0; i < dm; ++i)
    for (size_t u = 0; u < da; ++u)
      for (size_t v = 0; v < dm; ++v) {
        size_t col = i * per + u * dm + v;
        Matrix e(f, da, dm);
        e.at(u, v) = Scalar::one(f);
        for (size_t p = 0; p < da; ++p) {
          Vec flat = flatten(e * lm[p] - la[p] * e);
          for (size_t r = 0; r < flat.size(); ++r) sys.at((i * da + p) * da * dm + r, col) = flat[r];
        }
        // Σ_i act(G_i(e_x), e_i) at x = v picks up act(e_u, e_i)
        Vec contrib = m.act(vec_unit(f, da, u), vec_unit(f, dm, i));
        for (size_t r = 0; r < dm; ++r) sys.at(lin_rows + v * dm + r, col) = contrib[r];
      }
  for (size_t x = 0; x < dm; ++x) rhs[lin_rows + x * dm + x] = Scalar::one(f);
  auto sol = sys.solve(rhs);
  if (!sol) return std::nullopt;
  DualBasis db;
  for (size_t i = 0; i < dm; ++i) {
    Matrix g(f, da, dm);
    for (size_t u = 0; u < da; ++u)
      for (size_t v = 0; v < dm; ++v) g.at(u, v) = (*sol)[i * per + u * dm + v];
    db.functionals.push_back(g);
  }
  return db;
}

Matrix rational_hom_dual_basis(const RationalHom& rh, const DualBasis& db) {
  const auto& h = *rh.alg->hopf();
  Field f = h.field();
  size_t dh = h.dim(), k = rh.dim(), dm = rh.source_dim, dn = rh.target_dim, da = rh.alg->dim();
  if (db.functionals.size() != dm) throw Error("DimensionMismatch", "dual basis size");
  Matrix out(f, k * dh, k);
  // ρ(f) = Σ_i mᵢ*·f(m_i₍₀₎)₍₀₎ ⊗ S⁻¹(m_i₍₁₎)f(m_i₍₀₎)₍₁₎, (m*·n)(x) = m*(x)n
  for (size_t bi = 0; bi < k; ++bi) {
    Vec acc = vec_zero(f, k * dh);
    for (size_t i = 0; i < dm; ++i) {
      Vec w = rh.source_coaction.col(i);
      for (size_t tu = 0; tu < w.size(); ++tu) {
        if (w[tu].is_zero()) continue;
        size_t t = tu / dh, u = tu % dh;
        Vec z = rh.target_coaction.apply(rh.basis[bi].col(t));
        for (size_t pq = 0; pq < z.size(); ++pq) {
          if (z[pq].is_zero()) continue;
          size_t p = pq / dh, q = pq % dh;
          Matrix map_in(f, dn, dm);  // x ↦ mᵢ*(x)·e_p in the target module
          for (size_t x = 0; x < dm; ++x) {
            Vec val = vec_zero(f, dn);
            Vec ax = db.functionals[i].col(x);
            for (size_t s = 0; s < da; ++s)
              if (!ax[s].is_zero())
                vec_axpy(val, ax[s], rh.target_action.col(s * dn + p));
            map_in.set_col(x, val);
          }
          Vec coords = rh.coordinates(map_in);
          Vec tail = h.mul(h.antipode_inverse.col(u), vec_unit(f, dh, q));
          vec_axpy(acc, w[tu] * z[pq], kron_vec(coords, tail));
        }
      }
    }
    out.set_col(bi, acc);
  }
  return out;
}

EndOpAlgebra end_op_comodule_algebra(ComodAlgPtr a, const RelHopfModule& m) {
  RationalHom rh = rational_hom(a, m, m);
  size_t k = rh.dim();
  Field f = a->field();
  EndOpAlgebra out;
  out.hom = rh;
  out.alg.algebra.field = f;
  out.alg.algebra.dim = k;
  for (size_t i = 0; i < k; ++i) out.alg.algebra.basis_names.push_back("f" + std::to_string(i));
  out.alg.algebra.mult = Matrix(f, k, k * k);
  // END^op: the product of (f, g) is the composition g∘f
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      out.alg.algebra.mult.set_col(i * k + j, rh.coordinates(rh.basis[j] * rh.basis[i]));
  out.alg.algebra.unit = rh.coordinates(Matrix::identity(f, m.dim));
  out.alg.com.hopf = a->hopf();
  out.alg.com.dim = k;
  out.alg.com.side = Side::Right;
  out.alg.com.coaction = rh.coaction;
  return out;
}

}  // namespace hgx
