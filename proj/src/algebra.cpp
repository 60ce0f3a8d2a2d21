#include "hopfxyz/algebra.hpp"

#include "hopfxyz/errors.hpp"
#include "hopfxyz/kernels.hpp"
#include "hopfxyz/linalg.hpp"

namespace hopf {

AlgebraData AlgebraData::make(std::vector<std::string> labels, BilinearTable mult, Vector unit) {
  const Index n = mult.left_dim();
  if (n == 0) throw InvalidInput("algebra of dimension 0");
  if (mult.right_dim() != n || mult.out_dim() != n) {
    throw DimensionMismatch("multiplication table is not n x n -> n");
  }
  if (labels.size() != n) throw DimensionMismatch("basis label count differs from dimension");
  if (unit.size() != n) throw DimensionMismatch("unit vector length differs from dimension");
  for (const auto& s : unit) {
    if (s.field() != mult.field()) throw FieldMismatch("unit vector in wrong field");
  }
  return AlgebraData{mult.field(), n, std::move(labels), std::move(mult), std::move(unit)};
}

Vector AlgebraData::multiply(const Vector& x, const Vector& y) const {
  return kernels::parallel::bilinear(mult, x, y);
}

CoalgebraData CoalgebraData::make(std::vector<std::string> labels, SparseColumns comult,
                                  Vector counit) {
  const Index n = comult.src_dim();
  if (n == 0) throw InvalidInput("coalgebra of dimension 0");
  if (comult.dst_dim() != n * n) throw DimensionMismatch("comultiplication must map k^n to k^(n^2)");
  if (labels.size() != n) throw DimensionMismatch("basis label count differs from dimension");
  if (counit.size() != n) throw DimensionMismatch("counit length differs from dimension");
  return CoalgebraData{comult.field(), n, std::move(labels), std::move(comult), std::move(counit)};
}

HopfAlgebraData HopfAlgebraData::make(AlgebraData algebra, CoalgebraData coalgebra,
                                      LinearMap antipode) {
  const Index n = algebra.dim;
  if (coalgebra.dim != n) throw DimensionMismatch("algebra and coalgebra dimensions differ");
  if (algebra.field != coalgebra.field) throw FieldMismatch("algebra and coalgebra fields differ");
  if (antipode.src_dim() != n || antipode.dst_dim() != n) {
    throw DimensionMismatch("antipode must be an n x n matrix");
  }
  return HopfAlgebraData{std::move(algebra), std::move(coalgebra), std::move(antipode)};
}

CheckMode default_axiom_mode(std::size_t dim, std::uint64_t seed) {
  return CheckMode::automatic(dim, kExhaustiveAxiomDim, kDefaultTrials, seed);
}

CheckReport check_algebra_axioms(const AlgebraData& a, CheckMode mode) {
  return check_algebra_axioms(a.mult, a.unit, mode);
}

CheckReport check_algebra_axioms(const BilinearTable& mult, const Vector& unit, CheckMode mode) {
  const Index n = mult.left_dim();
  const FieldSpec field = mult.field();
  if (unit.size() != n) throw DimensionMismatch("unit length");
  const SparseVec unit_sparse = to_sparse(unit);

  if (mode.is_exhaustive()) {
    return check_over(n, [&](std::size_t i, CheckReport& report) {
      const Index ii = static_cast<Index>(i);
      const SparseVec ei{{ii, Scalar::one(field)}};
      report.expect_equal("left unit law", {i}, mult.apply(unit_sparse, ei), ei, field, n);
      report.expect_equal("right unit law", {i}, mult.apply(ei, unit_sparse), ei, field, n);
      for (Index j = 0; j < n; ++j) {
        const auto ij = mult.at(ii, j);
        for (Index k = 0; k < n; ++k) {
          SparseVec lhs;
          for (const Term& t : ij) append_scaled(lhs, t.coef, mult.at(t.index, k));
          canonicalize(lhs);
          SparseVec rhs;
          for (const Term& t : mult.at(j, k)) append_scaled(rhs, t.coef, mult.at(ii, t.index));
          canonicalize(rhs);
          report.expect_equal("associativity", {i, j, k}, lhs, rhs, field, n);
        }
      }
    });
  }

  return check_over(mode.trials, [&](std::size_t trial, CheckReport& report) {
    auto rng = trial_rng(mode.seed, trial);
    const Vector x = random_vector(field, n, rng);
    const Vector y = random_vector(field, n, rng);
    const Vector z = random_vector(field, n, rng);
    using kernels::serial::bilinear;
    report.expect_equal("associativity", {trial}, bilinear(mult, bilinear(mult, x, y), z),
                        bilinear(mult, x, bilinear(mult, y, z)));
    report.expect_equal("left unit law", {trial}, bilinear(mult, unit, x), x);
    report.expect_equal("right unit law", {trial}, bilinear(mult, x, unit), x);
  });
}

namespace {

// (Delta (x) id)(w) and (id (x) Delta)(w) for w in k^{n^2}; results in k^{n^3}.
Vector delta_left(const CoalgebraData& c, const Vector& w) {
  const Index n = c.dim;
  Vector out = zeros(c.field, static_cast<std::size_t>(n) * n * n);
  for (Index j = 0; j < n; ++j) {
    for (Index k = 0; k < n; ++k) {
      const Scalar& s = w[j * n + k];
      if (s.is_zero()) continue;
      for (const Term& t : c.comult.column(j)) out[t.index * n + k].add_mul(s, t.coef);
    }
  }
  return out;
}

Vector delta_right(const CoalgebraData& c, const Vector& w) {
  const Index n = c.dim;
  Vector out = zeros(c.field, static_cast<std::size_t>(n) * n * n);
  for (Index j = 0; j < n; ++j) {
    for (Index k = 0; k < n; ++k) {
      const Scalar& s = w[j * n + k];
      if (s.is_zero()) continue;
      for (const Term& t : c.comult.column(k)) {
        out[static_cast<std::size_t>(j) * n * n + t.index].add_mul(s, t.coef);
      }
    }
  }
  return out;
}

Scalar evaluate(const Vector& functional, const Vector& x) {
  Scalar s = Scalar::zero(x.empty() ? FieldSpec{} : x.front().field());
  for (std::size_t i = 0; i < x.size(); ++i) s.add_mul(functional[i], x[i]);
  return s;
}

Vector scaled(const Vector& v, const Scalar& c) {
  Vector out = v;
  for (auto& s : out) s *= c;
  return out;
}

}  // namespace

CheckReport check_hopf_axioms(const HopfAlgebraData& h) {
  return check_hopf_axioms(h, default_axiom_mode(h.dim()));
}

CheckReport check_hopf_axioms(const HopfAlgebraData& h, CheckMode mode) {
  const Index n = h.dim();
  const FieldSpec field = h.field();
  if (h.coalgebra.dim != n || h.antipode.src_dim() != n || h.antipode.dst_dim() != n) {
    throw DimensionMismatch("Hopf algebra parts have different dimensions");
  }
  const auto& A = h.algebra;
  const auto& C = h.coalgebra;
  const BilinearTable pair_mult = tensor_algebra(A, A).mult;

  CheckReport report = check_algebra_axioms(A, mode);

  // Identities linear in one argument.
  auto single = [&](const Vector& x, std::vector<std::size_t> w, CheckReport& r) {
    const Vector dx = C.comult.apply(x);
    r.expect_equal("coassociativity", w, delta_left(C, dx), delta_right(C, dx));
    Vector left = zeros(field, n), right = zeros(field, n);
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        const Scalar& s = dx[j * n + k];
        if (s.is_zero()) continue;
        left[k].add_mul(C.counit[j], s);
        right[j].add_mul(C.counit[k], s);
      }
    }
    r.expect_equal("counit law (eps (x) id)", w, left, x);
    r.expect_equal("counit law (id (x) eps)", w, right, x);

    const Vector eps_unit = scaled(A.unit, evaluate(C.counit, x));
    Vector s_left = zeros(field, n), s_right = zeros(field, n);
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        const Scalar& s = dx[j * n + k];
        if (s.is_zero()) continue;
        const SparseVec sj = h.antipode.column(j);
        const SparseVec sk = h.antipode.column(k);
        const SparseVec ek{{k, Scalar::one(field)}};
        const SparseVec ej{{j, Scalar::one(field)}};
        axpy(s_left, s, A.multiply(sj, ek));
        axpy(s_right, s, A.multiply(ej, sk));
      }
    }
    r.expect_equal("antipode S(h1) h2 = eps(h) 1", w, s_left, eps_unit);
    r.expect_equal("antipode h1 S(h2) = eps(h) 1", w, s_right, eps_unit);
  };

  // Identities bilinear in two arguments.
  auto pair = [&](const Vector& x, const Vector& y, std::vector<std::size_t> w, CheckReport& r) {
    const Vector xy = kernels::serial::bilinear(A.mult, x, y);
    r.expect_equal("Delta multiplicative", w, C.comult.apply(xy),
                   kernels::serial::bilinear(pair_mult, C.comult.apply(x), C.comult.apply(y)));
    const Scalar ex = evaluate(C.counit, x), ey = evaluate(C.counit, y);
    r.expect_equal("epsilon multiplicative", w, Vector{evaluate(C.counit, xy)}, Vector{ex * ey});
  };

  if (mode.is_exhaustive()) {
    report.merge(check_over(n, [&](std::size_t i, CheckReport& r) {
      const Vector ei = basis_vector(field, n, i);
      single(ei, {i}, r);
      for (Index j = 0; j < n; ++j) pair(ei, basis_vector(field, n, j), {i, j}, r);
    }));
  } else {
    report.merge(check_over(mode.trials, [&](std::size_t trial, CheckReport& r) {
      auto rng = trial_rng(mode.seed ^ 0x5eedULL, trial);
      const Vector x = random_vector(field, n, rng);
      const Vector y = random_vector(field, n, rng);
      single(x, {trial}, r);
      pair(x, y, {trial}, r);
    }));
  }

  Vector unit_pair = zeros(field, static_cast<std::size_t>(n) * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) unit_pair[i * n + j] = A.unit[i] * A.unit[j];
  }
  report.expect_equal("Delta(1) = 1 (x) 1", {}, C.comult.apply(A.unit), unit_pair);
  report.expect_equal("epsilon(1) = 1", {}, Vector{evaluate(C.counit, A.unit)},
                      Vector{Scalar::one(field)});
  const std::size_t r = rank(h.antipode);
  report.count();
  if (r != n) {
    report.fail({"antipode invertible", {r}, {}, {}});
  }
  return report;
}

void require_hopf(const HopfAlgebraData& h, const std::string& what) {
  const CheckReport r = check_hopf_axioms(h);
  if (!r.passed()) {
    throw InvalidInput(what + ": not a Hopf algebra: " + r.violations().front().to_string());
  }
}

HopfAlgebraData dual_hopf(const HopfAlgebraData& h) {
  require_hopf(h, "dual_hopf");
  const Index n = h.dim();
  const FieldSpec field = h.field();
  std::vector<std::string> labels;
  for (const auto& l : h.labels()) labels.push_back(l + "*");

  BilinearTable::Builder mult(field, n, n, n);
  for (Index i = 0; i < n; ++i) {
    for (const Term& t : h.coalgebra.comult.column(i)) mult.add(t.index / n, t.index % n, i, t.coef);
  }
  SparseColumns comult(field, n, n * n);
  std::vector<SparseVec> cols(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (const Term& t : h.algebra.mult.at(i, j)) cols[t.index].push_back({i * n + j, t.coef});
    }
  }
  for (Index k = 0; k < n; ++k) comult.set_column(k, std::move(cols[k]));

  auto algebra = AlgebraData::make(labels, std::move(mult).build(), h.coalgebra.counit);
  auto coalgebra = CoalgebraData::make(labels, std::move(comult), h.algebra.unit);
  return HopfAlgebraData::make(std::move(algebra), std::move(coalgebra), h.antipode.transpose());
}

AlgebraData opposite_algebra(const AlgebraData& a) {
  const Index n = a.dim;
  std::vector<SparseVec> rows(static_cast<std::size_t>(n) * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const auto r = a.mult.at(j, i);
      rows[i * n + j] = SparseVec(r.begin(), r.end());
    }
  }
  return AlgebraData::make(a.labels, BilinearTable::from_rows(a.field, n, n, n, std::move(rows)),
                           a.unit);
}

namespace {

CoalgebraData opposite_coalgebra(const CoalgebraData& c) {
  const Index n = c.dim;
  SparseColumns comult(c.field, n, n * n);
  for (Index i = 0; i < n; ++i) {
    SparseVec col;
    for (const Term& t : c.comult.column(i)) col.push_back({(t.index % n) * n + t.index / n, t.coef});
    comult.set_column(i, std::move(col));
  }
  return CoalgebraData::make(c.labels, std::move(comult), c.counit);
}

}  // namespace

HopfAlgebraData variant(const HopfAlgebraData& h, Variant which) {
  switch (which) {
    case Variant::op:
      return HopfAlgebraData::make(opposite_algebra(h.algebra), h.coalgebra, antipode_inverse(h));
    case Variant::cop:
      return HopfAlgebraData::make(h.algebra, opposite_coalgebra(h.coalgebra), antipode_inverse(h));
    case Variant::op_cop:
      return HopfAlgebraData::make(opposite_algebra(h.algebra), opposite_coalgebra(h.coalgebra),
                                   h.antipode);
  }
  throw InvalidInput("unknown variant");
}

AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b) {
  if (a.field != b.field) throw FieldMismatch("tensor_algebra: fields differ");
  const Index na = a.dim, nb = b.dim, n = na * nb;
  std::vector<SparseVec> rows(static_cast<std::size_t>(n) * n);
  for (Index i1 = 0; i1 < na; ++i1) {
    for (Index j1 = 0; j1 < nb; ++j1) {
      for (Index i2 = 0; i2 < na; ++i2) {
        const auto pa = a.mult.at(i1, i2);
        if (pa.empty()) continue;
        for (Index j2 = 0; j2 < nb; ++j2) {
          SparseVec& row = rows[static_cast<std::size_t>(i1 * nb + j1) * n + (i2 * nb + j2)];
          for (const Term& s : pa) {
            for (const Term& t : b.mult.at(j1, j2)) row.push_back({s.index * nb + t.index, s.coef * t.coef});
          }
        }
      }
    }
  }
  std::vector<std::string> labels;
  Vector unit;
  for (Index i = 0; i < na; ++i) {
    for (Index j = 0; j < nb; ++j) {
      labels.push_back(a.labels[i] + "⊗" + b.labels[j]);
      unit.push_back(a.unit[i] * b.unit[j]);
    }
  }
  return AlgebraData::make(std::move(labels),
                           BilinearTable::from_rows(a.field, n, n, n, std::move(rows)),
                           std::move(unit));
}

HopfAlgebraData tensor_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b) {
  if (a.field() != b.field()) throw FieldMismatch("tensor_hopf: fields differ");
  AlgebraData algebra = tensor_algebra(a.algebra, b.algebra);
  const Index na = a.dim(), nb = b.dim(), n = na * nb;
  SparseColumns comult(a.field(), n, n * n);
  Vector counit;
  for (Index i = 0; i < na; ++i) {
    for (Index j = 0; j < nb; ++j) {
      SparseVec col;
      for (const Term& s : a.coalgebra.comult.column(i)) {
        const Index a1 = s.index / na, a2 = s.index % na;
        for (const Term& t : b.coalgebra.comult.column(j)) {
          const Index b1 = t.index / nb, b2 = t.index % nb;
          col.push_back({(a1 * nb + b1) * n + (a2 * nb + b2), s.coef * t.coef});
        }
      }
      comult.set_column(i * nb + j, std::move(col));
      counit.push_back(a.coalgebra.counit[i] * b.coalgebra.counit[j]);
    }
  }
  auto coalgebra = CoalgebraData::make(algebra.labels, std::move(comult), std::move(counit));
  return HopfAlgebraData::make(std::move(algebra), std::move(coalgebra),
                               kronecker(a.antipode, b.antipode));
}

LinearMap antipode_inverse(const HopfAlgebraData& h) {
  auto inv = try_inverse(h.antipode);
  if (!inv) throw InvalidInput("antipode is singular (corrupted Hopf algebra data)");
  return *std::move(inv);
}

SparseColumns double_comult(const CoalgebraData& c) {
  const Index n = c.dim;
  SparseColumns out(c.field, n, n * n * n);
  for (Index i = 0; i < n; ++i) {
    SparseVec col;
    for (const Term& t : c.comult.column(i)) {
      const Index a = t.index / n, b = t.index % n;
      for (const Term& u : c.comult.column(a)) col.push_back({u.index * n + b, t.coef * u.coef});
    }
    out.set_column(i, std::move(col));
  }
  return out;
}

LinearMap left_multiplication(const AlgebraData& a, const Vector& x) {
  LinearMap m(a.field, a.dim, a.dim);
  const SparseVec xs = to_sparse(x);
  for (Index j = 0; j < a.dim; ++j) {
    const SparseVec ej{{j, Scalar::one(a.field)}};
    m.set_column(j, a.multiply(xs, ej));
  }
  return m;
}

std::vector<Vector> trace_form_radical(const AlgebraData& a) {
  if (!a.field.is_rational()) {
    throw InvalidInput("the trace-form radical criterion requires characteristic 0");
  }
  const Index n = a.dim;
  // tr(L_{e_k}) = sum_l (e_k e_l)_l
  Vector traces = zeros(a.field, n);
  for (Index k = 0; k < n; ++k) {
    for (Index l = 0; l < n; ++l) {
      for (const Term& t : a.mult.at(k, l)) {
        if (t.index == l) traces[k] += t.coef;
      }
    }
  }
  // tr(L_{e_i} L_{e_j}) = tr(L_{e_i e_j})
  LinearMap form(a.field, n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Scalar s = Scalar::zero(a.field);
      for (const Term& t : a.mult.at(i, j)) s.add_mul(t.coef, traces[t.index]);
      form.at(i, j) = std::move(s);
    }
  }
  return kernel(form);
}

bool same_structure(const AlgebraData& a, const AlgebraData& b) {
  return a.field == b.field && a.mult == b.mult && a.unit == b.unit;
}

bool same_structure(const HopfAlgebraData& a, const HopfAlgebraData& b) {
  return same_structure(a.algebra, b.algebra) && a.coalgebra.comult == b.coalgebra.comult &&
         a.coalgebra.counit == b.coalgebra.counit && a.antipode == b.antipode;
}

bool is_commutative(const AlgebraData& a) {
  return opposite_algebra(a).mult == a.mult;
}

bool is_cocommutative(const CoalgebraData& c) {
  return opposite_coalgebra(c).comult == c.comult;
}

}  // namespace hopf
