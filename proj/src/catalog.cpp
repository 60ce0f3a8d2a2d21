#include "hopfxyz/catalog.hpp"

#include <charconv>

#include "hopfxyz/errors.hpp"

namespace hopf {

namespace {

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidInput("bad catalog spec '" + std::string(whole) + "'");
  }
  return v;
}

std::string power_label(const char* sym, Index e) {
  if (e == 0) return "";
  if (e == 1) return sym;
  return std::string(sym) + "^" + std::to_string(e);
}

Scalar sc(FieldSpec f, std::int64_t v) { return Scalar::from_int(f, v); }

}  // namespace

CatalogSpec CatalogSpec::parse(std::string_view text) {
  CatalogSpec spec;
  std::string_view body = text;
  const auto at = text.find('@');
  if (at != std::string_view::npos) {
    body = text.substr(0, at);
    spec.field = FieldSpec::prime(parse_uint(text.substr(at + 1), text));
  }
  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    const auto colon = body.find(':', start);
    parts.push_back(body.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  const auto& head = parts[0];
  if (head == "cyclic" || head == "dual_cyclic") {
    if (parts.size() != 2) throw InvalidInput("expected " + std::string(head) + ":N");
    spec.name = head == "cyclic" ? Name::cyclic : Name::dual_cyclic;
    spec.n = static_cast<Index>(parse_uint(parts[1], text));
  } else if (head == "sweedler4") {
    if (parts.size() != 1) throw InvalidInput("sweedler4 takes no parameters");
    spec.name = Name::sweedler4;
    spec.n = 4;
  } else if (head == "taft") {
    if (parts.size() != 3 || at != std::string_view::npos) throw InvalidInput("expected taft:N:P");
    spec.name = Name::taft;
    spec.n = static_cast<Index>(parse_uint(parts[1], text));
    spec.field = FieldSpec::prime(parse_uint(parts[2], text));
  } else {
    throw InvalidInput("unknown catalog entry '" + std::string(text) + "'");
  }
  return spec;
}

std::string CatalogSpec::to_string() const {
  const std::string suffix = field.is_rational() ? "" : "@" + std::to_string(field.characteristic());
  switch (name) {
    case Name::cyclic:
      return "cyclic:" + std::to_string(n) + suffix;
    case Name::dual_cyclic:
      return "dual_cyclic:" + std::to_string(n) + suffix;
    case Name::sweedler4:
      return "sweedler4" + suffix;
    case Name::taft:
      return "taft:" + std::to_string(n) + ":" + std::to_string(field.characteristic());
  }
  return {};
}

HopfAlgebraData cyclic_group_algebra(Index n, FieldSpec field) {
  if (n < 1) throw InvalidInput("cyclic group order must be at least 1");
  std::vector<std::string> labels;
  BilinearTable::Builder mult(field, n, n, n);
  SparseColumns comult(field, n, n * n);
  LinearMap antipode(field, n, n);
  for (Index i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : power_label("g", i));
    for (Index j = 0; j < n; ++j) mult.add(i, j, (i + j) % n, Scalar::one(field));
    comult.set_column(i, {{i * n + i, Scalar::one(field)}});
    antipode.at((n - i) % n, i) = Scalar::one(field);
  }
  auto algebra = AlgebraData::make(labels, std::move(mult).build(), basis_vector(field, n, 0));
  auto coalgebra = CoalgebraData::make(labels, std::move(comult), Vector(n, Scalar::one(field)));
  return HopfAlgebraData::make(std::move(algebra), std::move(coalgebra), std::move(antipode));
}

HopfAlgebraData dual_cyclic(Index n, FieldSpec field) {
  return dual_hopf(cyclic_group_algebra(n, field));
}

HopfAlgebraData sweedler4(FieldSpec field) {
  if (field.characteristic() == 2) throw InvalidInput("sweedler4 requires characteristic != 2");
  enum : Index { one = 0, g = 1, x = 2, gx = 3 };
  BilinearTable::Builder mult(field, 4, 4, 4);
  for (Index b = 0; b < 4; ++b) {
    mult.add(one, b, b, sc(field, 1));
    if (b != one) mult.add(b, one, b, sc(field, 1));
  }
  mult.add(g, g, one, sc(field, 1));
  mult.add(g, x, gx, sc(field, 1));
  mult.add(g, gx, x, sc(field, 1));
  mult.add(x, g, gx, sc(field, -1));
  mult.add(gx, g, x, sc(field, -1));
  // x x = x gx = gx x = gx gx = 0

  auto pair = [](Index a, Index b) { return a * 4 + b; };
  SparseColumns comult(field, 4, 16);
  comult.set_column(one, {{pair(one, one), sc(field, 1)}});
  comult.set_column(g, {{pair(g, g), sc(field, 1)}});
  comult.set_column(x, {{pair(x, one), sc(field, 1)}, {pair(g, x), sc(field, 1)}});
  comult.set_column(gx, {{pair(gx, g), sc(field, 1)}, {pair(one, gx), sc(field, 1)}});

  LinearMap antipode(field, 4, 4);
  antipode.at(one, one) = sc(field, 1);
  antipode.at(g, g) = sc(field, 1);
  antipode.at(gx, x) = sc(field, -1);
  antipode.at(x, gx) = sc(field, 1);

  std::vector<std::string> labels{"1", "g", "x", "gx"};
  auto algebra = AlgebraData::make(labels, std::move(mult).build(), basis_vector(field, 4, one));
  Vector counit{sc(field, 1), sc(field, 1), sc(field, 0), sc(field, 0)};
  auto coalgebra = CoalgebraData::make(labels, std::move(comult), std::move(counit));
  return HopfAlgebraData::make(std::move(algebra), std::move(coalgebra), std::move(antipode));
}

std::uint32_t least_primitive_root(Index n, std::uint32_t p) {
  if (n == 0 || !is_prime(p) || (p - 1) % n != 0) {
    throw InvalidInput("no primitive " + std::to_string(n) + "-th root of unity mod " +
                       std::to_string(p));
  }
  for (std::uint32_t r = 1; r < p; ++r) {
    std::uint64_t acc = 1;
    Index order = 0;
    do {
      acc = acc * r % p;
      ++order;
    } while (acc != 1);
    if (order == n) return r;
  }
  throw InvalidInput("no primitive root found");  // unreachable for n | p - 1
}

HopfAlgebraData taft(Index n, std::uint32_t p) {
  if (n < 2) throw InvalidInput("taft algebra needs n >= 2");
  const FieldSpec field = FieldSpec::prime(p);
  const Scalar omega = sc(field, least_primitive_root(n, p));
  const Index dim = n * n;
  auto idx = [n](Index i, Index j) { return (i % n) + n * j; };

  std::vector<std::string> labels;
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      std::string l = power_label("g", i) + power_label("x", j);
      labels.push_back(l.empty() ? "1" : l);
    }
  }

  // (g^i x^j)(g^k x^l) = w^{jk} g^{i+k} x^{j+l}
  std::vector<Scalar> omega_pow{Scalar::one(field)};
  for (Index e = 1; e < n; ++e) omega_pow.push_back(omega_pow.back() * omega);
  BilinearTable::Builder mult_builder(field, dim, dim, dim);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      for (Index l = 0; j + l < n; ++l) {
        for (Index k = 0; k < n; ++k) {
          mult_builder.add(idx(i, j), idx(k, l), idx(i + k, j + l), omega_pow[(j * k) % n]);
        }
      }
    }
  }
  auto algebra = AlgebraData::make(labels, std::move(mult_builder).build(),
                                   basis_vector(field, dim, 0));
  const AlgebraData pair_algebra = tensor_algebra(algebra, algebra);

  // Delta and S extended from generators through products.
  const SparseVec one_pair{{0, sc(field, 1)}};
  const SparseVec delta_g{{idx(1, 0) * dim + idx(1, 0), sc(field, 1)}};
  const SparseVec delta_x{{idx(0, 1) * dim + idx(0, 0), sc(field, 1)},
                          {idx(1, 0) * dim + idx(0, 1), sc(field, 1)}};
  const SparseVec s_g{{idx(n - 1, 0), sc(field, 1)}};
  const SparseVec s_x{{idx(n - 1, 1), sc(field, -1)}};

  SparseColumns comult(field, dim, dim * dim);
  LinearMap antipode(field, dim, dim);
  Vector counit = zeros(field, dim);
  SparseVec dx_pow = one_pair;
  SparseVec sx_pow{{0, sc(field, 1)}};
  for (Index j = 0; j < n; ++j) {
    SparseVec dg_pow = one_pair;
    SparseVec sg_pow{{0, sc(field, 1)}};
    for (Index i = 0; i < n; ++i) {
      comult.set_column(idx(i, j), pair_algebra.multiply(dg_pow, dx_pow));
      antipode.set_column(idx(i, j), algebra.multiply(sx_pow, sg_pow));
      dg_pow = pair_algebra.multiply(dg_pow, delta_g);
      sg_pow = algebra.multiply(sg_pow, s_g);
    }
    counit[idx(0, j)] = j == 0 ? sc(field, 1) : sc(field, 0);
    for (Index i = 1; i < n; ++i) counit[idx(i, j)] = counit[idx(0, j)];
    dx_pow = pair_algebra.multiply(dx_pow, delta_x);
    sx_pow = algebra.multiply(sx_pow, s_x);
  }
  auto coalgebra = CoalgebraData::make(labels, std::move(comult), std::move(counit));
  return HopfAlgebraData::make(std::move(algebra), std::move(coalgebra), std::move(antipode));
}

HopfAlgebraData catalog_hopf(const CatalogSpec& spec) {
  HopfAlgebraData h;
  switch (spec.name) {
    case CatalogSpec::Name::cyclic:
      h = cyclic_group_algebra(spec.n, spec.field);
      break;
    case CatalogSpec::Name::dual_cyclic:
      h = dual_cyclic(spec.n, spec.field);
      break;
    case CatalogSpec::Name::sweedler4:
      h = sweedler4(spec.field);
      break;
    case CatalogSpec::Name::taft:
      h = taft(spec.n, spec.field.characteristic());
      break;
  }
  require_hopf(h, spec.to_string());
  return h;
}

}  // namespace hopf
