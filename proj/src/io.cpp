#include "hopfxyz/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hopfxyz/errors.hpp"

namespace hopf {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError(where.empty() ? what : where + ": " + what);
}

void allow_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                std::initializer_list<std::string_view> required, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) bad(where, "unknown key \"" + key + "\"");
  }
  for (std::string_view key : required) {
    if (!obj.contains(key)) bad(where, "missing key \"" + std::string(key) + "\"");
  }
}

const json& array_at(const json& obj, std::string_view key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_array()) bad(where + "." + std::string(key), "expected an array");
  return v;
}

Index to_index(const json& v, std::uint64_t bound, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    bad(where, "expected a non-negative integer");
  }
  const auto x = v.get<std::uint64_t>();
  if (x >= bound) bad(where, "index " + std::to_string(x) + " out of range (< " + std::to_string(bound) + ")");
  return static_cast<Index>(x);
}

Index to_dim(const json& v, const std::string& where) {
  return to_index(v, std::numeric_limits<Index>::max(), where);
}

Scalar to_scalar(const json& v, FieldSpec field, const std::string& where) {
  if (!v.is_string()) bad(where, "scalars are written as strings");
  try {
    return Scalar::parse(field, v.get<std::string>());
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

FieldSpec to_field(const json& v) {
  if (v.is_string() && v.get<std::string>() == "Q") return FieldSpec::rationals();
  if (v.is_object()) {
    allow_keys(v, {"p"}, {"p"}, "field");
    try {
      return FieldSpec::prime(to_dim(v.at("p"), "field.p"));
    } catch (const InvalidInput& e) {
      bad("field", e.what());
    }
  }
  bad("field", "expected \"Q\" or {\"p\": prime}");
}

json field_json(FieldSpec f) {
  if (f.is_rational()) return "Q";
  return json{{"p", f.characteristic()}};
}

const json& row_of(const json& entries, std::size_t r, std::size_t width, const std::string& where) {
  const json& e = entries[r];
  if (!e.is_array() || e.size() != width) bad(where, "expected an array of length " + std::to_string(width));
  return e;
}

Vector vector_of(const json& v, FieldSpec field, Index n, const std::string& where) {
  if (!v.is_array() || v.size() != n) bad(where, "expected " + std::to_string(n) + " scalars");
  Vector out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(to_scalar(v[i], field, where + "[" + std::to_string(i) + "]"));
  return out;
}

// [[i, j, k, "s"]] into a table of the given shape
BilinearTable table_of(const json& entries, FieldSpec field, Index left, Index right, Index out,
                       const std::string& where) {
  if (!entries.is_array()) bad(where, "expected an array");
  BilinearTable::Builder b(field, left, right, out);
  for (std::size_t r = 0; r < entries.size(); ++r) {
    const std::string w = where + "[" + std::to_string(r) + "]";
    const json& e = row_of(entries, r, 4, w);
    b.add(to_index(e[0], left, w), to_index(e[1], right, w), to_index(e[2], out, w), to_scalar(e[3], field, w));
  }
  return std::move(b).build();
}

json table_json(const BilinearTable& t) {
  json rows = json::array();
  for (Index i = 0; i < t.left_dim(); ++i) {
    for (Index j = 0; j < t.right_dim(); ++j) {
      for (const Term& term : t.at(i, j)) rows.push_back(json::array({i, j, term.index, term.coef.to_string()}));
    }
  }
  return rows;
}

// [[j, c, k, "s"]]: coefficient of e_c (x) m_k (left) or m_k (x) e_c (right) in rho(m_j)
CoactionData coaction_of(const json& entries, Side side, FieldSpec field, Index cdim, Index mdim,
                         const std::string& where) {
  if (!entries.is_array()) bad(where, "expected an array");
  std::vector<SparseVec> cols(mdim);
  for (std::size_t r = 0; r < entries.size(); ++r) {
    const std::string w = where + "[" + std::to_string(r) + "]";
    const json& e = row_of(entries, r, 4, w);
    const Index j = to_index(e[0], mdim, w);
    const Index c = to_index(e[1], cdim, w);
    const Index k = to_index(e[2], mdim, w);
    cols[j].push_back({side == Side::left ? c * mdim + k : k * cdim + c, to_scalar(e[3], field, w)});
  }
  SparseColumns map(field, mdim, cdim * mdim);
  for (Index j = 0; j < mdim; ++j) map.set_column(j, std::move(cols[j]));
  return CoactionData::make(side, cdim, std::move(map));
}

json coaction_json(const CoactionData& co) {
  const Index cdim = co.coalgebra_dim, mdim = co.space_dim();
  json rows = json::array();
  for (Index j = 0; j < mdim; ++j) {
    for (const Term& t : co.map.column(j)) {
      const Index c = co.side == Side::left ? t.index / mdim : t.index % cdim;
      const Index k = co.side == Side::left ? t.index % mdim : t.index / cdim;
      rows.push_back(json::array({j, c, k, t.coef.to_string()}));
    }
  }
  return rows;
}

Side side_of(const json& v, const std::string& where) {
  if (v == "left") return Side::left;
  if (v == "right") return Side::right;
  bad(where, "side must be \"left\" or \"right\"");
}

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

std::string name_of(const json& v, const std::string& where) {
  if (!v.is_string()) bad(where, "expected a string");
  return v.get<std::string>();
}

// Objects open one key per line; arrays of arrays or objects put one element per line.
void write_json(std::ostream& os, const json& v, int indent) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  if (v.is_object() && !v.empty()) {
    os << "{\n";
    std::size_t i = 0;
    for (const auto& [key, val] : v.items()) {
      os << inner << json(key).dump() << ": ";
      write_json(os, val, indent + 2);
      os << (++i < v.size() ? ",\n" : "\n");
    }
    os << pad << '}';
    return;
  }
  const bool nested =
      v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
  if (!nested) {
    os << v.dump();
    return;
  }
  os << "[\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << inner;
    write_json(os, v[i], indent + 2);
    os << (i + 1 < v.size() ? ",\n" : "\n");
  }
  os << pad << ']';
}

std::string pretty(const json& v) {
  std::ostringstream os;
  write_json(os, v, 0);
  os << '\n';
  return os.str();
}

json scalars_json(const Vector& v) {
  json out = json::array();
  for (const Scalar& s : v) out.push_back(s.to_string());
  return out;
}

}  // namespace

HopfFile HopfFile::from(const AlgebraData& a) {
  HopfFile f;
  f.algebra = a;
  return f;
}

HopfFile HopfFile::from(const HopfAlgebraData& h) {
  HopfFile f;
  f.algebra = h.algebra;
  f.coalgebra = h.coalgebra;
  f.antipode = h.antipode;
  return f;
}

HopfAlgebraData HopfFile::hopf() const {
  if (!is_hopf()) throw InvalidInput("the file describes an algebra only (no comult, counit, antipode)");
  return HopfAlgebraData::make(algebra, *coalgebra, *antipode);
}

HopfFile HopfFile::parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  allow_keys(doc,
             {"field", "dim", "basis", "mult", "unit", "comult", "counit", "antipode", "actions", "coactions",
              "module"},
             {"field", "dim", "basis", "mult", "unit"}, "");

  HopfFile f;
  try {
    const FieldSpec field = to_field(doc.at("field"));
    const Index n = to_dim(doc.at("dim"), "dim");

    const json& basis = doc.at("basis");
    if (!basis.is_array() || basis.size() != n) bad("basis", "expected " + std::to_string(n) + " labels");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(name_of(basis[i], "basis[" + std::to_string(i) + "]"));

    f.algebra = AlgebraData::make(labels, table_of(doc.at("mult"), field, n, n, n, "mult"),
                                  vector_of(doc.at("unit"), field, n, "unit"));

    const int coalgebra_keys = int(doc.contains("comult")) + int(doc.contains("counit")) + int(doc.contains("antipode"));
    if (coalgebra_keys != 0 && coalgebra_keys != 3) bad("", "comult, counit and antipode must appear together");
    if (coalgebra_keys == 3) {
      const json& entries = array_at(doc, "comult", "");
      std::vector<SparseVec> cols(n);
      for (std::size_t r = 0; r < entries.size(); ++r) {
        const std::string w = "comult[" + std::to_string(r) + "]";
        const json& e = row_of(entries, r, 4, w);
        const Index i = to_index(e[0], n, w);
        cols[i].push_back({to_index(e[1], n, w) * n + to_index(e[2], n, w), to_scalar(e[3], field, w)});
      }
      SparseColumns comult(field, n, n * n);
      for (Index i = 0; i < n; ++i) comult.set_column(i, std::move(cols[i]));
      f.coalgebra = CoalgebraData::make(labels, std::move(comult), vector_of(doc.at("counit"), field, n, "counit"));

      const json& rows = doc.at("antipode");
      if (!rows.is_array() || rows.size() != n) bad("antipode", "expected " + std::to_string(n) + " rows");
      LinearMap s(field, n, n);
      for (Index r = 0; r < n; ++r) {
        const Vector row = vector_of(rows[r], field, n, "antipode[" + std::to_string(r) + "]");
        for (Index c = 0; c < n; ++c) s.at(r, c) = row[c];
      }
      f.antipode = std::move(s);
    }

    if (doc.contains("actions")) {
      const json& list = array_at(doc, "actions", "");
      for (std::size_t a = 0; a < list.size(); ++a) {
        const std::string w = "actions[" + std::to_string(a) + "]";
        const json& blk = list[a];
        allow_keys(blk, {"name", "side", "actor_dim", "space_dim", "table"},
                   {"name", "side", "actor_dim", "space_dim", "table"}, w);
        const Index ad = to_dim(blk.at("actor_dim"), w + ".actor_dim");
        const Index sd = to_dim(blk.at("space_dim"), w + ".space_dim");
        f.actions.push_back({name_of(blk.at("name"), w + ".name"),
                             ActionData::make(side_of(blk.at("side"), w + ".side"),
                                              table_of(blk.at("table"), field, ad, sd, sd, w + ".table"))});
      }
    }

    if (doc.contains("coactions")) {
      const json& list = array_at(doc, "coactions", "");
      for (std::size_t a = 0; a < list.size(); ++a) {
        const std::string w = "coactions[" + std::to_string(a) + "]";
        const json& blk = list[a];
        allow_keys(blk, {"name", "side", "coalgebra_dim", "space_dim", "map"},
                   {"name", "side", "coalgebra_dim", "space_dim", "map"}, w);
        f.coactions.push_back(
            {name_of(blk.at("name"), w + ".name"),
             coaction_of(blk.at("map"), side_of(blk.at("side"), w + ".side"), field,
                         to_dim(blk.at("coalgebra_dim"), w + ".coalgebra_dim"),
                         to_dim(blk.at("space_dim"), w + ".space_dim"), w + ".map")});
      }
    }

    if (doc.contains("module")) {
      const json& blk = doc.at("module");
      const std::initializer_list<std::string_view> keys = {"space_dim", "left_action", "right_action",
                                                            "left_coaction", "right_coaction"};
      allow_keys(blk, keys, keys, "module");
      if (!f.is_hopf()) bad("module", "a Hopf bimodule block needs comult, counit and antipode");
      HopfBimoduleData m;
      m.space_dim = to_dim(blk.at("space_dim"), "module.space_dim");
      m.left_act = ActionData::make(Side::left, table_of(blk.at("left_action"), field, n, m.space_dim,
                                                          m.space_dim, "module.left_action"));
      m.right_act = ActionData::make(Side::right, table_of(blk.at("right_action"), field, n, m.space_dim,
                                                            m.space_dim, "module.right_action"));
      m.left_co = coaction_of(blk.at("left_coaction"), Side::left, field, n, m.space_dim, "module.left_coaction");
      m.right_co =
          coaction_of(blk.at("right_coaction"), Side::right, field, n, m.space_dim, "module.right_coaction");
      f.module = std::move(m);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return f;
}

HopfFile HopfFile::read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string HopfFile::dump() const {
  json doc;
  doc["field"] = field_json(algebra.field);
  doc["dim"] = algebra.dim;
  doc["basis"] = algebra.labels;
  doc["mult"] = table_json(algebra.mult);
  doc["unit"] = scalars_json(algebra.unit);
  if (coalgebra) {
    const Index n = coalgebra->dim;
    json rows = json::array();
    for (Index i = 0; i < n; ++i) {
      for (const Term& t : coalgebra->comult.column(i)) {
        rows.push_back(json::array({i, t.index / n, t.index % n, t.coef.to_string()}));
      }
    }
    doc["comult"] = std::move(rows);
    doc["counit"] = scalars_json(coalgebra->counit);
    json s = json::array();
    for (Index r = 0; r < n; ++r) {
      json row = json::array();
      for (Index c = 0; c < n; ++c) row.push_back(antipode->at(r, c).to_string());
      s.push_back(std::move(row));
    }
    doc["antipode"] = std::move(s);
  }
  if (!actions.empty()) {
    json list = json::array();
    for (const NamedAction& a : actions) {
      list.push_back(json{{"name", a.name},
                          {"side", side_name(a.action.side)},
                          {"actor_dim", a.action.actor_dim()},
                          {"space_dim", a.action.space_dim()},
                          {"table", table_json(a.action.table)}});
    }
    doc["actions"] = std::move(list);
  }
  if (!coactions.empty()) {
    json list = json::array();
    for (const NamedCoaction& c : coactions) {
      list.push_back(json{{"name", c.name},
                          {"side", side_name(c.coaction.side)},
                          {"coalgebra_dim", c.coaction.coalgebra_dim},
                          {"space_dim", c.coaction.space_dim()},
                          {"map", coaction_json(c.coaction)}});
    }
    doc["coactions"] = std::move(list);
  }
  if (module) {
    doc["module"] = json{{"space_dim", module->space_dim},
                         {"left_action", table_json(module->left_act.table)},
                         {"right_action", table_json(module->right_act.table)},
                         {"left_coaction", coaction_json(module->left_co)},
                         {"right_coaction", coaction_json(module->right_co)}};
  }
  return pretty(doc);
}

void HopfFile::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << dump();
}

std::string dump_matrix(const LinearMap& m, std::string_view name) {
  json entries = json::array();
  for (Index r = 0; r < m.dst_dim(); ++r) {
    for (Index c = 0; c < m.src_dim(); ++c) {
      if (!m.at(r, c).is_zero()) entries.push_back(json::array({r, c, m.at(r, c).to_string()}));
    }
  }
  json doc;
  doc["name"] = std::string(name);
  doc["field"] = field_json(m.field());
  doc["src_dim"] = m.src_dim();
  doc["dst_dim"] = m.dst_dim();
  doc["entries"] = std::move(entries);
  return pretty(doc);
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hopf
