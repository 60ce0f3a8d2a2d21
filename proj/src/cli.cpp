#include "hopfxyz/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hopfxyz/catalog.hpp"
#include "hopfxyz/errors.hpp"
#include "hopfxyz/io.hpp"

namespace hopf {

namespace {

struct Options {
  std::uint64_t seed = 0;
  std::string file;
  std::string catalog;
  std::string construction;
  std::string kind;
  std::string mode;
  std::string module;
  std::string out_path;
  Index cap = kDefaultMaterializeCap;
};

class Reporter {
 public:
  explicit Reporter(std::ostream& out) : out_(out) {}

  void line(const std::string& s) { out_ << s << '\n'; }

  void section(const std::string& name, const CheckReport& r) {
    out_ << name << ": ";
    if (r.passed()) {
      out_ << "pass (" << r.checked() << " checks)\n";
    } else {
      out_ << "FAIL (" << r.violation_count() << " of " << r.checked() << " checks)\n";
      witness(r);
    }
    failed_ |= !r.passed();
  }

  void witness(const CheckReport& r) {
    failed_ = true;
    const Violation& v = r.violations().front();
    out_ << "  axiom: " << v.axiom << "\n  indices: (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) out_ << (i ? ", " : "") << v.witness[i];
    out_ << ")\n  lhs: " << to_string(v.lhs) << "\n  rhs: " << to_string(v.rhs) << '\n';
    std::vector<std::string> names;
    for (const Violation& w : r.violations()) {
      if (std::find(names.begin(), names.end(), w.axiom) == names.end()) names.push_back(w.axiom);
    }
    if (names.size() > 1) {
      out_ << "  also failing:";
      for (std::size_t i = 1; i < names.size(); ++i) out_ << (i > 1 ? "; " : " ") << names[i];
      out_ << '\n';
    }
  }

  bool failed() const { return failed_; }
  int code() const { return failed_ ? kExitViolation : kExitPass; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_bytes(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << bytes;
}

CheckMode parse_mode(const std::string& text, std::uint64_t seed) {
  if (text == "exhaustive") return CheckMode::exhaustive();
  if (text.rfind("random:", 0) == 0) {
    const std::string n = text.substr(7);
    if (!n.empty() && n.size() <= 9 && n.find_first_not_of("0123456789") == std::string::npos && std::stoul(n) > 0) {
      return CheckMode::random(std::stoul(n), seed);
    }
  }
  throw InvalidInput("mode must be \"exhaustive\" or \"random:N\" with N >= 1");
}

IsoKind parse_iso_kind(const std::string& s) {
  static const std::map<std::string, IsoKind> kinds = {
      {"phi", IsoKind::phi},   {"phi_inv", IsoKind::phi_inv},   {"alpha", IsoKind::alpha}, {"alpha_inv", IsoKind::alpha_inv},
      {"beta", IsoKind::beta}, {"beta_inv", IsoKind::beta_inv}, {"f", IsoKind::f_map},     {"f_inv", IsoKind::f_map_inv}};
  const auto it = kinds.find(s);
  if (it == kinds.end()) throw InvalidInput("unknown iso kind \"" + s + "\"");
  return it->second;
}

IsoKind inverse_kind(IsoKind k) {
  switch (k) {
    case IsoKind::phi: return IsoKind::phi_inv;
    case IsoKind::phi_inv: return IsoKind::phi;
    case IsoKind::alpha: return IsoKind::alpha_inv;
    case IsoKind::alpha_inv: return IsoKind::alpha;
    case IsoKind::beta: return IsoKind::beta_inv;
    case IsoKind::beta_inv: return IsoKind::beta;
    case IsoKind::f_map: return IsoKind::f_map_inv;
    case IsoKind::f_map_inv: return IsoKind::f_map;
  }
  return k;
}

AlgebraHandle handle_for(const HopfTriple& t, Provenance p) {
  switch (p) {
    case Provenance::X: return build_X(t);
    case Provenance::Y: return build_Y(t);
    case Provenance::Z: return build_Z(t);
    case Provenance::two_sided: return build_construction(t, Construction::two_sided);
    case Provenance::diagonal: return build_construction(t, Construction::diagonal);
    default: throw InvalidInput("no algebra for provenance " + to_string(p));
  }
}

std::string field_line(FieldSpec f) { return "field: " + f.to_string(); }

// Hopf input every construction depends on; nullopt after printing the witness.
std::optional<HopfAlgebraData> verified_hopf(const HopfFile& file, std::uint64_t seed, Reporter& rep) {
  const HopfAlgebraData h = file.hopf();
  rep.line(field_line(h.field()));
  rep.line("dim H: " + std::to_string(h.dim()));
  const CheckReport r = check_hopf_axioms(h, default_axiom_mode(h.dim(), seed));
  rep.section("hopf axioms", r);
  if (!r.passed()) return std::nullopt;
  return h;
}

int cmd_check(const Options& o, Reporter& rep) {
  const HopfFile file = HopfFile::read(o.file);
  const Index n = file.algebra.dim;
  rep.line(field_line(file.algebra.field));
  rep.line("dim: " + std::to_string(n));
  const CheckMode mode = default_axiom_mode(n, o.seed);
  rep.line("mode: " + mode.to_string());
  std::optional<HopfAlgebraData> h;
  if (file.is_hopf()) {
    h = file.hopf();
    rep.section("hopf axioms", check_hopf_axioms(*h, mode));
  } else {
    rep.section("algebra axioms", check_algebra_axioms(file.algebra, mode));
  }
  for (const NamedAction& a : file.actions) {
    if (a.action.actor_dim() != n) throw InvalidInput("action \"" + a.name + "\" is not by the file's algebra");
    rep.section("action " + a.name, check_module_axioms(file.algebra, a.action, mode));
  }
  for (const NamedCoaction& c : file.coactions) {
    if (!h || c.coaction.coalgebra_dim != n) {
      throw InvalidInput("coaction \"" + c.name + "\" is not by the file's coalgebra");
    }
    rep.section("coaction " + c.name, check_comodule_axioms(h->coalgebra, c.coaction));
  }
  if (file.module) {
    if (rep.failed()) {
      rep.line("hopf bimodule: skipped");
    } else {
      rep.section("hopf bimodule", check_hopf_bimodule(*file.module, *h));
    }
  }
  return rep.code();
}

int cmd_describe(const Options& o, Reporter& rep) {
  const CatalogSpec spec = CatalogSpec::parse(o.catalog);
  const HopfAlgebraData h = catalog_hopf(spec);
  rep.line("catalog: " + spec.to_string());
  rep.line(field_line(h.field()));
  rep.line("dim: " + std::to_string(h.dim()));
  std::string basis = "basis:";
  for (const std::string& l : h.labels()) basis += " " + l;
  rep.line(basis);
  rep.line("commutative: " + yes_no(is_commutative(h.algebra)));
  rep.line("cocommutative: " + yes_no(is_cocommutative(h.coalgebra)));
  const LinearMap s2 = kernels::serial::compose(h.antipode, h.antipode);
  rep.line("S^2 = id: " + yes_no(s2 == LinearMap::identity(h.field(), h.dim())));
  rep.section("hopf axioms", check_hopf_axioms(h, default_axiom_mode(h.dim(), o.seed)));
  if (!o.out_path.empty()) {
    HopfFile::from(h).write(o.out_path);
    rep.line("wrote " + o.out_path);
  }
  return rep.code();
}

int cmd_build(const Options& o, Reporter& rep) {
  const Construction c = parse_construction(o.construction);
  const std::string bytes = read_bytes(o.file);
  const auto h = verified_hopf(HopfFile::parse(bytes), o.seed, rep);
  if (!h) return rep.code();
  const AlgebraHandle a = build_construction(standard_triple(*h), c);
  rep.line("construction: " + to_string(c));
  rep.line("dim: " + std::to_string(a.dim()));
  const CheckMode mode = default_axiom_mode(a.dim(), o.seed);
  rep.line("mode: " + mode.to_string());
  rep.section("algebra axioms", check_algebra_axioms(a, mode));

  std::string doc;
  if (a.dim() <= o.cap) {
    doc = HopfFile::from(materialize(a, o.cap)).dump();
    rep.line("materialized: yes");
  } else {
    std::ostringstream d;
    d << "{\n  \"construction\": \"" << to_string(c) << "\",\n  \"dim\": " << a.dim()
      << ",\n  \"input_hash\": \"fnv1a64:" << fnv1a_hex(bytes) << "\",\n  \"materialized\": false\n}\n";
    doc = d.str();
    rep.line("materialized: no (dim " + std::to_string(a.dim()) + " > cap " + std::to_string(o.cap) + ")");
  }
  if (o.out_path.empty()) {
    rep.line("");
    rep.line(doc.substr(0, doc.size() - 1));
  } else {
    write_bytes(o.out_path, doc);
    rep.line("wrote " + o.out_path);
  }
  return rep.code();
}

int cmd_iso(const Options& o, Reporter& rep) {
  const IsoKind kind = parse_iso_kind(o.kind);
  const auto h = verified_hopf(HopfFile::read(o.file), o.seed, rep);
  if (!h) return rep.code();
  const HopfTriple t = standard_triple(*h);
  const LinearMap m = build_iso(kind, t);
  const LinearMap inv = build_iso(inverse_kind(kind), t);
  const IsoEndpoints ep = endpoints(kind);
  const CheckMode mode = o.mode.empty() ? default_morphism_mode(m.src_dim(), o.seed) : parse_mode(o.mode, o.seed);

  rep.line("iso: " + to_string(kind) + " (" + to_string(ep.source) + " -> " + to_string(ep.target) + "), dim " +
           std::to_string(m.src_dim()));
  rep.line("mode: " + mode.to_string());
  const CheckReport morph = verify_algebra_morphism(m, handle_for(t, ep.source), handle_for(t, ep.target), mode);
  const CheckReport inverse = verify_mutually_inverse(m, inv);
  const std::size_t pairs = morph.checked() - 1;  // one unit check
  std::ostringstream line;
  line << "morphism: ";
  if (morph.passed()) {
    line << "pass (" << pairs << " pairs)";
  } else {
    line << "FAIL (" << morph.violation_count() << " violations in " << pairs << " pairs)";
  }
  line << ", inverse: " << (inverse.passed() ? "pass" : "FAIL");
  rep.line(line.str());
  if (!morph.passed()) rep.witness(morph);
  if (!inverse.passed()) rep.witness(inverse);
  if (kind == IsoKind::beta || kind == IsoKind::beta_inv) {
    rep.section("beta = alpha phi", composition_identity(t));
  }
  if (!o.out_path.empty()) {
    write_bytes(o.out_path, dump_matrix(m, to_string(kind)));
    rep.line("wrote " + o.out_path);
  }
  return rep.code();
}

int cmd_bimodule(const Options& o, Reporter& rep) {
  const HopfFile file = HopfFile::read(o.file);
  const auto h = verified_hopf(file, o.seed, rep);
  if (!h) return rep.code();
  HopfBimoduleData m;
  if (!o.module.empty()) {
    const BimoduleKind kind = BimoduleKind::parse(o.module);
    m = example_bimodule(*h, kind);
    rep.line("module: " + kind.to_string());
  } else if (file.module) {
    m = *file.module;
    rep.line("module: from file");
  } else {
    throw InvalidInput("no --module given and the file has no module block");
  }
  rep.line("dim M: " + std::to_string(m.space_dim));

  const CheckReport axioms = check_hopf_bimodule(m, *h);
  rep.section("hopf bimodule axioms", axioms);
  if (!axioms.passed()) return rep.code();

  const HopfTriple t = standard_triple(*h);
  const CheckMode mode = default_correspondence_mode(h->dim(), o.seed);
  rep.line("mode: " + mode.to_string());
  const std::pair<ActingAlgebra, Construction> acting[] = {{ActingAlgebra::X, Construction::X},
                                                           {ActingAlgebra::Y, Construction::Y},
                                                           {ActingAlgebra::Z, Construction::Z},
                                                           {ActingAlgebra::left_smash, Construction::left_smash},
                                                           {ActingAlgebra::right_smash, Construction::right_smash}};
  for (const auto& [which, construction] : acting) {
    rep.section("module over " + to_string(which),
                check_module_axioms(build_construction(t, construction), derived_action(m, t, which), mode));
  }
  rep.section("X, Y, Z actions correspond", verify_action_correspondence(m, *h, mode));
  rep.section("two-sided and diagonal actions correspond", verify_f_correspondence(m, *h, mode));
  for (const auto& [name, r] :
       triple_module_sections(triple_module_from_bimodule(m, *h), t.a, t.k, t.b, t.a_act, t.b_act, mode)) {
    rep.section("triple " + name, r);
  }
  return rep.code();
}

int cmd_semisimple(const Options& o, Reporter& rep) {
  const HopfFile file = HopfFile::read(o.file);
  const AlgebraData& a = file.algebra;
  if (!a.field.is_rational()) throw InvalidInput("the trace-form criterion needs characteristic 0");
  rep.line("dim: " + std::to_string(a.dim));
  const CheckReport r = check_algebra_axioms(a, default_axiom_mode(a.dim, o.seed));
  rep.section("algebra axioms", r);
  if (!r.passed()) return rep.code();
  const std::size_t rad = trace_form_radical(a).size();
  rep.line("radical dimension: " + std::to_string(rad));
  rep.line("semisimple: " + yes_no(rad == 0));
  return rep.code();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Crossed products of Hopf algebras, their isomorphisms and Hopf bimodules", "hopfxyz"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "seed for randomized checks")->default_val(0);

  auto* check = app.add_subcommand("check", "verify the axioms of every structure in a file");
  check->add_option("file", o.file)->required();

  auto* describe = app.add_subcommand("describe", "show a catalog Hopf algebra");
  describe->add_option("--catalog", o.catalog, "cyclic:N, dual_cyclic:N, sweedler4, taft:N:P")->required();
  describe->add_option("--out", o.out_path, "write the algebra as JSON");

  auto* build = app.add_subcommand("build", "build a crossed product of the standard triple of H");
  build->add_option("--construction", o.construction, "X, Y, Z, left-smash, right-smash, two-sided, diagonal")
      ->required();
  build->add_option("--input", o.file)->required();
  build->add_option("--materialize-cap", o.cap)->check(CLI::PositiveNumber);
  build->add_option("--out", o.out_path);

  auto* iso = app.add_subcommand("iso", "certify an isomorphism and its inverse");
  iso->add_option("--kind", o.kind, "phi, alpha, beta, f, or one of them with _inv")->required();
  iso->add_option("--input", o.file)->required();
  iso->add_option("--mode", o.mode, "exhaustive or random:N");
  iso->add_option("--out", o.out_path, "write the matrix as JSON");

  auto* bimodule = app.add_subcommand("bimodule", "Hopf bimodule axioms and the module correspondences");
  bimodule->add_option("--input", o.file)->required();
  bimodule->add_option("--module", o.module, "regular or free:N");

  auto* semisimple = app.add_subcommand("semisimple", "dimension of the trace-form radical");
  semisimple->add_option("file", o.file)->required();

  std::vector<const char*> argv{"hopfxyz"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitInput;
  }

  Reporter rep(out);
  try {
    if (*check) return cmd_check(o, rep);
    if (*describe) return cmd_describe(o, rep);
    if (*build) return cmd_build(o, rep);
    if (*iso) return cmd_iso(o, rep);
    if (*bimodule) return cmd_bimodule(o, rep);
    return cmd_semisimple(o, rep);
  } catch (const Error& e) {
    out.flush();
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace hopf
