#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfxyz/hopf_bimodules.hpp"

namespace hopf {

struct NamedAction {
  std::string name;
  ActionData action;
};

struct NamedCoaction {
  std::string name;
  CoactionData coaction;
};

/// The JSON structure-constant document. Scalars are strings throughout.
///
///   {"field": "Q" | {"p": 5}, "dim": n, "basis": [...],
///    "mult": [[i, j, k, "s"]], "unit": ["s", ...],
///    "comult": [[i, j, k, "s"]], "counit": [...], "antipode": [["s", ...], ...],
///    "actions": [{"name", "side", "actor_dim", "space_dim", "table": [[i, j, k, "s"]]}],
///    "coactions": [{"name", "side", "coalgebra_dim", "space_dim", "map": [[j, c, k, "s"]]}],
///    "module": {"space_dim", "left_action", "right_action", "left_coaction", "right_coaction"}}
///
/// mult entries read e_i e_j += s e_k, comult entries Delta(e_i) += s e_j (x) e_k,
/// antipode rows are matrix rows. A coaction entry [j, c, k, s] puts s e_c (x) m_k
/// (left) or s m_k (x) e_c (right) into the coaction of m_j. The module block is a
/// Hopf bimodule over the dual of the file's Hopf algebra. comult, counit and
/// antipode come together or not at all.
struct HopfFile {
  AlgebraData algebra;
  std::optional<CoalgebraData> coalgebra;
  std::optional<LinearMap> antipode;
  std::vector<NamedAction> actions;
  std::vector<NamedCoaction> coactions;
  std::optional<HopfBimoduleData> module;

  static HopfFile from(const AlgebraData& a);
  static HopfFile from(const HopfAlgebraData& h);

  bool is_hopf() const { return coalgebra.has_value(); }
  /// Throws InvalidInput for an algebra-only file.
  HopfAlgebraData hopf() const;

  /// Shapes and indices are validated; axioms are not. Throws ParseError.
  static HopfFile parse(std::string_view text);
  static HopfFile read(const std::filesystem::path& path);

  /// Canonical, deterministic serialization (sorted sparse entries, two-space indent).
  std::string dump() const;
  void write(const std::filesystem::path& path) const;
};

/// {"field", "src_dim", "dst_dim", "entries": [[r, c, "s"]]} with nonzero entries only.
std::string dump_matrix(const LinearMap& m, std::string_view name);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace hopf
