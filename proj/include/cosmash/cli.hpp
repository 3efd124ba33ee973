#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cosmash/comodules.hpp"
#include "cosmash/gallery.hpp"
#include "cosmash/report.hpp"
#include "cosmash/smashprod.hpp"

namespace cosmash::cli {

enum class LoadMode { Strict, Lenient };

/// Named objects from one structure file. All names share one namespace.
/// Strict loading raises AxiomError on the first invalid object; lenient
/// loading records the reports and raises only when a flagged object is used.
class StructureSet {
 public:
  FieldSpec field = FieldSpec::rationals();
  LoadMode mode = LoadMode::Strict;

  std::map<std::string, FiniteGroupTable> groups;
  std::map<std::string, CoalgebraPtr> coalgebras;
  std::map<std::string, HopfAlgebra> hopf;
  std::map<std::string, PairPtr> pairs;
  std::map<std::string, Comodule> comodules;
  std::map<std::string, std::string> comodule_over;
  std::map<std::string, CHComodule> ch_comodules;
  std::map<std::string, std::string> ch_pair;
  /// Axiom report of every object, keyed by name.
  std::map<std::string, Report> axioms;

  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;

  /// A coalgebra, the coalgebra of a Hopf algebra, or the smash coalgebra of a pair.
  CoalgebraPtr coalgebra(const std::string& name) const;
  const HopfAlgebra& hopf_algebra(const std::string& name) const;
  PairPtr pair(const std::string& name) const;
  /// The unique pair with the given C and H names.
  PairPtr pair_for(const std::string& c, const std::string& h) const;
  const SmashCoalgebra& smash(const std::string& pair_name) const;
  const Comodule& comodule(const std::string& name) const;
  const CHComodule& ch_comodule(const std::string& name) const;

  /// Registers an object, rejecting duplicate names. Used by the parser.
  void claim(const std::string& name, const std::string& where);
  void ensure_valid(const std::string& name) const;

 private:
  std::vector<std::string> claimed_;
  mutable std::map<std::string, SmashCoalgebra> smash_cache_;
  mutable std::map<std::string, CoalgebraPtr> hopf_coalgebra_cache_;
};

StructureSet parse_structure_text(std::string_view text, LoadMode mode = LoadMode::Strict,
                                  const std::string& source = "<input>");
StructureSet parse_structure_file(const std::string& path, LoadMode mode = LoadMode::Strict);

/// Canonical JSON text; parsing it yields identical structure constants.
std::string serialize(const StructureSet& s);
/// A structure file holding one coalgebra.
std::string serialize_coalgebra(const Coalgebra& c);

struct RunReport {
  std::string command;
  std::vector<Check> checks;
  std::map<std::string, std::vector<std::size_t>> tables;
  std::map<std::string, std::string> facts;
  std::optional<std::string> error;

  bool ok() const;
};

std::string render_text(const RunReport& r);
std::string render_json(const RunReport& r);

struct Invocation {
  RunReport report;
  std::string output;
  int status = 0;  // 0 iff no FAIL line; 1 failed checks; 2 errors and usage
};

/// Parses `args` (without the program name), runs the subcommand and renders
/// the report. Reads COSMASH_MAX_DIM from the environment.
Invocation run_command(const std::vector<std::string>& args);

}  // namespace cosmash::cli
