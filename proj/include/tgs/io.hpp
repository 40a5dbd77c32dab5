#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "tgs/apps.hpp"
#include "tgs/core.hpp"
#include "tgs/decomposition.hpp"
#include "tgs/enumeration.hpp"
#include "tgs/ideals.hpp"
#include "tgs/radical.hpp"
#include "tgs/spectrum.hpp"

namespace tgs {

using Json = nlohmann::json;

inline constexpr std::string_view kToolName = "tgs";
inline constexpr std::string_view kToolVersion = "0.3.0";

// Structure files:
//   {"n": 2, "gamma": ["1"], "add": [[0,1],[1,1]], "ops": {"1": [n^3 values]}}
// "ops" values may also be nested [a][b][c] arrays.
Json structure_to_json(const TernaryGammaSemiring& ts);
TernaryGammaSemiring structure_from_json(const Json& j);  // throws InvalidStructure
TernaryGammaSemiring load_structure(const std::string& path);
void save_structure(const TernaryGammaSemiring& ts, const std::string& path);

// JSON Lines: one header object, then one object per entry in catalog order.
void write_catalog(const Catalog& catalog, std::ostream& out);
// Recomputes each entry's canonical form and rejects mismatches.
Catalog read_catalog(std::istream& in);
Catalog load_catalog(const std::string& path);

Json to_json(const AxiomReport& report);
Json to_json(const InvariantTuple& t);
Json to_json(const IdealSet& set);
Json to_json(const Congruence& rho);
Json to_json(const LatticeReport& lattice);
Json to_json(const IdealLattice& lattice);
Json to_json(const CongruenceLattice& lattice);
Json to_json(const CorrespondenceReport& report);
Json to_json(const RadicalResult& r);
Json to_json(const RadNilReport& r);
Json to_json(const CancellationReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const IrreducibilityReport& r);
Json to_json(const SubdirectDecomposition& d);
Json to_json(const WedderburnReport& r);
Json to_json(const PatternLabel& p);
Json to_json(const SemisimplicityReadings& r);
Json to_json(const SpectrumPoset& s);
Json to_json(const DimensionReport& r);
Json to_json(const AvoidanceReport& r);
Json to_json(const ContractionReport& r);
Json to_json(const GammaLinearCode& code);
Json to_json(const WeightReport& r);
Json to_json(const CheckCodeReport& r);
Json to_json(const SBoxProfile& p);
Json to_json(const LiftReport& r);
Json to_json(const FuzzyReport& r);
Json to_json(const ChainReconstruction& r);
Json to_json(const PathReport& r);
Json to_json(const PathCrossCheck& c);

// RFC 4180: fields with commas, quotes or line breaks are quoted, quotes doubled.
std::string csv_field(std::string_view field);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

// Hasse diagrams in Graphviz DOT.
std::string ideal_lattice_dot(const IdealLattice& lattice);
std::string congruence_lattice_dot(const CongruenceLattice& lattice);
std::string prime_dag_dot(const SpectrumPoset& spectrum);

std::string format_set(IdealSet set);          // "{0,2}"
std::string format_partition(const Congruence& rho);  // "{0,1}{2}"

}  // namespace tgs
