#include "tgs/io.hpp"

#include <fstream>
#include <sstream>

namespace tgs {

namespace {

Json vec(const std::vector<Element>& v) {
  Json out = Json::array();
  for (auto e : v) out.push_back(int(e));
  return out;
}

template <class T>
Json opt(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json matrix(const PathMatrix& m, std::size_t v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < v; ++j)
      row.push_back(m[i * v + j] ? Json(int(*m[i * v + j])) : Json(nullptr));
    out.push_back(row);
  }
  return out;
}

Element element_at(const Json& j, std::size_t n, const char* what) {
  if (!j.is_number_integer()) throw InvalidStructure(std::string(what) + ": expected an integer");
  const auto v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= n)
    throw InvalidStructure(std::string(what) + ": value " + std::to_string(v) + " out of range");
  return static_cast<Element>(v);
}

void flatten(const Json& j, std::size_t n, std::size_t depth, std::vector<Element>& out,
             const char* what) {
  if (depth == 0) {
    out.push_back(element_at(j, n, what));
    return;
  }
  if (!j.is_array() || j.size() != n)
    throw InvalidStructure(std::string(what) + ": expected an array of length " + std::to_string(n));
  for (const auto& x : j) flatten(x, n, depth - 1, out, what);
}

}  // namespace

// ---------------------------------------------------------------------------
// Structures

Json structure_to_json(const TernaryGammaSemiring& ts) {
  const auto n = ts.order();
  Json add = Json::array();
  for (std::size_t a = 0; a < n; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < n; ++b) row.push_back(int(ts.add(a, b)));
    add.push_back(row);
  }
  Json ops = Json::object();
  for (std::size_t g = 0; g < ts.gamma_size(); ++g) {
    Json flat = Json::array();
    for (auto e : ts.op_table(g)) flat.push_back(int(e));
    ops[ts.gamma()[g]] = flat;
  }
  return Json{{"n", n}, {"gamma", ts.gamma()}, {"add", add}, {"ops", ops}};
}

TernaryGammaSemiring structure_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidStructure("structure: expected a JSON object");
  for (const char* key : {"n", "gamma", "add", "ops"})
    if (!j.contains(key)) throw InvalidStructure(std::string("structure: missing '") + key + "'");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1 ||
      j["n"].get<long long>() > static_cast<long long>(kMaxOrder))
    throw InvalidStructure("structure: 'n' must be an integer in [1, 255]");
  const auto n = j["n"].get<std::size_t>();

  if (!j["gamma"].is_array() || j["gamma"].empty())
    throw InvalidStructure("structure: 'gamma' must be a nonempty array of labels");
  std::vector<std::string> gamma;
  for (const auto& label : j["gamma"]) {
    if (!label.is_string()) throw InvalidStructure("structure: gamma labels must be strings");
    gamma.push_back(label.get<std::string>());
  }

  std::vector<Element> add;
  const auto& jadd = j["add"];
  if (jadd.is_array() && jadd.size() == n * n && !jadd[0].is_array())
    flatten(jadd, n * n, 1, add, "add");  // flat form
  else
    flatten(jadd, n, 2, add, "add");
  for (auto& e : add)
    if (e >= n) throw InvalidStructure("add: value out of range");

  const auto& jops = j["ops"];
  if (!jops.is_object()) throw InvalidStructure("structure: 'ops' must be an object keyed by label");
  if (jops.size() != gamma.size())
    throw InvalidStructure("structure: 'ops' and 'gamma' list different labels");
  std::vector<std::vector<Element>> ops;
  for (const auto& label : gamma) {
    if (!jops.contains(label)) throw InvalidStructure("structure: no table for label '" + label + "'");
    const auto& t = jops[label];
    std::vector<Element> table;
    if (t.is_array() && t.size() == n * n * n && !t[0].is_array()) {
      for (const auto& x : t) table.push_back(element_at(x, n, "ops"));
    } else {
      flatten(t, n, 3, table, "ops");
    }
    ops.push_back(std::move(table));
  }
  return TernaryGammaSemiring(n, std::move(gamma), std::move(add), std::move(ops));
}

TernaryGammaSemiring load_structure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidStructure("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw InvalidStructure(path + ": " + e.what());
  }
  return structure_from_json(j);
}

void save_structure(const TernaryGammaSemiring& ts, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << structure_to_json(ts).dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Catalogs

void write_catalog(const Catalog& catalog, std::ostream& out) {
  Json header{{"kind", "header"},
              {"tool", kToolName},
              {"version", kToolVersion},
              {"n", catalog.order},
              {"m", catalog.gamma_size},
              {"axiom_mode", catalog.mode.name()},
              {"permute_gamma", catalog.permute_gamma},
              {"additive_reducts", catalog.additive_reducts},
              {"entries", catalog.entries.size()}};
  out << header.dump() << '\n';
  for (const auto& e : catalog.entries) {
    Json line{{"kind", "entry"},
              {"canonical", e.canonical.hex()},
              {"structure", structure_to_json(e.structure)},
              {"invariants", e.invariants.as_array()},
              {"axiom_mode", e.mode.name()},
              {"branch", e.branch}};
    out << line.dump() << '\n';
  }
}

Catalog read_catalog(std::istream& in) {
  Catalog c;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t declared = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw InvalidStructure("catalog line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      if (!have_header) {
        if (j.value("kind", "") != "header")
          throw InvalidStructure("catalog: first line must be the header");
        c.order = j.at("n").get<std::size_t>();
        c.gamma_size = j.at("m").get<std::size_t>();
        c.mode = AxiomMode::parse(j.at("axiom_mode").get<std::string>());
        c.permute_gamma = j.at("permute_gamma").get<bool>();
        c.additive_reducts = j.at("additive_reducts").get<std::size_t>();
        declared = j.at("entries").get<std::size_t>();
        have_header = true;
        continue;
      }
      auto ts = structure_from_json(j.at("structure"));
      auto form = canonical_form(ts, c.permute_gamma);
      if (form.hex() != j.at("canonical").get<std::string>())
        throw InvalidStructure("catalog line " + std::to_string(line_no) +
                               ": canonical form does not match the structure");
      auto inv = j.at("invariants").get<std::array<std::size_t, 6>>();
      InvariantTuple t{inv[0], inv[1], inv[2], inv[3], inv[4], inv[5]};
      c.entries.push_back(CatalogEntry{std::move(form), std::move(ts), t,
                                       AxiomMode::parse(j.at("axiom_mode").get<std::string>()),
                                       j.at("branch").get<std::string>()});
    } catch (const Json::exception& e) {
      throw InvalidStructure("catalog line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) throw InvalidStructure("catalog: empty input");
  if (declared != c.entries.size())
    throw InvalidStructure("catalog: header declares " + std::to_string(declared) +
                           " entries, found " + std::to_string(c.entries.size()));
  return c;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidStructure("cannot open " + path);
  return read_catalog(in);
}

// ---------------------------------------------------------------------------
// Reports

std::string format_set(IdealSet set) {
  std::string out = "{";
  bool first = true;
  for (auto e : set.elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string format_partition(const Congruence& rho) {
  std::string out;
  const auto& rep = rho.representatives();
  for (std::size_t r = 0; r < rep.size(); ++r) {
    if (rep[r] != r) continue;
    out += "{";
    bool first = true;
    for (std::size_t a = 0; a < rep.size(); ++a)
      if (rep[a] == r) {
        if (!first) out += ",";
        out += std::to_string(a);
        first = false;
      }
    out += "}";
  }
  return out;
}

Json to_json(const IdealSet& set) { return vec(set.elements()); }

Json to_json(const Congruence& rho) {
  Json blocks = Json::array();
  const auto& rep = rho.representatives();
  for (std::size_t r = 0; r < rep.size(); ++r) {
    if (rep[r] != r) continue;
    Json block = Json::array();
    for (std::size_t a = 0; a < rep.size(); ++a)
      if (rep[a] == r) block.push_back(a);
    blocks.push_back(block);
  }
  return blocks;
}

Json to_json(const AxiomReport& report) {
  Json results = Json::array();
  for (const auto& r : report.results) {
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses)
      witnesses.push_back(Json{{"args", vec(w.args)},
                               {"gammas", w.gammas},
                               {"variant", w.variant},
                               {"lhs", int(w.lhs)},
                               {"rhs", int(w.rhs)}});
    results.push_back(Json{{"axiom", axiom_name(r.axiom)},
                           {"pass", r.pass},
                           {"violations", r.violations},
                           {"witnesses", witnesses}});
  }
  return Json{{"axiom_mode", report.mode.name()}, {"all_pass", report.all_pass()}, {"results", results}};
}

Json to_json(const InvariantTuple& t) {
  return Json{{"order", t.order},       {"gamma_size", t.gamma_size},
              {"ideals", t.ideals},     {"congruences", t.congruences},
              {"radical_nonzero", t.radical_nonzero}, {"nil_nonzero", t.nil_nonzero}};
}

Json to_json(const LatticeReport& l) {
  auto witness = [](const std::optional<LatticeWitness>& w) {
    return w ? Json{w->x, w->y, w->z} : Json(nullptr);
  };
  Json covers = Json::array();
  for (auto [lo, hi] : l.covers()) covers.push_back(Json{lo, hi});
  return Json{{"size", l.size},
              {"bottom", l.bottom},
              {"top", l.top},
              {"covers", covers},
              {"modular", l.is_modular},
              {"modular_witness", witness(l.modular_witness)},
              {"distributive", l.is_distributive},
              {"distributive_witness", witness(l.distributive_witness)}};
}

Json to_json(const IdealLattice& lattice) {
  Json ideals = Json::array();
  for (auto i : lattice.ideals) ideals.push_back(to_json(i));
  return Json{{"ideals", ideals}, {"lattice", to_json(lattice.lattice)}};
}

Json to_json(const CongruenceLattice& lattice) {
  Json con = Json::array();
  for (const auto& c : lattice.congruences) con.push_back(to_json(c));
  return Json{{"congruences", con}, {"lattice", to_json(lattice.lattice)}};
}

Json to_json(const CorrespondenceReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json pairs = Json::array();
    for (std::size_t a = 0; a < e.relation.n; ++a)
      for (std::size_t b = 0; b < e.relation.n; ++b)
        if (e.relation.related(a, b)) pairs.push_back(Json{a, b});
    entries.push_back(Json{{"ideal", to_json(e.ideal)},
                           {"relation", pairs},
                           {"reflexive", e.reflexive},
                           {"symmetric", e.symmetric},
                           {"transitive", e.transitive},
                           {"congruence", e.is_congruence}});
  }
  auto pair = [](const std::optional<std::pair<std::size_t, std::size_t>>& p) {
    return p ? Json{p->first, p->second} : Json(nullptr);
  };
  return Json{{"entries", entries},
              {"injective", report.injective},
              {"injective_witness", pair(report.injective_witness)},
              {"order_reversing", report.order_reversing},
              {"order_witness", pair(report.order_witness)},
              {"surjective", report.surjective},
              {"surjective_witness", opt(report.surjective_witness)},
              {"bijective", report.bijective()}};
}

Json to_json(const RadicalResult& r) {
  Json primes = Json::array();
  for (auto p : r.primes) primes.push_back(to_json(p));
  return Json{{"primes", primes}, {"radical", to_json(r.radical)}, {"semiprime", r.semiprime}};
}

Json to_json(const RadNilReport& r) {
  return Json{{"radical", to_json(r.radical)},
              {"nil", to_json(r.nil)},
              {"equal", r.equal},
              {"only_in_radical", vec(r.only_in_radical)},
              {"only_in_nil", vec(r.only_in_nil)}};
}

Json to_json(const CancellationReport& r) {
  Json witness = nullptr;
  if (r.witness)
    witness = Json{{"gamma", r.witness->gamma},
                   {"args", {int(r.witness->a), int(r.witness->b), int(r.witness->c), int(r.witness->d)}}};
  return Json{{"quotient_order", r.quotient_order},
              {"cancellative", r.cancellative},
              {"witness", witness},
              {"quotient_semiprime", r.quotient_semiprime},
              {"quotient_radical", to_json(r.quotient_radical)}};
}

Json to_json(const IdentityReport& r) {
  const auto& l = r.lemma1;
  return Json{{"absorbing_zeros", to_json(r.absorbing_zeros)},
              {"units", to_json(r.units)},
              {"idempotent_gammas", l.idempotent_gammas},
              {"additive_idempotent", l.additive_idempotent},
              {"idempotence_witness",
               l.idempotence_witness ? Json(int(*l.idempotence_witness)) : Json(nullptr)},
              {"implication_holds", l.implication_holds}};
}

Json to_json(const IrreducibilityReport& r) {
  return Json{{"trivial", r.trivial},
              {"subdirectly_irreducible", r.irreducible},
              {"monolith", r.monolith ? to_json(*r.monolith) : Json(nullptr)}};
}

Json to_json(const SubdirectDecomposition& d) {
  Json factors = Json::array();
  for (const auto& f : d.factors)
    factors.push_back(Json{{"congruence", to_json(f.congruence)},
                           {"order", f.structure.order()},
                           {"subdirectly_irreducible", f.irreducible},
                           {"simple", f.simple},
                           {"structure", structure_to_json(f.structure)}});
  Json embedding = Json::array();
  for (const auto& image : d.embedding) embedding.push_back(vec(image));
  return Json{{"strategy", strategy_name(d.strategy)},
              {"factors", factors},
              {"embedding", embedding},
              {"injective", d.injective},
              {"collision", d.collision ? Json{int(d.collision->first), int(d.collision->second)}
                                        : Json(nullptr)},
              {"kernel", to_json(d.kernel)}};
}

Json to_json(const WedderburnReport& r) {
  return Json{{"radical", to_json(r.radical)},
              {"radical_order", r.radical_order},
              {"quotient_order", r.quotient_order},
              {"isomorphism", verdict_name(r.isomorphism)},
              {"isomorphism_map", r.isomorphism_map ? vec(*r.isomorphism_map) : Json(nullptr)},
              {"failure", r.failure},
              {"ideals", r.ideals},
              {"radical_ideals", r.radical_ideals},
              {"quotient_ideals", r.quotient_ideals},
              {"lattice_factorization", verdict_name(r.lattice_factorization)}};
}

Json to_json(const PatternLabel& p) {
  Json dump = Json::array();
  for (const auto& c : p.congruence_dump) dump.push_back(to_json(c));
  return Json{{"label", pattern_name(p.label)},
              {"congruences", p.congruences},
              {"ideals", p.ideals},
              {"congruence_simple", p.congruence_simple},
              {"ideal_simple", p.ideal_simple},
              {"idempotent_boolean", p.idempotent_boolean},
              {"subdirectly_irreducible", p.subdirectly_irreducible},
              {"congruence_dump", dump}};
}

Json to_json(const SemisimplicityReadings& r) {
  return Json{{"factors_simple", r.factors_simple}, {"semiprime", r.semiprime}, {"agree", r.agree()}};
}

namespace {

Json prime_set(const SpectrumPoset& s, PrimeSet x) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.primes.size(); ++i)
    if ((x >> i) & 1U) out.push_back(i);
  return out;
}

}  // namespace

Json to_json(const SpectrumPoset& s) {
  Json primes = Json::array();
  for (auto p : s.primes) primes.push_back(to_json(p));
  Json inclusions = Json::array();
  for (auto [lo, hi] : s.inclusions) inclusions.push_back(Json{lo, hi});
  Json closed = Json::array();
  for (const auto& c : s.closed_sets)
    closed.push_back(Json{{"primes", prime_set(s, c.primes)}, {"hull", to_json(c.ideal)}});
  Json radical_ideals = Json::array();
  for (auto r : s.radical_ideals) radical_ideals.push_back(to_json(r));
  return Json{{"primes", primes},
              {"empty_spectrum", s.empty_spectrum()},
              {"inclusions", inclusions},
              {"closed_sets", closed},
              {"topology",
               {{"contains_empty", s.contains_empty},
                {"contains_full", s.contains_full},
                {"closed_under_union", s.closed_under_union},
                {"closed_under_intersection", s.closed_under_intersection}}},
              {"v_order_reversing", s.v_order_reversing},
              {"radical_ideals", radical_ideals},
              {"galois",
               {{"ideal_closure", s.ideal_closure_ok},
                {"set_closure", s.set_closure_ok},
                {"anti_isomorphism", s.anti_isomorphism},
                {"witness", s.galois_witness ? prime_set(s, *s.galois_witness) : Json(nullptr)}}}};
}

Json to_json(const DimensionReport& r) {
  Json chain = Json::array();
  for (auto p : r.longest_chain) chain.push_back(to_json(p));
  Json qchain = Json::array();
  for (auto p : r.quotient_chain) qchain.push_back(to_json(p));
  return Json{{"dimension", r.dimension},
              {"empty_spectrum", r.dimension == kEmptySpectrumDimension},
              {"longest_chain", chain},
              {"quotient_dimension", r.quotient_dimension},
              {"quotient_zero_dimensional", r.quotient_zero_dimensional},
              {"quotient_chain", qchain}};
}

Json to_json(const AvoidanceReport& r) {
  Json counter = Json::array();
  for (const auto& c : r.counterexamples) {
    Json primes = Json::array();
    for (auto p : c.primes) primes.push_back(to_json(p));
    counter.push_back(Json{{"ideal", to_json(c.ideal)}, {"primes", primes}});
  }
  return Json{{"variant", avoidance_variant_name(r.variant)},
              {"max_subset", r.max_subset},
              {"cases", r.cases},
              {"passes", r.passes()},
              {"counterexamples", counter}};
}

Json to_json(const ContractionReport& r) {
  Json contractions = Json::array();
  for (const auto& c : r.contractions)
    contractions.push_back(Json{{"target_prime", to_json(c.target_prime)},
                                {"preimage", to_json(c.preimage)},
                                {"ideal", c.ideal},
                                {"prime", c.prime}});
  return Json{{"contractions", contractions},
              {"well_defined", r.well_defined},
              {"continuous", opt(r.continuous)},
              {"injective", r.injective},
              {"surjective", r.surjective}};
}

Json to_json(const GammaLinearCode& code) {
  Json words = Json::array();
  for (const auto& w : code.codewords) words.push_back(vec(w));
  return Json{{"length", code.length}, {"size", code.codewords.size()}, {"codewords", words}};
}

Json to_json(const WeightReport& r) {
  return Json{{"radical", to_json(r.radical)},
              {"quotient_order", r.quotient_order},
              {"projection_injective", r.projection_injective},
              {"plain_distribution", r.plain},
              {"coset_distribution", r.coset},
              {"projected_distribution", r.projected},
              {"plain_equal", r.plain_equal},
              {"coset_equal", r.coset_equal},
              {"plain_witness", r.plain_witness ? vec(*r.plain_witness) : Json(nullptr)},
              {"metric", r.group_metric ? "difference" : "sum"},
              {"minimum_distance", opt(r.minimum_distance)}};
}

namespace {

Json side_json(const SyndromeSide& s) {
  return Json{{"order", s.order},
              {"kernel", to_json(s.kernel)},
              {"syndrome_classes", s.classes},
              {"class_sizes", s.class_sizes},
              {"partition_ok", s.partition_ok},
              {"minimum_distance", opt(s.minimum_distance)}};
}

}  // namespace

Json to_json(const CheckCodeReport& r) {
  return Json{{"source", side_json(r.source)},
              {"quotient", side_json(r.quotient)},
              {"same_partition_size", r.same_partition_size},
              {"same_minimum_distance", r.same_minimum_distance}};
}

Json to_json(const SBoxProfile& p) {
  Json rows = Json::array();
  const auto n = p.order;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Json counts = Json::array();
        for (std::size_t d = 0; d < n; ++d) counts.push_back(p.count(a, b, c, d));
        rows.push_back(Json{{"input", {a, b, c}}, {"counts", counts}});
      }
  Json worst = nullptr;
  if (p.worst) worst = Json{int((*p.worst)[0]), int((*p.worst)[1]), int((*p.worst)[2]), int((*p.worst)[3])};
  return Json{{"order", n},
              {"gamma", p.gamma},
              {"uniformity", p.uniformity},
              {"worst", worst},
              {"group_reduct", p.group_reduct},
              {"partition_property", p.partition_property},
              {"max_row_sum", p.max_row_sum},
              {"table", rows}};
}

Json to_json(const LiftReport& r) {
  return Json{{"source", to_json(r.source)},
              {"quotient", to_json(r.quotient)},
              {"same_uniformity", r.same_uniformity}};
}

namespace {

Json cut_json(const LevelCut& c) {
  return Json{{"level", format_grade(c.level)}, {"members", to_json(c.members)}, {"ideal", c.ideal}};
}

}  // namespace

Json to_json(const FuzzyReport& r) {
  Json witness = nullptr;
  if (r.witness)
    witness = Json{{"condition", r.witness->condition},
                   {"args", vec(r.witness->args)},
                   {"gamma", r.witness->gamma}};
  Json cuts = Json::array();
  for (const auto& c : r.cuts) cuts.push_back(cut_json(c));
  return Json{{"fuzzy_ideal", r.fuzzy_ideal},
              {"witness", witness},
              {"cuts", cuts},
              {"support", cut_json(r.support)},
              {"all_cuts_ideals", r.all_cuts_ideals}};
}

Json to_json(const ChainReconstruction& r) {
  Json grades = Json::array();
  for (const auto& g : r.grades) grades.push_back(format_grade(g));
  return Json{{"grades", grades}, {"check", to_json(r.check)}, {"round_trip", r.round_trip}};
}

Json to_json(const PathReport& r) {
  return Json{{"vertices", r.vertices},
              {"join", matrix(r.join, r.vertices)},
              {"value", matrix(r.value, r.vertices)},
              {"iterations", r.iterations},
              {"horizon", r.horizon},
              {"stabilized", r.stabilized}};
}

Json to_json(const PathCrossCheck& c) {
  return Json{{"explicit_value", matrix(c.explicit_value, c.vertices)},
              {"agrees", c.agrees},
              {"witness", c.witness ? Json{c.witness->first, c.witness->second} : Json(nullptr)}};
}

// ---------------------------------------------------------------------------
// CSV and DOT

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_field(fields[i]);
  }
  out << "\r\n";
}

namespace {

std::string hasse(const std::string& name, const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    out << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
  for (auto [lo, hi] : covers) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string ideal_lattice_dot(const IdealLattice& lattice) {
  std::vector<std::string> labels;
  for (auto i : lattice.ideals) labels.push_back(format_set(i));
  return hasse("ideals", labels, lattice.lattice.covers());
}

std::string congruence_lattice_dot(const CongruenceLattice& lattice) {
  std::vector<std::string> labels;
  for (const auto& c : lattice.congruences) labels.push_back(format_partition(c));
  return hasse("congruences", labels, lattice.lattice.covers());
}

std::string prime_dag_dot(const SpectrumPoset& spectrum) {
  std::vector<std::string> labels;
  for (auto p : spectrum.primes) labels.push_back(format_set(p));
  return hasse("spectrum", labels, spectrum.inclusions);
}

}  // namespace tgs
