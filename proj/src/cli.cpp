#include "tgs/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "tgs/digest.hpp"
#include "tgs/io.hpp"

namespace tgs {

namespace {

// Reference values printed beside computed ones; never used as oracles.
struct Table1Row {
  std::size_t n, m, additive, structures;
};
constexpr Table1Row kTable1[] = {{2, 1, 1, 1}, {3, 1, 5, 2}, {3, 2, 5, 4}, {4, 1, 9, 3}, {4, 2, 9, 4}};

struct Table5Row {
  const char* type;
  const char* orders;
  std::size_t count;
};
constexpr Table5Row kTable5[] = {{"Chain (simple)", "2;3", 3},
                                 {"Modular non-distributive", "3;4", 2},
                                 {"Boolean lattice", "4", 1},
                                 {"Diamond lattice (M_3)", "4", 2}};

struct Table6Row {
  std::size_t n, m, ideals, congruences, radical;
  const char* type;
};
constexpr Table6Row kTable6[] = {{2, 1, 2, 1, 0, "Boolean simple"},
                                 {3, 1, 2, 2, 0, "Modular simple"},
                                 {3, 2, 3, 3, 1, "Mixed idempotent"},
                                 {4, 1, 3, 2, 1, "Truncated hybrid"},
                                 {4, 2, 4, 3, 1, "Tropical-Boolean fusion"}};

struct Table7Row {
  std::size_t n, m, radical;
  const char* type;
};
constexpr Table7Row kTable7[] = {{2, 1, 0, "Simple Boolean"},
                                 {3, 1, 0, "Modular simple"},
                                 {3, 2, 1, "Mixed idempotent (two factors)"},
                                 {4, 1, 1, "Truncated x simple"},
                                 {4, 2, 1, "Tropical x Boolean"}};

std::string str(std::size_t v) { return std::to_string(v); }

unsigned default_jobs() {
  if (const char* env = std::getenv("TGS_JOBS")) {
    try {
      const auto v = std::stoul(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void emit(std::ostream& out, const Json& j, const std::string& format) {
  out << (format == "json" ? j.dump() : j.dump(2)) << '\n';
}

std::string describe_witness(const TernaryGammaSemiring& ts, Axiom axiom, const AxiomWitness& w) {
  std::ostringstream s;
  auto label = [&](std::size_t g) { return ts.gamma()[g]; };
  auto args = [&] {
    std::string out;
    for (std::size_t i = 0; i < w.args.size(); ++i) out += (i ? " " : "") + std::to_string(w.args[i]);
    return out;
  };
  switch (axiom) {
    case Axiom::T1: {
      static const char* kParts[] = {"associativity", "commutativity", "left identity", "right identity"};
      s << kParts[w.variant] << " at (" << args() << ")";
      break;
    }
    case Axiom::T2:
      s << "distributivity in slot " << w.variant + 1 << " at (" << args() << ") gamma "
        << label(w.gammas.at(0));
      break;
    case Axiom::T3:
      s << "{" << args() << "}_" << label(w.gammas.at(0)) << " with 0 in slot " << w.variant + 1;
      break;
    case Axiom::T4:
      s << "associativity at (" << args() << ") alpha " << label(w.gammas.at(0)) << " beta "
        << label(w.gammas.at(1));
      break;
    case Axiom::C:
      s << "permutation " << w.variant << " of {" << args() << "}_" << label(w.gammas.at(0));
      break;
  }
  s << ": " << int(w.lhs) << " vs " << int(w.rhs);
  return s.str();
}

// ---------------------------------------------------------------------------
// check

int cmd_check(const std::string& file, const std::string& mode_text, const std::string& format,
              std::size_t max_witnesses, std::ostream& out, std::ostream& err) {
  AxiomMode mode;
  TernaryGammaSemiring ts = build_named(NamedKind::zero_op, 1);
  try {
    mode = AxiomMode::parse(mode_text);
    ts = load_structure(file);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto report = check_axioms(ts, mode, max_witnesses);
  if (format == "json") {
    emit(out, to_json(report), format);
  } else {
    out << "axiom mode: " << mode.name() << '\n';
    for (const auto& r : report.results) {
      out << axiom_name(r.axiom) << ": " << (r.pass ? "pass" : "FAIL");
      if (!r.pass) out << " (" << r.violations << " violations)";
      out << '\n';
      for (const auto& w : r.witnesses) out << "  " << describe_witness(ts, r.axiom, w) << '\n';
    }
  }
  return report.all_pass() ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateArgs {
  std::size_t order = 0;
  std::size_t gamma_size = 1;
  std::string mode = "strict";
  bool permute_gamma = false;
  unsigned jobs = 1;
  std::string out_path;
  std::string manifest_path;
  std::size_t max_order = 4;
  std::size_t max_gamma = 2;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  using Clock = std::chrono::steady_clock;
  AxiomMode mode;
  try {
    mode = AxiomMode::parse(a.mode);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  EnumerationOptions options;
  options.max_order = a.max_order;
  options.max_gamma = a.max_gamma;
  options.permute_gamma = a.permute_gamma;
  options.jobs = std::max(1U, a.jobs);

  const auto t0 = Clock::now();
  Catalog catalog;
  try {
    catalog = enumerate_structures(a.order, a.gamma_size, mode, options);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto t1 = Clock::now();

  std::ostringstream buffer;
  write_catalog(catalog, buffer);
  const auto text = buffer.str();
  if (a.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << a.out_path << '\n';
      return kExitFailure;
    }
    file << text;
  }
  const auto t2 = Clock::now();

  auto seconds = [](auto d) { return std::chrono::duration<double>(d).count(); };
  const auto manifest_path =
      !a.manifest_path.empty() ? a.manifest_path
                               : (a.out_path.empty() ? std::string() : a.out_path + ".manifest.json");
  if (!manifest_path.empty()) {
    Json manifest{
        {"tool", kToolName},
        {"version", kToolVersion},
        {"parameters",
         {{"order", a.order},
          {"gamma_size", a.gamma_size},
          {"axiom_mode", mode.name()},
          {"permute_gamma", a.permute_gamma},
          {"jobs", options.jobs},
          {"max_order", a.max_order},
          {"max_gamma", a.max_gamma}}},
        {"phases_seconds", {{"search", seconds(t1 - t0)}, {"write", seconds(t2 - t1)}}},
        {"search",
         {{"additive_reducts", catalog.additive_reducts},
          {"explored_nodes", catalog.stats.explored_nodes},
          {"leaves", catalog.stats.leaves},
          {"accepted", catalog.stats.accepted},
          {"entries", catalog.entries.size()}}},
        {"digests",
         {{a.out_path.empty() ? std::string("stdout") : a.out_path, "sha256:" + sha256_hex(text)}}}};
    std::ofstream file(manifest_path);
    if (!file) {
      err << "error: cannot write " << manifest_path << '\n';
      return kExitFailure;
    }
    file << manifest.dump(2) << '\n';
  }
  err << "enumerated " << catalog.entries.size() << " structures (n=" << a.order
      << ", m=" << a.gamma_size << ", " << mode.name() << ")\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// report

std::string ideal_lattice_type(const IdealLattice& lattice) {
  const auto& l = lattice.lattice;
  if (l.size == 1) return "Trivial";
  bool chain = true;
  for (std::size_t x = 0; x < l.size && chain; ++x)
    for (std::size_t y = 0; y < l.size && chain; ++y) chain = l.leq(x, y) || l.leq(y, x);
  if (chain) return l.size == 2 ? "Chain (simple)" : "Chain";
  std::size_t atoms = 0;
  for (auto [lo, hi] : l.covers())
    if (lo == l.bottom) ++atoms;
  if (l.size == 4 && l.is_distributive) return "Boolean lattice";
  if (l.size == 5 && atoms == 3 && l.is_modular && !l.is_distributive) return "Diamond lattice (M_3)";
  if (l.is_modular && !l.is_distributive) return "Modular non-distributive";
  if (l.is_distributive) return "Distributive";
  return "Other";
}

const char* kTypeOrder[] = {"Trivial",          "Chain (simple)", "Chain",
                            "Modular non-distributive", "Boolean lattice",
                            "Diamond lattice (M_3)", "Distributive", "Other"};

std::string pattern_of_quotient(const TernaryGammaSemiring& ts) {
  const auto q = quotient(ts, radical(ts).radical).structure;
  if (q.order() == 1) return "trivial";
  return std::string(pattern_name(classify_pattern(q).label));
}

int cmd_report(const std::vector<std::string>& files, const std::string& table,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  std::vector<Catalog> catalogs;
  try {
    for (const auto& f : files) catalogs.push_back(load_catalog(f));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::set<std::string> modes;
  for (const auto& c : catalogs) modes.insert(c.mode.name());
  if (modes.size() > 1) err << "warning: catalogs mix axiom modes; rows are labeled by mode\n";

  std::ostringstream csv;
  if (table == "1") {
    write_csv_row(csv, {"n", "m", "axiom_mode", "permute_gamma", "additive_monoids",
                        "paper_ref_value_additive", "structures", "paper_ref_value_structures"});
    std::set<std::pair<std::size_t, std::size_t>> covered;
    for (const auto& c : catalogs) {
      std::string ref_add, ref_valid;
      for (const auto& r : kTable1)
        if (r.n == c.order && r.m == c.gamma_size) {
          ref_add = str(r.additive);
          ref_valid = str(r.structures);
          if (r.additive != c.additive_reducts)
            err << "mismatch: table 1 (" << r.n << "," << r.m << ") additive: computed "
                << c.additive_reducts << ", reference " << r.additive << '\n';
          if (r.structures != c.entries.size())
            err << "mismatch: table 1 (" << r.n << "," << r.m << ") structures [" << c.mode.name()
                << "]: computed " << c.entries.size() << ", reference " << r.structures << '\n';
        }
      covered.emplace(c.order, c.gamma_size);
      write_csv_row(csv, {str(c.order), str(c.gamma_size), c.mode.name(),
                          c.permute_gamma ? "true" : "false", str(c.additive_reducts), ref_add,
                          str(c.entries.size()), ref_valid});
    }
    for (const auto& r : kTable1)
      if (!covered.count({r.n, r.m})) {
        err << "missing: no catalog for table 1 row (" << r.n << "," << r.m << ")\n";
        write_csv_row(csv, {str(r.n), str(r.m), "", "", "", str(r.additive), "", str(r.structures)});
      }
  } else if (table == "5") {
    write_csv_row(csv, {"lattice_type", "orders_observed", "count", "axiom_mode", "paper_ref_value",
                        "paper_ref_value_orders"});
    std::map<std::string, std::pair<std::set<std::size_t>, std::size_t>> tally;
    for (const auto& c : catalogs)
      for (const auto& e : c.entries) {
        auto& slot = tally[ideal_lattice_type(all_ideals(e.structure))];
        slot.first.insert(e.structure.order());
        ++slot.second;
      }
    const std::string mode_label = modes.size() == 1 ? *modes.begin() : "mixed";
    for (const char* type : kTypeOrder) {
      const Table5Row* ref = nullptr;
      for (const auto& r : kTable5)
        if (std::string(r.type) == type) ref = &r;
      auto it = tally.find(type);
      if (it == tally.end() && !ref) continue;
      std::string orders;
      std::size_t count = 0;
      if (it != tally.end()) {
        for (auto o : it->second.first) orders += (orders.empty() ? "" : ";") + str(o);
        count = it->second.second;
      }
      if (ref && ref->count != count)
        err << "mismatch: table 5 '" << type << "': computed " << count << ", reference "
            << ref->count << '\n';
      if (tally.empty()) continue;
      write_csv_row(csv, {type, orders, str(count), mode_label, ref ? str(ref->count) : "",
                          ref ? ref->orders : ""});
    }
  } else if (table == "6") {
    write_csv_row(csv, {"n", "m", "ideals", "congruences", "radical_nonzero", "nil_nonzero", "type",
                        "axiom_mode", "canonical", "paper_ref_value"});
    for (const auto& c : catalogs) {
      const Table6Row* ref = nullptr;
      for (const auto& r : kTable6)
        if (r.n == c.order && r.m == c.gamma_size) ref = &r;
      bool matched = false;
      for (const auto& e : c.entries) {
        const auto& t = e.invariants;
        const auto label = pattern_name(classify_pattern(e.structure).label);
        std::string ref_text;
        if (ref) {
          ref_text = str(ref->n) + " " + str(ref->m) + " " + str(ref->ideals) + " " +
                     str(ref->congruences) + " " + str(ref->radical) + " (" + ref->type + ")";
          matched = matched || (t.ideals == ref->ideals && t.congruences == ref->congruences &&
                                t.radical_nonzero == ref->radical);
        }
        write_csv_row(csv, {str(t.order), str(t.gamma_size), str(t.ideals), str(t.congruences),
                            str(t.radical_nonzero), str(t.nil_nonzero), std::string(label),
                            e.mode.name(), e.canonical.hex(), ref_text});
      }
      if (ref && !matched)
        err << "mismatch: table 6 row (" << ref->n << "," << ref->m << ") tuple " << ref->ideals
            << " " << ref->congruences << " " << ref->radical << " matches no " << c.mode.name()
            << " entry\n";
    }
  } else if (table == "7") {
    write_csv_row(csv, {"n", "m", "radical_nonzero", "semisimple_type", "count", "wedderburn_holds",
                        "wedderburn_fails", "axiom_mode", "paper_ref_value"});
    for (const auto& c : catalogs) {
      struct Tally {
        std::size_t count = 0, holds = 0, fails = 0;
      };
      std::map<std::pair<std::size_t, std::string>, Tally> rows;
      for (const auto& e : c.entries) {
        auto& row = rows[{e.invariants.radical_nonzero, pattern_of_quotient(e.structure)}];
        ++row.count;
        if (wedderburn_check(e.structure).isomorphism == Verdict::holds)
          ++row.holds;
        else
          ++row.fails;
      }
      const Table7Row* ref = nullptr;
      for (const auto& r : kTable7)
        if (r.n == c.order && r.m == c.gamma_size) ref = &r;
      const auto ref_text = ref ? "rad " + str(ref->radical) + " " + ref->type : std::string();
      for (const auto& [key, t] : rows)
        write_csv_row(csv, {str(c.order), str(c.gamma_size), str(key.first), key.second,
                            str(t.count), str(t.holds), str(t.fails), c.mode.name(), ref_text});
      if (ref && std::none_of(rows.begin(), rows.end(),
                              [&](const auto& r) { return r.first.first == ref->radical; }))
        err << "mismatch: table 7 row (" << ref->n << "," << ref->m << ") radical size "
            << ref->radical << " observed in no entry\n";
    }
  } else {
    err << "error: unknown table '" << table << "' (expected 1, 5, 6 or 7)\n";
    return kExitUsage;
  }

  if (out_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << out_path << '\n';
      return kExitFailure;
    }
    file << csv.str();
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string file;
  std::string what;
  std::string format = "pretty";
  std::string gamma;
  std::size_t length = 0;
  std::vector<std::string> generators;
  std::vector<std::string> checks;
  std::string graph;
  std::size_t horizon = 0;
  std::string grades;
  std::string chain;
  std::string dot;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

Vector parse_vector(const TernaryGammaSemiring& ts, const std::string& text) {
  Vector v;
  for (const auto& p : split(text, ',')) {
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(p, &pos);
    } catch (const std::exception&) {
      throw InvalidStructure("malformed vector '" + text + "'");
    }
    if (pos != p.size() || value >= ts.order())
      throw InvalidStructure("malformed vector '" + text + "'");
    v.push_back(static_cast<Element>(value));
  }
  return v;
}

std::vector<std::size_t> selected_gammas(const TernaryGammaSemiring& ts, const std::string& label) {
  if (!label.empty()) return {ts.gamma_index(label)};
  std::vector<std::size_t> all(ts.gamma_size());
  for (std::size_t g = 0; g < all.size(); ++g) all[g] = g;
  return all;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw Error("cannot write " + path);
  file << text;
}

Json analyze(const TernaryGammaSemiring& ts, const AnalyzeArgs& a) {
  if (a.what == "ideals") {
    const auto ideals = all_ideals(ts);
    const auto con = all_congruences(ts);
    if (!a.dot.empty()) write_text(a.dot, ideal_lattice_dot(ideals) + congruence_lattice_dot(con));
    return Json{{"ideals", to_json(ideals)},
                {"congruences", to_json(con)},
                {"correspondence", to_json(correspondence_report(ts, ideals, con))},
                {"invariants", to_json(invariant_tuple(ts))}};
  }
  if (a.what == "radical") {
    Json nil = Json::object();
    for (auto d : {NilDefinition::weak, NilDefinition::literal, NilDefinition::power})
      nil[std::string(nil_definition_name(d))] = to_json(rad_nil_report(ts, d));
    return Json{{"radical", to_json(radical(ts))},
                {"radical_vs_nil", nil},
                {"cancellation", to_json(cancellation_check(ts))},
                {"identities", to_json(find_identities(ts))}};
  }
  if (a.what == "decompose") {
    return Json{
        {"irreducibility", to_json(is_subdirectly_irreducible(ts))},
        {"maximal_congruences",
         to_json(subdirect_decomposition(ts, DecompositionStrategy::maximal_congruences))},
        {"meet_irreducible", to_json(subdirect_decomposition(ts, DecompositionStrategy::meet_irreducible))},
        {"wedderburn", to_json(wedderburn_check(ts))},
        {"pattern", to_json(classify_pattern(ts))},
        {"semisimplicity_readings", to_json(semisimplicity_readings(ts))}};
  }
  if (a.what == "spectrum") {
    const auto spectrum = spec_closed_sets(ts);
    if (!a.dot.empty()) write_text(a.dot, prime_dag_dot(spectrum));
    return Json{{"spectrum", to_json(spectrum)},
                {"dimension", to_json(dimension_report(ts))},
                {"avoidance_union",
                 to_json(prime_avoidance_check(ts, AvoidanceVariant::union_of_primes))},
                {"avoidance_intersection",
                 to_json(prime_avoidance_check(ts, AvoidanceVariant::intersection_as_printed))}};
  }
  if (a.what == "code") {
    if (a.length == 0) throw InvalidStructure("--length is required for code analysis");
    if (a.generators.empty() && a.checks.empty())
      throw InvalidStructure("code analysis needs --generator or --check");
    Json report = Json::object();
    if (!a.generators.empty()) {
      std::vector<Vector> gens;
      for (const auto& g : a.generators) gens.push_back(parse_vector(ts, g));
      const auto code = code_generate(ts, a.length, gens);
      report["code"] = to_json(code);
      report["gamma_linear"] = is_gamma_linear(ts, code);
      report["weights"] = to_json(weight_report(ts, code));
    }
    if (!a.checks.empty()) {
      std::vector<CheckOperator> ops;
      for (const auto& c : a.checks) {
        const auto parts = split(c, ':');
        if (parts.size() != 3) throw InvalidStructure("--check expects gamma:u:v, got '" + c + "'");
        ops.push_back(CheckOperator{ts.gamma_index(parts[0]), parse_vector(ts, parts[1]),
                                    parse_vector(ts, parts[2])});
      }
      report["check_code"] = to_json(check_code(ts, a.length, ops));
    }
    return report;
  }
  if (a.what == "sbox") {
    Json profiles = Json::array();
    for (auto g : selected_gammas(ts, a.gamma)) {
      auto j = to_json(sbox_lift_report(ts, g));
      j["gamma_label"] = ts.gamma()[g];
      profiles.push_back(j);
    }
    return Json{{"profiles", profiles}};
  }
  if (a.what == "fuzzy") {
    if (a.grades.empty() && a.chain.empty())
      throw InvalidStructure("fuzzy analysis needs --grades or --chain");
    Json report = Json::object();
    if (!a.grades.empty()) {
      std::vector<Grade> mu;
      for (const auto& g : split(a.grades, ',')) mu.push_back(parse_grade(g));
      report["check"] = to_json(fuzzy_ideal_check(ts, mu));
    }
    if (!a.chain.empty()) {
      std::vector<std::pair<Grade, IdealSet>> chain;
      for (const auto& link : split(a.chain, ';')) {
        const auto eq = link.find('=');
        if (eq == std::string::npos) throw InvalidStructure("--chain expects level=e1,e2;...");
        IdealSet members;
        for (auto e : parse_vector(ts, link.substr(eq + 1))) members.insert(e);
        chain.emplace_back(parse_grade(link.substr(0, eq)), members);
      }
      report["chain"] = to_json(fuzzy_from_chain(ts, chain));
    }
    return report;
  }
  if (a.what == "paths") {
    if (a.graph.empty()) throw InvalidStructure("path analysis needs --graph");
    std::ifstream in(a.graph);
    if (!in) throw InvalidStructure("cannot open " + a.graph);
    std::stringstream text;
    text << in.rdbuf();
    const auto graph = parse_graph(text.str(), ts.order());
    Json results = Json::array();
    for (auto g : selected_gammas(ts, a.gamma)) {
      const auto paths = ternary_path_values(ts, g, graph, a.horizon);
      results.push_back(Json{{"gamma_label", ts.gamma()[g]},
                             {"paths", to_json(paths)},
                             {"triple_check", to_json(path_triple_check(ts, g, graph, paths))}});
    }
    return Json{{"results", results}};
  }
  throw InvalidStructure("unknown analysis '" + a.what + "'");
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  TernaryGammaSemiring ts = build_named(NamedKind::zero_op, 1);
  try {
    ts = load_structure(a.file);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    Json report = analyze(ts, a);
    report["analysis"] = a.what;
    emit(out, report, a.format);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite commutative ternary Gamma-semirings: check, enumerate, report, analyze", "tgs"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string file, mode = "strict", format = "pretty";
  std::size_t max_witnesses = 10;
  auto* check = app.add_subcommand("check", "Check the axioms on a structure file");
  check->add_option("file", file, "Structure JSON")->required();
  check->add_option("--axiom-mode", mode, "strict, relaxed, or a list such as T1,T2,C");
  check->add_option("--format", format)->check(CLI::IsMember({"pretty", "json"}));
  check->add_option("--max-witnesses", max_witnesses);

  EnumerateArgs en;
  en.jobs = default_jobs();
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate structures up to isomorphism");
  enumerate->add_option("--order", en.order)->required();
  enumerate->add_option("--gamma-size", en.gamma_size);
  enumerate->add_option("--axiom-mode", en.mode);
  enumerate->add_flag("--permute-gamma", en.permute_gamma, "Identify structures up to relabeling gamma");
  enumerate->add_option("--jobs", en.jobs, "Worker threads (default: TGS_JOBS or 1)");
  enumerate->add_option("--out", en.out_path, "Catalog path (JSON Lines); stdout when omitted");
  enumerate->add_option("--manifest", en.manifest_path, "Manifest path (default: <out>.manifest.json)");
  enumerate->add_option("--max-order", en.max_order, "Refuse orders above this bound");
  enumerate->add_option("--max-gamma", en.max_gamma, "Refuse gamma sizes above this bound");

  std::vector<std::string> catalogs;
  std::string table, report_out;
  auto* report = app.add_subcommand("report", "Summary tables over catalogs, as CSV");
  report->add_option("catalogs", catalogs, "Catalog files")->required();
  report->add_option("--table", table, "1, 5, 6 or 7")->required();
  report->add_option("--out", report_out, "CSV path; stdout when omitted");

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run one analysis on a structure file");
  analyze_cmd->add_option("file", an.file, "Structure JSON")->required();
  analyze_cmd->add_option("--what", an.what)
      ->required()
      ->check(CLI::IsMember({"ideals", "radical", "decompose", "spectrum", "code", "sbox", "fuzzy", "paths"}));
  analyze_cmd->add_option("--format", an.format)->check(CLI::IsMember({"pretty", "json"}));
  analyze_cmd->add_option("--gamma", an.gamma, "Gamma label (default: all)");
  analyze_cmd->add_option("--length", an.length, "Code length");
  analyze_cmd->add_option("--generator", an.generators, "Generator vector, e.g. 1,0");
  analyze_cmd->add_option("--check", an.checks, "Check operator gamma:u:v, e.g. 1:1,1:1,0");
  analyze_cmd->add_option("--graph", an.graph, "Edge-list file");
  analyze_cmd->add_option("--horizon", an.horizon, "Iteration bound for path values");
  analyze_cmd->add_option("--grades", an.grades, "Fuzzy grades per element, e.g. 1,0,1/2");
  analyze_cmd->add_option("--chain", an.chain, "Ideal chain, e.g. 1=0;1/2=0,1");
  analyze_cmd->add_option("--dot", an.dot, "Write a Hasse diagram (ideals, spectrum)");

  std::vector<std::string> argv_storage{"tgs"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*check) return cmd_check(file, mode, format, max_witnesses, out, err);
  if (*enumerate) return cmd_enumerate(en, out, err);
  if (*report) return cmd_report(catalogs, table, report_out, out, err);
  return cmd_analyze(an, out, err);
}

}  // namespace tgs
