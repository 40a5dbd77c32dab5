#include "tgs/decomposition.hpp"

#include <algorithm>
#include <map>

#include "tgs/enumeration.hpp"
#include "tgs/radical.hpp"

namespace tgs {

IrreducibilityReport is_subdirectly_irreducible(const CongruenceLattice& con) {
  IrreducibilityReport report;
  const auto& all = con.congruences;
  if (all.empty() || all.front().order() <= 1) {
    report.trivial = true;
    return report;
  }
  // Least nontrivial congruence: one that refines every other nontrivial one.
  for (std::size_t i = 1; i < all.size(); ++i) {
    bool least = true;
    for (std::size_t j = 1; j < all.size() && least; ++j) least = all[i].refines(all[j]);
    if (least) {
      report.irreducible = true;
      report.monolith = all[i];
      break;
    }
  }
  return report;
}

IrreducibilityReport is_subdirectly_irreducible(const TernaryGammaSemiring& ts) {
  return is_subdirectly_irreducible(all_congruences(ts));
}

std::string_view strategy_name(DecompositionStrategy strategy) {
  return strategy == DecompositionStrategy::maximal_congruences ? "maximal-congruences"
                                                                : "meet-irreducible";
}

std::optional<DecompositionStrategy> parse_strategy(std::string_view name) {
  for (auto s : {DecompositionStrategy::maximal_congruences, DecompositionStrategy::meet_irreducible})
    if (strategy_name(s) == name) return s;
  return std::nullopt;
}

namespace {

bool is_simple(const CongruenceLattice& con) {
  return con.congruences.size() == 2;
}

// Indices of proper congruences with exactly one upper cover (meet-irreducible)
// or with the full congruence as their only proper upper bound (coatoms).
std::vector<std::size_t> select_factors(const CongruenceLattice& con,
                                        DecompositionStrategy strategy) {
  const auto& l = con.lattice;
  const auto top = con.full_index();
  std::vector<std::size_t> upper_covers(l.size, 0);
  for (auto [lo, hi] : l.covers()) ++upper_covers[lo];
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < l.size; ++i) {
    if (i == top) continue;
    if (strategy == DecompositionStrategy::meet_irreducible) {
      if (upper_covers[i] == 1) out.push_back(i);
    } else {
      bool coatom = true;
      for (std::size_t j = 0; j < l.size && coatom; ++j)
        if (j != i && j != top && l.leq(i, j)) coatom = false;
      if (coatom) out.push_back(i);
    }
  }
  return out;
}

}  // namespace

SubdirectDecomposition subdirect_decomposition(const TernaryGammaSemiring& ts,
                                               DecompositionStrategy strategy) {
  const auto n = ts.order();
  const auto con = all_congruences(ts);
  SubdirectDecomposition d;
  d.strategy = strategy;
  d.kernel = Congruence::full(n);
  for (auto i : select_factors(con, strategy)) {
    const auto& rho = con.congruences[i];
    auto q = quotient(ts, rho).structure;
    const auto factor_con = all_congruences(q);
    d.factors.push_back(SubdirectFactor{rho, q, is_subdirectly_irreducible(factor_con).irreducible,
                                        is_simple(factor_con)});
    d.kernel = meet(d.kernel, rho);
  }

  // The quotient numbers blocks by least representative in ascending order.
  std::vector<std::map<Element, Element>> block_index(d.factors.size());
  for (std::size_t f = 0; f < d.factors.size(); ++f) {
    Element next = 0;
    for (std::size_t a = 0; a < n; ++a) {
      const auto r = d.factors[f].congruence.rep(a);
      if (!block_index[f].count(r)) block_index[f][r] = next++;
    }
  }
  d.embedding.assign(n, std::vector<Element>(d.factors.size()));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t f = 0; f < d.factors.size(); ++f)
      d.embedding[a][f] = block_index[f].at(d.factors[f].congruence.rep(a));

  d.injective = true;
  for (std::size_t a = 0; a < n && d.injective; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (d.embedding[a] == d.embedding[b]) {
        d.injective = false;
        d.collision = std::pair(Element(a), Element(b));
        break;
      }
  return d;
}

std::string_view verdict_name(Verdict verdict) {
  return verdict == Verdict::holds ? "HOLDS" : "FAILS";
}

WedderburnReport wedderburn_check(const TernaryGammaSemiring& ts) {
  WedderburnReport report;
  report.radical = radical(ts).radical;
  if (!is_ideal(ts, report.radical))
    throw Error("wedderburn_check: radical is not an ideal");
  const auto rad = restrict_to(ts, report.radical);
  const auto semisimple = quotient(ts, report.radical).structure;
  report.radical_order = rad.order();
  report.quotient_order = semisimple.order();

  const auto product = direct_product(rad, semisimple);
  if (product.order() != ts.order()) {
    report.failure = "order mismatch: |Rad| * |T/Rad| = " + std::to_string(product.order()) +
                     ", |T| = " + std::to_string(ts.order());
  } else if (auto iso = are_isomorphic(ts, product)) {
    report.isomorphism = Verdict::holds;
    report.isomorphism_map = iso->map;
  } else {
    report.failure = "no isomorphism between T and Rad x T/Rad";
  }

  report.ideals = all_ideals(ts).ideals.size();
  report.radical_ideals = all_ideals(rad).ideals.size();
  report.quotient_ideals = all_ideals(semisimple).ideals.size();
  report.lattice_factorization = report.ideals == report.radical_ideals * report.quotient_ideals
                                     ? Verdict::holds
                                     : Verdict::fails;
  return report;
}

std::string_view pattern_name(Pattern pattern) {
  switch (pattern) {
    case Pattern::simple: return "simple";
    case Pattern::idempotent_boolean: return "idempotent-boolean";
    case Pattern::subdirectly_decomposable: return "subdirectly-decomposable";
    case Pattern::other: return "other";
  }
  return "?";
}

PatternLabel classify_pattern(const TernaryGammaSemiring& ts) {
  const auto n = ts.order();
  const auto con = all_congruences(ts);
  PatternLabel p;
  p.congruences = con.congruences.size();
  p.ideals = all_ideals(ts).ideals.size();
  p.congruence_simple = n >= 2 && is_simple(con);
  p.ideal_simple = p.ideals == 2;
  p.idempotent_boolean = true;
  for (std::size_t a = 0; a < n && p.idempotent_boolean; ++a) {
    if (ts.add(a, a) != a) p.idempotent_boolean = false;
    for (std::size_t g = 0; g < ts.gamma_size(); ++g)
      if (ts.op(g, a, a, a) != a) p.idempotent_boolean = false;
  }
  const auto si = is_subdirectly_irreducible(con);
  p.subdirectly_irreducible = si.irreducible;

  if (p.congruence_simple) {
    p.label = Pattern::simple;
  } else if (p.idempotent_boolean) {
    p.label = Pattern::idempotent_boolean;
  } else if (!si.irreducible) {
    p.label = Pattern::subdirectly_decomposable;
  } else {
    p.label = Pattern::other;
    p.congruence_dump = con.congruences;
  }
  return p;
}

SemisimplicityReadings semisimplicity_readings(const TernaryGammaSemiring& ts) {
  SemisimplicityReadings r;
  const auto d = subdirect_decomposition(ts, DecompositionStrategy::meet_irreducible);
  r.factors_simple = std::all_of(d.factors.begin(), d.factors.end(),
                                 [](const SubdirectFactor& f) { return f.simple; });
  r.semiprime = radical(ts).semiprime;
  return r;
}

}  // namespace tgs
