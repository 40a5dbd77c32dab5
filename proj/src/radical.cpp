#include "tgs/radical.hpp"

#include <algorithm>

namespace tgs {

std::string_view nil_definition_name(NilDefinition defn) {
  switch (defn) {
    case NilDefinition::weak: return "weak";
    case NilDefinition::literal: return "literal";
    case NilDefinition::power: return "power";
  }
  return "?";
}

std::optional<NilDefinition> parse_nil_definition(std::string_view name) {
  for (auto d : {NilDefinition::weak, NilDefinition::literal, NilDefinition::power})
    if (nil_definition_name(d) == name) return d;
  return std::nullopt;
}

namespace {

// Whether 0 is reachable from the seed values under v -> {v x a}_g.
bool chain_reaches_zero(const TernaryGammaSemiring& ts, std::size_t x, bool any_partner) {
  const auto n = ts.order();
  std::vector<bool> seen(n, false);
  std::vector<Element> frontier;
  auto visit = [&](Element v) {
    if (!seen[v]) {
      seen[v] = true;
      frontier.push_back(v);
    }
  };
  for (std::size_t g = 0; g < ts.gamma_size(); ++g) {
    if (any_partner) {
      for (std::size_t a = 0; a < n; ++a) visit(ts.op(g, x, x, a));
    } else {
      visit(ts.op(g, x, x, x));
    }
  }
  while (!frontier.empty()) {
    const Element v = frontier.back();
    frontier.pop_back();
    if (v == 0) return true;
    for (std::size_t g = 0; g < ts.gamma_size(); ++g) {
      if (any_partner) {
        for (std::size_t a = 0; a < n; ++a) visit(ts.op(g, v, x, a));
      } else {
        visit(ts.op(g, v, x, x));
      }
    }
  }
  return seen[0];
}

bool weakly_nilpotent(const TernaryGammaSemiring& ts, std::size_t x) {
  const auto n = ts.order();
  const auto m = ts.gamma_size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool left = false, middle = false;
      for (std::size_t g = 0; g < m; ++g) {
        left = left || ts.op(g, x, a, b) == 0;
        middle = middle || ts.op(g, a, x, b) == 0;
      }
      if (left && middle) return true;
    }
  return false;
}

}  // namespace

IdealSet nilpotents(const TernaryGammaSemiring& ts, NilDefinition defn) {
  if (ts.order() > 64) throw BoundExceeded("nilpotents: carrier larger than 64");
  IdealSet out;
  for (std::size_t x = 0; x < ts.order(); ++x) {
    bool nil = false;
    switch (defn) {
      case NilDefinition::weak: nil = weakly_nilpotent(ts, x); break;
      case NilDefinition::literal: nil = chain_reaches_zero(ts, x, true); break;
      case NilDefinition::power: nil = chain_reaches_zero(ts, x, false); break;
    }
    if (nil) out.insert(x);
  }
  return out;
}

bool is_prime(const TernaryGammaSemiring& ts, IdealSet p) {
  const auto n = ts.order();
  for (std::size_t g = 0; g < ts.gamma_size(); ++g)
    for (std::size_t a = 0; a < n; ++a) {
      if (p.contains(a)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (p.contains(b)) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (!p.contains(c) && p.contains(ts.op(g, a, b, c))) return false;
      }
    }
  return true;
}

std::vector<IdealSet> all_prime_ideals(const TernaryGammaSemiring& ts) {
  return all_prime_ideals(ts, all_ideals(ts));
}

std::vector<IdealSet> all_prime_ideals(const TernaryGammaSemiring& ts, const IdealLattice& ideals) {
  const auto whole = IdealSet::full(ts.order());
  std::vector<IdealSet> primes;
  for (auto ideal : ideals.ideals)
    if (ideal != whole && is_prime(ts, ideal)) primes.push_back(ideal);
  return primes;
}

RadicalResult radical(const TernaryGammaSemiring& ts) {
  RadicalResult r;
  r.primes = all_prime_ideals(ts);
  r.radical = IdealSet::full(ts.order());
  for (auto p : r.primes) r.radical = r.radical & p;
  r.semiprime = r.radical == IdealSet::zero();
  return r;
}

RadNilReport rad_nil_report(const TernaryGammaSemiring& ts, NilDefinition defn) {
  RadNilReport report;
  report.radical = radical(ts).radical;
  report.nil = nilpotents(ts, defn);
  for (std::size_t x = 0; x < ts.order(); ++x) {
    const bool in_rad = report.radical.contains(x);
    const bool in_nil = report.nil.contains(x);
    if (in_rad && !in_nil) report.only_in_radical.push_back(Element(x));
    if (in_nil && !in_rad) report.only_in_nil.push_back(Element(x));
  }
  report.equal = report.radical == report.nil;
  return report;
}

CancellationReport cancellation_check(const TernaryGammaSemiring& ts) {
  CancellationReport report;
  const auto q = quotient(ts, radical(ts).radical).structure;
  const auto n = q.order();
  report.quotient_order = n;
  for (std::size_t g = 0; g < q.gamma_size() && report.cancellative; ++g)
    for (std::size_t a = 0; a < n && report.cancellative; ++a)
      for (std::size_t b = 0; b < n && report.cancellative; ++b)
        for (std::size_t c = 0; c < n && report.cancellative; ++c)
          for (std::size_t d = 0; d < n; ++d)
            if (c != d && q.op(g, a, b, c) == q.op(g, a, b, d)) {
              report.cancellative = false;
              report.witness = CancellationWitness{g, Element(a), Element(b), Element(c),
                                                   Element(d)};
              break;
            }
  report.quotient_radical = radical(q).radical;
  report.quotient_semiprime = report.quotient_radical == IdealSet::zero();
  return report;
}

IdentityReport find_identities(const TernaryGammaSemiring& ts) {
  const auto n = ts.order();
  const auto m = ts.gamma_size();
  IdentityReport report;
  for (std::size_t z = 0; z < n; ++z) {
    bool absorbing = true;
    for (std::size_t g = 0; g < m && absorbing; ++g)
      for (std::size_t a = 0; a < n && absorbing; ++a)
        for (std::size_t b = 0; b < n && absorbing; ++b)
          absorbing = ts.op(g, z, a, b) == z && ts.op(g, a, z, b) == z && ts.op(g, a, b, z) == z;
    if (absorbing) report.absorbing_zeros.insert(z);

    bool unit = true;
    for (std::size_t g = 0; g < m && unit; ++g)
      for (std::size_t a = 0; a < n && unit; ++a) unit = ts.op(g, z, a, z) == a;
    if (unit) report.units.insert(z);
  }

  auto& lemma = report.lemma1;
  for (std::size_t g = 0; g < m; ++g) {
    bool idem = true;
    for (std::size_t a = 0; a < n && idem; ++a) idem = ts.op(g, a, a, a) == a;
    if (idem) lemma.idempotent_gammas.push_back(g);
  }
  lemma.additive_idempotent = true;
  for (std::size_t a = 0; a < n; ++a)
    if (ts.add(a, a) != a) {
      lemma.additive_idempotent = false;
      lemma.idempotence_witness = Element(a);
      break;
    }
  lemma.implication_holds = lemma.idempotent_gammas.empty() || lemma.additive_idempotent;
  return report;
}

InvariantTuple invariant_tuple(const TernaryGammaSemiring& ts) {
  InvariantTuple t;
  t.order = ts.order();
  t.gamma_size = ts.gamma_size();
  const auto ideals = all_ideals(ts);
  t.ideals = ideals.ideals.size();
  t.congruences = all_congruences(ts).congruences.size();
  IdealSet rad = IdealSet::full(ts.order());
  for (auto p : all_prime_ideals(ts, ideals)) rad = rad & p;
  const auto nil = nilpotents(ts, NilDefinition::power);
  t.radical_nonzero = rad.size() - (rad.contains(0) ? 1 : 0);
  t.nil_nonzero = nil.size() - (nil.contains(0) ? 1 : 0);
  return t;
}

}  // namespace tgs
