#include "tgs/spectrum.hpp"

#include <algorithm>
#include <set>

#include "tgs/radical.hpp"

namespace tgs {

IdealSet SpectrumPoset::hull(PrimeSet x, std::size_t n) const {
  IdealSet out = IdealSet::full(n);
  for (std::size_t i = 0; i < primes.size(); ++i)
    if ((x >> i) & 1U) out = out & primes[i];
  return out;
}

namespace {

PrimeSet v_of(const std::vector<IdealSet>& primes, IdealSet ideal) {
  PrimeSet out = 0;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (ideal.subset_of(primes[i])) out |= PrimeSet{1} << i;
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const std::vector<IdealSet>& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  auto below = [&](std::size_t i, std::size_t j) { return i != j && p[i].subset_of(p[j]); };
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!below(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < p.size() && cover; ++k)
        if (below(i, k) && below(k, j)) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

// Longest strictly increasing chain of primes (by inclusion).
std::vector<IdealSet> longest_chain(const std::vector<IdealSet>& primes) {
  auto sorted = primes;
  std::sort(sorted.begin(), sorted.end(),
            [](IdealSet a, IdealSet b) { return std::pair(a.size(), a) < std::pair(b.size(), b); });
  const auto k = sorted.size();
  std::vector<std::size_t> length(k, 1), prev(k, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (sorted[i] != sorted[j] && sorted[i].subset_of(sorted[j]) && length[i] + 1 > length[j]) {
        length[j] = length[i] + 1;
        prev[j] = i;
      }
  std::vector<IdealSet> chain;
  if (k == 0) return chain;
  auto end = static_cast<std::size_t>(std::max_element(length.begin(), length.end()) - length.begin());
  for (auto i = end; i < k; i = prev[i]) chain.push_back(sorted[i]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

SpectrumPoset spec_closed_sets(const TernaryGammaSemiring& ts) {
  const auto n = ts.order();
  SpectrumPoset s;
  const auto lattice = all_ideals(ts);
  s.ideals = lattice.ideals;
  s.primes = all_prime_ideals(ts, lattice);
  if (s.primes.size() > 64) throw BoundExceeded("spec_closed_sets: more than 64 primes");
  s.inclusions = covering_pairs(s.primes);

  std::set<PrimeSet> family;
  for (auto ideal : s.ideals) {
    const auto v = v_of(s.primes, ideal);
    s.v_of_ideal.push_back(v);
    family.insert(v);
  }
  for (auto x : family) s.closed_sets.push_back(ClosedSet{x, s.hull(x, n)});

  const PrimeSet everything =
      s.primes.size() == 64 ? ~PrimeSet{0} : (PrimeSet{1} << s.primes.size()) - 1;
  s.contains_empty = family.count(0) > 0;
  s.contains_full = family.count(everything) > 0;
  for (auto x : family)
    for (auto y : family) {
      if (s.closed_under_union && !family.count(x | y)) {
        s.closed_under_union = false;
        s.topology_witness = std::pair(x, y);
      }
      if (s.closed_under_intersection && !family.count(x & y)) {
        s.closed_under_intersection = false;
        s.topology_witness = std::pair(x, y);
      }
    }

  for (std::size_t i = 0; i < s.ideals.size(); ++i)
    for (std::size_t j = 0; j < s.ideals.size(); ++j)
      if (s.v_order_reversing && s.ideals[i].subset_of(s.ideals[j]) &&
          (s.v_of_ideal[j] & ~s.v_of_ideal[i]) != 0) {
        s.v_order_reversing = false;
        s.monotonicity_witness = std::pair(i, j);
      }

  for (std::size_t i = 0; i < s.ideals.size(); ++i) {
    const auto closure = s.hull(s.v_of_ideal[i], n);
    if (!s.ideals[i].subset_of(closure)) s.ideal_closure_ok = false;
    if (closure == s.ideals[i]) s.radical_ideals.push_back(s.ideals[i]);
  }

  // X -> hull(X) -> V(hull(X)) returns X, and V restricted to radical ideals
  // is a bijection onto the closed sets.
  std::set<PrimeSet> images;
  for (auto x : family) {
    const auto back = v_of(s.primes, s.hull(x, n));
    if ((x & ~back) != 0) {
      s.set_closure_ok = false;
      if (!s.galois_witness) s.galois_witness = x;
    }
    if (back != x) {
      s.anti_isomorphism = false;
      if (!s.galois_witness) s.galois_witness = x;
    }
  }
  for (auto r : s.radical_ideals) images.insert(v_of(s.primes, r));
  if (images != family || images.size() != s.radical_ideals.size()) s.anti_isomorphism = false;
  return s;
}

int krull_dimension(const TernaryGammaSemiring& ts) {
  const auto chain = longest_chain(all_prime_ideals(ts));
  return static_cast<int>(chain.size()) - 1;
}

DimensionReport dimension_report(const TernaryGammaSemiring& ts) {
  DimensionReport r;
  r.longest_chain = longest_chain(all_prime_ideals(ts));
  r.dimension = static_cast<int>(r.longest_chain.size()) - 1;
  const auto q = quotient(ts, radical(ts).radical).structure;
  auto chain = longest_chain(all_prime_ideals(q));
  r.quotient_dimension = static_cast<int>(chain.size()) - 1;
  r.quotient_zero_dimensional = r.quotient_dimension <= 0;
  if (!r.quotient_zero_dimensional) r.quotient_chain = std::move(chain);
  return r;
}

std::string_view avoidance_variant_name(AvoidanceVariant variant) {
  return variant == AvoidanceVariant::union_of_primes ? "union" : "intersection";
}

std::optional<AvoidanceVariant> parse_avoidance_variant(std::string_view name) {
  if (name == "union") return AvoidanceVariant::union_of_primes;
  if (name == "intersection") return AvoidanceVariant::intersection_as_printed;
  return std::nullopt;
}

AvoidanceReport prime_avoidance_check(const TernaryGammaSemiring& ts, AvoidanceVariant variant,
                                      std::size_t max_subset) {
  AvoidanceReport report;
  report.variant = variant;
  report.max_subset = max_subset;
  const auto lattice = all_ideals(ts);
  const auto primes = all_prime_ideals(ts, lattice);
  const auto k = primes.size();

  std::vector<std::size_t> chosen;
  auto test = [&] {
    IdealSet cover = variant == AvoidanceVariant::union_of_primes ? IdealSet() : IdealSet::full(ts.order());
    for (auto i : chosen)
      cover = variant == AvoidanceVariant::union_of_primes ? (cover | primes[i]) : (cover & primes[i]);
    for (auto ideal : lattice.ideals) {
      if (!ideal.subset_of(cover)) continue;
      ++report.cases;
      const bool inside_one = std::any_of(chosen.begin(), chosen.end(),
                                          [&](std::size_t i) { return ideal.subset_of(primes[i]); });
      if (!inside_one) {
        AvoidanceCounterexample c{ideal, {}};
        for (auto i : chosen) c.primes.push_back(primes[i]);
        report.counterexamples.push_back(std::move(c));
      }
    }
  };
  // Subsets of size 1..max_subset in lexicographic order of indices.
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (!chosen.empty()) test();
    if (chosen.size() == max_subset) return;
    for (std::size_t i = from; i < k; ++i) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return report;
}

ContractionReport contract_primes(const Homomorphism& f) {
  const auto check = is_homomorphism(f.source, f.target, f.map);
  if (!check.ok) throw InvalidStructure("contract_primes: map is not a homomorphism");
  const auto n = f.source.order();
  const auto source_primes = all_prime_ideals(f.source);
  const auto target_primes = all_prime_ideals(f.target);

  ContractionReport report;
  std::vector<std::size_t> image;
  for (auto p : target_primes) {
    Contraction c;
    c.target_prime = p;
    for (std::size_t a = 0; a < n; ++a)
      if (p.contains(f.map[a])) c.preimage.insert(a);
    c.ideal = is_ideal(f.source, c.preimage);
    c.prime = c.ideal && c.preimage != IdealSet::full(n) && is_prime(f.source, c.preimage);
    auto it = std::find(source_primes.begin(), source_primes.end(), c.preimage);
    if (c.prime && it != source_primes.end())
      c.source_index = static_cast<std::size_t>(it - source_primes.begin());
    report.well_defined = report.well_defined && c.source_index.has_value();
    if (c.source_index) image.push_back(*c.source_index);
    report.contractions.push_back(c);
  }

  std::set<std::size_t> distinct(image.begin(), image.end());
  report.injective = report.well_defined && distinct.size() == image.size();
  report.surjective = report.well_defined && distinct.size() == source_primes.size();

  if (report.well_defined) {
    std::set<PrimeSet> target_closed;
    for (auto ideal : all_ideals(f.target).ideals) target_closed.insert(v_of(target_primes, ideal));
    report.continuous = true;
    for (auto ideal : all_ideals(f.source).ideals) {
      const auto closed = v_of(source_primes, ideal);
      PrimeSet preimage = 0;
      for (std::size_t t = 0; t < report.contractions.size(); ++t)
        if ((closed >> *report.contractions[t].source_index) & 1U) preimage |= PrimeSet{1} << t;
      if (!target_closed.count(preimage)) {
        report.continuous = false;
        report.continuity_witness = closed;
        break;
      }
    }
  }
  return report;
}

}  // namespace tgs
