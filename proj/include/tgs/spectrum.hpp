#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "tgs/core.hpp"
#include "tgs/ideals.hpp"

namespace tgs {

// Set of primes, as a bitmask over indices into SpectrumPoset::primes.
using PrimeSet = std::uint64_t;

struct ClosedSet {
  PrimeSet primes = 0;
  IdealSet ideal;  // intersection of its primes
};

struct SpectrumPoset {
  std::vector<IdealSet> primes;
  std::vector<std::pair<std::size_t, std::size_t>> inclusions;  // covering pairs (lower, upper)
  std::vector<PrimeSet> v_of_ideal;  // V(I) per ideal, parallel to all_ideals order
  std::vector<IdealSet> ideals;
  std::vector<ClosedSet> closed_sets;  // distinct, sorted by bitmask

  // Topology audit.
  bool contains_empty = false;
  bool contains_full = false;
  bool closed_under_union = true;
  bool closed_under_intersection = true;
  std::optional<std::pair<PrimeSet, PrimeSet>> topology_witness;

  bool v_order_reversing = true;
  std::optional<std::pair<std::size_t, std::size_t>> monotonicity_witness;  // ideal indices

  // Galois connection with radical ideals.
  std::vector<IdealSet> radical_ideals;
  bool ideal_closure_ok = true;     // I within the hull of V(I)
  bool set_closure_ok = true;       // X within V(hull X)
  bool anti_isomorphism = true;     // closed sets <-> radical ideals
  std::optional<PrimeSet> galois_witness;

  bool empty_spectrum() const { return primes.empty(); }
  // Intersection of the primes in X; the whole carrier for the empty set.
  IdealSet hull(PrimeSet x, std::size_t n) const;
};

SpectrumPoset spec_closed_sets(const TernaryGammaSemiring& ts);

inline constexpr int kEmptySpectrumDimension = -1;

struct DimensionReport {
  int dimension = kEmptySpectrumDimension;
  std::vector<IdealSet> longest_chain;
  int quotient_dimension = kEmptySpectrumDimension;  // of T/Rad(T)
  bool quotient_zero_dimensional = true;             // quotient dimension is 0 or -1
  std::vector<IdealSet> quotient_chain;              // counterexample chain when not
};

int krull_dimension(const TernaryGammaSemiring& ts);
DimensionReport dimension_report(const TernaryGammaSemiring& ts);

enum class AvoidanceVariant { union_of_primes, intersection_as_printed };
std::string_view avoidance_variant_name(AvoidanceVariant variant);
std::optional<AvoidanceVariant> parse_avoidance_variant(std::string_view name);

struct AvoidanceCounterexample {
  IdealSet ideal;
  std::vector<IdealSet> primes;
};

struct AvoidanceReport {
  AvoidanceVariant variant = AvoidanceVariant::union_of_primes;
  std::size_t max_subset = 3;
  std::size_t cases = 0;  // (ideal, prime subset) pairs satisfying the hypothesis
  std::vector<AvoidanceCounterexample> counterexamples;
  bool passes() const { return counterexamples.empty(); }
};

// Ideal I covered by P_1..P_k (k <= max_subset) must lie in some P_j.
AvoidanceReport prime_avoidance_check(const TernaryGammaSemiring& ts, AvoidanceVariant variant,
                                      std::size_t max_subset = 3);

struct Contraction {
  IdealSet target_prime;
  IdealSet preimage;
  bool ideal = false;
  bool prime = false;
  std::optional<std::size_t> source_index;  // position in the source spectrum
};

struct ContractionReport {
  std::vector<Contraction> contractions;
  bool well_defined = true;  // every contraction is a prime of the source
  // Preimage of every closed set of the source spectrum is closed in the
  // target spectrum; only evaluated when the map is well defined.
  std::optional<bool> continuous;
  std::optional<PrimeSet> continuity_witness;  // source closed set with non-closed preimage
  bool injective = false;
  bool surjective = false;
};

// Throws InvalidStructure when f is not a homomorphism.
ContractionReport contract_primes(const Homomorphism& f);

}  // namespace tgs
