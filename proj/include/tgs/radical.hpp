#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "tgs/core.hpp"
#include "tgs/ideals.hpp"

namespace tgs {

// Competing readings of nilpotency.
//   weak:    {x a b}_g = 0 and {a x b}_d = 0 for some a, b, g, d.
//   literal: nested products {..{{x x a1} x a2} .. x ak} reach 0 for some a_i, g_i.
//   power:   the same chain with every a_i = x.
enum class NilDefinition { weak, literal, power };

std::string_view nil_definition_name(NilDefinition defn);
std::optional<NilDefinition> parse_nil_definition(std::string_view name);

IdealSet nilpotents(const TernaryGammaSemiring& ts, NilDefinition defn);

// {a b c}_g in P implies a, b or c in P.
bool is_prime(const TernaryGammaSemiring& ts, IdealSet ideal);

// Proper prime ideals in the order produced by all_ideals.
std::vector<IdealSet> all_prime_ideals(const TernaryGammaSemiring& ts);
std::vector<IdealSet> all_prime_ideals(const TernaryGammaSemiring& ts, const IdealLattice& ideals);

struct RadicalResult {
  IdealSet radical;  // the whole carrier when no prime exists
  std::vector<IdealSet> primes;
  bool semiprime = false;
};

RadicalResult radical(const TernaryGammaSemiring& ts);

struct RadNilReport {
  IdealSet radical;
  IdealSet nil;
  bool equal = false;
  std::vector<Element> only_in_radical;
  std::vector<Element> only_in_nil;
};

RadNilReport rad_nil_report(const TernaryGammaSemiring& ts,
                            NilDefinition defn = NilDefinition::power);

struct CancellationWitness {
  std::size_t gamma = 0;
  Element a = 0, b = 0, c = 0, d = 0;  // {a b c} = {a b d} with c != d
};

// Checks on T/Rad(T): cancellation in the last argument and semiprimeness.
struct CancellationReport {
  std::size_t quotient_order = 0;
  bool cancellative = true;
  std::optional<CancellationWitness> witness;
  bool quotient_semiprime = false;
  IdealSet quotient_radical;
};

CancellationReport cancellation_check(const TernaryGammaSemiring& ts);

struct Lemma1Report {
  // Labels g with {a a a}_g = a for every a.
  std::vector<std::size_t> idempotent_gammas;
  bool additive_idempotent = false;
  std::optional<Element> idempotence_witness;  // a with a + a != a
  // Implication "some idempotent gamma => + idempotent".
  bool implication_holds = true;
};

struct IdentityReport {
  IdealSet absorbing_zeros;  // z with {z a b} = {a z b} = {a b z} = z
  IdealSet units;            // e with {e a e}_g = a for all a, g
  Lemma1Report lemma1;
};

IdentityReport find_identities(const TernaryGammaSemiring& ts);

// (|T|, |Gamma|, #ideals, #congruences, |Rad \ {0}|, |Nil \ {0}|); Nil uses
// the power reading.
struct InvariantTuple {
  std::size_t order = 0;
  std::size_t gamma_size = 0;
  std::size_t ideals = 0;
  std::size_t congruences = 0;
  std::size_t radical_nonzero = 0;
  std::size_t nil_nonzero = 0;

  std::array<std::size_t, 6> as_array() const {
    return {order, gamma_size, ideals, congruences, radical_nonzero, nil_nonzero};
  }
  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
  friend auto operator<=>(const InvariantTuple&, const InvariantTuple&) = default;
};

InvariantTuple invariant_tuple(const TernaryGammaSemiring& ts);

}  // namespace tgs
