#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgs/core.hpp"
#include "tgs/ideals.hpp"

namespace tgs {

struct IrreducibilityReport {
  bool trivial = false;  // one-element carrier; never SI
  bool irreducible = false;
  std::optional<Congruence> monolith;
};

// SI iff the nontrivial congruences have a least element.
IrreducibilityReport is_subdirectly_irreducible(const TernaryGammaSemiring& ts);
IrreducibilityReport is_subdirectly_irreducible(const CongruenceLattice& con);

enum class DecompositionStrategy { maximal_congruences, meet_irreducible };

std::string_view strategy_name(DecompositionStrategy strategy);
std::optional<DecompositionStrategy> parse_strategy(std::string_view name);

struct SubdirectFactor {
  Congruence congruence;
  TernaryGammaSemiring structure;
  bool irreducible = false;
  bool simple = false;
};

struct SubdirectDecomposition {
  DecompositionStrategy strategy = DecompositionStrategy::meet_irreducible;
  std::vector<SubdirectFactor> factors;
  // embedding[a][i] is the class of a in factor i.
  std::vector<std::vector<Element>> embedding;
  bool injective = false;
  std::optional<std::pair<Element, Element>> collision;  // distinct elements with equal images
  Congruence kernel;  // meet of the factor congruences
};

SubdirectDecomposition subdirect_decomposition(const TernaryGammaSemiring& ts,
                                               DecompositionStrategy strategy);

enum class Verdict { holds, fails };
std::string_view verdict_name(Verdict verdict);

// T against Rad(T) x T/Rad(T), and the ideal-count factorization.
struct WedderburnReport {
  IdealSet radical;
  std::size_t radical_order = 0;
  std::size_t quotient_order = 0;
  Verdict isomorphism = Verdict::fails;
  std::optional<std::vector<Element>> isomorphism_map;  // T -> product when it holds
  std::string failure;                                  // reason when it fails
  std::size_t ideals = 0;
  std::size_t radical_ideals = 0;
  std::size_t quotient_ideals = 0;
  Verdict lattice_factorization = Verdict::fails;
};

WedderburnReport wedderburn_check(const TernaryGammaSemiring& ts);

enum class Pattern { simple, idempotent_boolean, subdirectly_decomposable, other };
std::string_view pattern_name(Pattern pattern);

struct PatternLabel {
  Pattern label = Pattern::other;
  std::size_t congruences = 0;
  std::size_t ideals = 0;
  bool congruence_simple = false;
  bool ideal_simple = false;  // exactly two ideals
  bool idempotent_boolean = false;
  bool subdirectly_irreducible = false;
  // Congruence lattice in partition form; filled when the label is other.
  std::vector<Congruence> congruence_dump;
};

PatternLabel classify_pattern(const TernaryGammaSemiring& ts);

// "All subdirect factors simple" against "Rad(T) = {0}".
struct SemisimplicityReadings {
  bool factors_simple = false;
  bool semiprime = false;
  bool agree() const { return factors_simple == semiprime; }
};

SemisimplicityReadings semisimplicity_readings(const TernaryGammaSemiring& ts);

}  // namespace tgs
