#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tgs/core.hpp"

namespace tgs {

inline constexpr std::size_t kMaxIdealOrder = 24;
inline constexpr std::size_t kMaxCongruenceOrder = 8;

// Contains 0, closed under +, and absorbs ternary products in every
// argument position (commutativity is not assumed).
bool is_ideal(const TernaryGammaSemiring& ts, IdealSet set);

// Least ideal containing the given elements.
IdealSet ideal_generate(const TernaryGammaSemiring& ts, IdealSet generators);

struct CompatibilityWitness {
  std::string operation;  // "add" or a gamma label
  unsigned position = 0;  // argument slot that was varied
  Element first = 0;      // related pair placed in that slot
  Element second = 0;
  std::vector<Element> others;
  Element lhs = 0;
  Element rhs = 0;
};

// Compatibility of a partition with + and every ternary operation.
std::optional<CompatibilityWitness> compatibility_violation(const TernaryGammaSemiring& ts,
                                                            const Congruence& rho);
inline bool is_congruence(const TernaryGammaSemiring& ts, const Congruence& rho) {
  return !compatibility_violation(ts, rho).has_value();
}

struct LatticeWitness {
  std::size_t x = 0, y = 0, z = 0;
};

// Finite lattice on indices 0..size-1 with tabulated join and meet.
struct LatticeReport {
  std::size_t size = 0;
  std::vector<std::size_t> join;  // size * size
  std::vector<std::size_t> meet;
  std::size_t bottom = 0;
  std::size_t top = 0;
  bool is_modular = true;
  std::optional<LatticeWitness> modular_witness;
  bool is_distributive = true;
  std::optional<LatticeWitness> distributive_witness;

  std::size_t join_of(std::size_t x, std::size_t y) const { return join[x * size + y]; }
  std::size_t meet_of(std::size_t x, std::size_t y) const { return meet[x * size + y]; }
  bool leq(std::size_t x, std::size_t y) const { return meet_of(x, y) == x; }
  // Pairs (lower, upper) of the Hasse diagram.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
};

// Fills the modularity and distributivity flags by brute force.
void audit_lattice(LatticeReport& lattice);

struct IdealLattice {
  std::vector<IdealSet> ideals;  // sorted by (size, bits)
  LatticeReport lattice;
};

struct CongruenceLattice {
  std::vector<Congruence> congruences;  // diagonal first, full last
  LatticeReport lattice;

  std::size_t diagonal_index() const { return 0; }
  std::size_t full_index() const { return congruences.size() - 1; }
};

IdealLattice all_ideals(const TernaryGammaSemiring& ts);
CongruenceLattice all_congruences(const TernaryGammaSemiring& ts,
                                  std::size_t max_order = kMaxCongruenceOrder);

// Binary relation on the carrier as an adjacency bitmask per element.
struct Relation {
  std::size_t n = 0;
  std::vector<std::uint64_t> rows;

  bool related(std::size_t a, std::size_t b) const { return (rows[a] >> b) & 1U; }
  bool contains(const Relation& other) const;
  friend bool operator==(const Relation&, const Relation&) = default;
};

Relation relation_of(const Congruence& rho);

struct CorrespondenceEntry {
  IdealSet ideal;
  Relation relation;
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool is_congruence = false;
  std::optional<std::pair<Element, Element>> reflexive_witness;  // (a, a) missing
  std::optional<std::array<Element, 3>> transitive_witness;      // a~b, b~c, not a~c
  std::optional<CompatibilityWitness> compatibility_witness;
};

// Audit of I -> rho_I where a rho_I b iff {a b c}_g lies in I for all c, g.
struct CorrespondenceReport {
  std::vector<CorrespondenceEntry> entries;
  bool injective = true;
  std::optional<std::pair<std::size_t, std::size_t>> injective_witness;  // ideal indices
  bool order_reversing = true;
  std::optional<std::pair<std::size_t, std::size_t>> order_witness;  // I <= J, rho_I !>= rho_J
  bool surjective = true;
  std::optional<std::size_t> surjective_witness;  // congruence index not hit
  bool bijective() const { return injective && surjective; }
};

CorrespondenceReport correspondence_report(const TernaryGammaSemiring& ts);
CorrespondenceReport correspondence_report(const TernaryGammaSemiring& ts,
                                           const IdealLattice& ideals,
                                           const CongruenceLattice& congruences);

}  // namespace tgs
