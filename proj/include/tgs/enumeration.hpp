#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgs/core.hpp"
#include "tgs/radical.hpp"

namespace tgs {

// Lexicographically least serialization add || M_1 || ... || M_m over all
// relabelings fixing 0 (and, optionally, all reorderings of the gamma index).
struct CanonicalForm {
  std::size_t order = 0;
  std::size_t gamma_size = 0;
  std::vector<std::uint8_t> bytes;
  bool permuted_gamma = false;
  // One relabeling (old -> new) and gamma order reaching the minimum.
  std::vector<Element> relabeling;
  std::vector<std::size_t> gamma_order;

  std::string hex() const;
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes == b.bytes && a.permuted_gamma == b.permuted_gamma;
  }
};

inline constexpr std::size_t kMaxCanonicalOrder = 9;

CanonicalForm canonical_form(const TernaryGammaSemiring& ts, bool permute_gamma = false);

// Rebuilds the structure from its serialization, using the given labels.
TernaryGammaSemiring from_bytes(std::size_t n, std::vector<std::string> gamma,
                                const std::vector<std::uint8_t>& bytes);

struct Isomorphism {
  std::vector<Element> map;           // first -> second
  std::vector<std::size_t> gamma_map; // gamma g of first corresponds to gamma_map[g] of second
};

// Backtracking search for a bijection fixing 0 that preserves + and every
// ternary operation. Throws InvalidStructure on size mismatch.
std::optional<Isomorphism> are_isomorphic(const TernaryGammaSemiring& first,
                                          const TernaryGammaSemiring& second,
                                          bool permute_gamma = false);

// Checks that iso maps first onto second.
bool is_isomorphism(const TernaryGammaSemiring& first, const TernaryGammaSemiring& second,
                    const Isomorphism& iso);

// Commutative monoid tables with identity 0, one per isomorphism class,
// sorted by table bytes (each is its own canonical form).
inline constexpr std::size_t kMaxMonoidOrder = 6;
std::vector<std::vector<Element>> enumerate_additive_monoids(std::size_t n);

struct CatalogEntry {
  CanonicalForm canonical;
  TernaryGammaSemiring structure;
  InvariantTuple invariants;
  AxiomMode mode;
  // Deterministic search-branch id "r<reduct>/v<first value>/<leaf>".
  std::string branch;
};

struct SearchStats {
  std::uint64_t explored_nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t accepted = 0;  // leaves passing the full axiom check
};

struct Catalog {
  std::size_t order = 0;
  std::size_t gamma_size = 0;
  AxiomMode mode;
  bool permute_gamma = false;
  std::size_t additive_reducts = 0;
  std::vector<CatalogEntry> entries;  // sorted by canonical bytes
  SearchStats stats;
};

struct EnumerationOptions {
  std::size_t max_order = 4;
  std::size_t max_gamma = 2;
  bool permute_gamma = false;
  unsigned jobs = 1;
};

// Pruned exhaustive search. The mode must include T1 and C (tensors are
// searched over multisets). Throws BoundExceeded outside the configured bounds.
Catalog enumerate_structures(std::size_t n, std::size_t m, AxiomMode mode,
                             const EnumerationOptions& options = {});

// Standard gamma labels used for enumerated structures: "1", "2", ...
std::vector<std::string> default_gamma_labels(std::size_t m);

}  // namespace tgs
