#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tgs/types.hpp"

namespace tgs {

// A finite carrier with a binary addition and one ternary operation per
// parameter label. Tables are fully materialized; tensors are stored
// row-major as a*n*n + b*n + c.
class TernaryGammaSemiring {
 public:
  TernaryGammaSemiring(std::size_t n, std::vector<std::string> gamma, std::vector<Element> add,
                       std::vector<std::vector<Element>> ops);

  std::size_t order() const noexcept { return n_; }
  std::size_t gamma_size() const noexcept { return gamma_.size(); }
  const std::vector<std::string>& gamma() const noexcept { return gamma_; }

  // Throws InvalidStructure for unknown labels.
  std::size_t gamma_index(std::string_view label) const;

  Element add(std::size_t a, std::size_t b) const noexcept { return add_[a * n_ + b]; }
  Element op(std::size_t g, std::size_t a, std::size_t b, std::size_t c) const noexcept {
    return ops_[g][(a * n_ + b) * n_ + c];
  }

  std::span<const Element> add_table() const noexcept { return add_; }
  std::span<const Element> op_table(std::size_t g) const { return ops_.at(g); }

  friend bool operator==(const TernaryGammaSemiring&, const TernaryGammaSemiring&) = default;

 private:
  std::size_t n_;
  std::vector<std::string> gamma_;
  std::vector<Element> add_;
  std::vector<std::vector<Element>> ops_;
};

// Range-checked evaluation of {a b c}_label.
Element evaluate(const TernaryGammaSemiring& ts, std::string_view label, std::size_t a,
                 std::size_t b, std::size_t c);
Element evaluate(const TernaryGammaSemiring& ts, std::size_t gamma, std::size_t a, std::size_t b,
                 std::size_t c);

// ---------------------------------------------------------------------------
// Axioms

enum class Axiom : std::uint8_t { T1, T2, T3, T4, C };

inline constexpr std::array<Axiom, 5> kAllAxioms = {Axiom::T1, Axiom::T2, Axiom::T3, Axiom::T4,
                                                    Axiom::C};

std::string_view axiom_name(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view name);

class AxiomMode {
 public:
  // T1 is always part of the mode.
  AxiomMode() : bits_(all_bits()) {}
  static AxiomMode strict() { return AxiomMode(); }
  static AxiomMode relaxed();
  static AxiomMode of(std::initializer_list<Axiom> axioms);

  bool enabled(Axiom axiom) const noexcept { return (bits_ >> static_cast<unsigned>(axiom)) & 1U; }
  std::vector<Axiom> axioms() const;

  // "strict", "relaxed", or a comma list such as "T1,T2,C".
  std::string name() const;
  static AxiomMode parse(std::string_view text);

  friend bool operator==(AxiomMode, AxiomMode) = default;

 private:
  explicit AxiomMode(unsigned bits) : bits_(bits) {}
  static constexpr unsigned all_bits() { return 0x1FU; }
  unsigned bits_;
};

// Which sub-condition of an axiom a witness refers to.
//   T1: 0 associativity (a,b,c), 1 commutativity (a,b), 2 left identity (a),
//       3 right identity (a).
//   T2: argument slot 0..2; args = (a,b,c,d) for {a+b, c, d} in that slot.
//   T3: argument slot 0..2; args = full triple with 0 in the slot.
//   T4: args = (a,b,c,d,e), gammas = (alpha, beta).
//   C:  permutation index 1..5 applied to args = (a,b,c).
struct AxiomWitness {
  std::vector<Element> args;
  std::vector<std::size_t> gammas;
  unsigned variant = 0;
  Element lhs = 0;
  Element rhs = 0;

  friend bool operator==(const AxiomWitness&, const AxiomWitness&) = default;
};

struct AxiomResult {
  Axiom axiom;
  bool pass = true;
  std::uint64_t violations = 0;
  std::vector<AxiomWitness> witnesses;
};

struct AxiomReport {
  AxiomMode mode;
  std::vector<AxiomResult> results;

  bool all_pass() const;
  const AxiomResult* find(Axiom axiom) const;
};

// Exhaustive check of every enabled axiom, keeping the first max_witnesses
// witnesses per failing axiom along with the total violation count.
AxiomReport check_axioms(const TernaryGammaSemiring& ts, AxiomMode mode,
                         std::size_t max_witnesses = 10);

// Early-exit variant of check_axioms.
bool satisfies(const TernaryGammaSemiring& ts, AxiomMode mode);
bool satisfies(const TernaryGammaSemiring& ts, Axiom axiom);

// Recomputes (lhs, rhs) for a reported witness directly from the tables.
std::pair<Element, Element> evaluate_witness(const TernaryGammaSemiring& ts, Axiom axiom,
                                             const AxiomWitness& witness);

// ---------------------------------------------------------------------------
// Named constructions

enum class NamedKind { modular, truncated_sum, max_op, boolean_table2, boolean_and_or, zero_op };
enum class AdditiveKind { modular, max, truncated };

struct NamedParams {
  // Defaults to the addition native to the kind.
  std::optional<AdditiveKind> add;
  // For truncated_sum with two labels the second operation is max(a,b,c),
  // labels "alpha" and "beta". Other kinds repeat the same operation.
  std::size_t gamma_size = 1;
};

std::optional<NamedKind> parse_named_kind(std::string_view name);
std::string_view named_kind_name(NamedKind kind);

std::vector<Element> additive_table(AdditiveKind kind, std::size_t n);

TernaryGammaSemiring build_named(NamedKind kind, std::size_t n, const NamedParams& params = {});

// ---------------------------------------------------------------------------
// Constructions between structures

struct Homomorphism {
  TernaryGammaSemiring source;
  TernaryGammaSemiring target;
  std::vector<Element> map;
};

struct QuotientResult {
  TernaryGammaSemiring structure;
  Congruence congruence;
  Homomorphism projection;
};

// Componentwise product; (x, y) is encoded as x * n2 + y.
TernaryGammaSemiring direct_product(const TernaryGammaSemiring& first,
                                    const TernaryGammaSemiring& second);

// Renumbers blocks by least representative. Throws IllDefinedQuotient when
// the partition is not compatible with the operations.
QuotientResult quotient(const TernaryGammaSemiring& ts, const Congruence& by);

// a ~ b iff a + i = b + j for some i, j in the ideal, transitively closed.
Congruence bourne_congruence(const TernaryGammaSemiring& ts, IdealSet ideal);
QuotientResult quotient(const TernaryGammaSemiring& ts, IdealSet by);

// Substructure on a subset closed under all operations, renumbered in
// ascending order (0 stays 0).
TernaryGammaSemiring restrict_to(const TernaryGammaSemiring& ts, IdealSet subset);

struct HomomorphismWitness {
  // "zero", "add" or the gamma label that failed.
  std::string operation;
  std::vector<Element> args;
  Element lhs = 0;
  Element rhs = 0;
};

struct HomomorphismCheck {
  bool ok = false;
  std::optional<HomomorphismWitness> witness;
  std::optional<IdealSet> kernel;
};

HomomorphismCheck is_homomorphism(const TernaryGammaSemiring& source,
                                  const TernaryGammaSemiring& target,
                                  const std::vector<Element>& map);

// Relabels the carrier by phi (old element -> new element); phi[0] must be 0.
TernaryGammaSemiring relabel(const TernaryGammaSemiring& ts, const std::vector<Element>& phi);

}  // namespace tgs
