#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "tgs/core.hpp"

namespace tgs {

using Vector = std::vector<Element>;

// ---------------------------------------------------------------------------
// Gamma-linear codes

inline constexpr std::uint64_t kDefaultCodeBudget = 1'000'000;

struct GammaLinearCode {
  std::size_t length = 0;
  std::vector<Vector> codewords;  // sorted, distinct
};

// Least set containing the generators and closed under componentwise + and
// every componentwise ternary operation.
GammaLinearCode code_generate(const TernaryGammaSemiring& ts, std::size_t length,
                              const std::vector<Vector>& generators,
                              std::uint64_t budget = kDefaultCodeBudget);

bool is_gamma_linear(const TernaryGammaSemiring& ts, const GammaLinearCode& code);

// Coordinates different from 0.
std::size_t hamming_weight(const Vector& x);

struct WeightReport {
  IdealSet radical;
  std::size_t quotient_order = 0;
  bool projection_injective = false;
  std::vector<std::uint64_t> plain;      // C, coordinates != 0
  std::vector<std::uint64_t> coset;      // C, coordinates outside the class of 0
  std::vector<std::uint64_t> projected;  // image of C in S^l
  bool plain_equal = false;
  bool coset_equal = false;
  std::optional<Vector> plain_witness;  // codeword whose weight changes under projection
  // Over the group difference when + is a group, else the sum pseudo-metric.
  bool group_metric = false;
  std::optional<std::size_t> minimum_distance;
};

WeightReport weight_report(const TernaryGammaSemiring& ts, const GammaLinearCode& code);

struct CheckOperator {
  std::size_t gamma = 0;
  Vector u;
  Vector v;
};

// H(x) = {u x v}_gamma componentwise.
Vector apply_check(const TernaryGammaSemiring& ts, const CheckOperator& h, const Vector& x);

struct SyndromeSide {
  std::size_t order = 0;
  GammaLinearCode kernel;
  std::size_t classes = 0;
  std::vector<std::uint64_t> class_sizes;  // sorted descending
  bool partition_ok = false;               // disjoint and covering
  std::optional<std::size_t> minimum_distance;
};

struct CheckCodeReport {
  SyndromeSide source;
  SyndromeSide quotient;  // induced checks over S = T/Rad(T)
  bool same_partition_size = false;
  bool same_minimum_distance = false;
};

CheckCodeReport check_code(const TernaryGammaSemiring& ts, std::size_t length,
                           const std::vector<CheckOperator>& checks,
                           std::uint64_t budget = kDefaultCodeBudget);

// ---------------------------------------------------------------------------
// Differential profiles of F(x, y, z) = {x y z}_gamma

struct SBoxProfile {
  std::size_t order = 0;
  std::size_t gamma = 0;
  // counts[((a * n + b) * n + c) * n + d]: triples (x, y, z) with
  // {x+a, y+b, z+c} = {x, y, z} + d.
  std::vector<std::uint64_t> counts;
  std::uint64_t uniformity = 1;
  std::optional<std::array<Element, 4>> worst;  // (a, b, c, d) attaining it
  bool group_reduct = false;
  // Every row sums to n^3; asserted for group reducts.
  bool partition_property = false;
  std::uint64_t max_row_sum = 0;

  std::uint64_t count(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return counts[((a * order + b) * order + c) * order + d];
  }
};

SBoxProfile sbox_differential_profile(const TernaryGammaSemiring& ts, std::size_t gamma);

struct LiftReport {
  SBoxProfile source;
  SBoxProfile quotient;
  bool same_uniformity = false;
};

LiftReport sbox_lift_report(const TernaryGammaSemiring& ts, std::size_t gamma);

// True when (T, +) has inverses.
bool additive_group(const TernaryGammaSemiring& ts);

// ---------------------------------------------------------------------------
// Fuzzy ideals

using Grade = boost::rational<long long>;

struct FuzzyWitness {
  std::string condition;  // "add" or "product"
  std::vector<Element> args;
  std::string gamma;
};

struct LevelCut {
  Grade level;
  IdealSet members;
  bool ideal = false;
};

struct FuzzyReport {
  bool fuzzy_ideal = false;
  std::optional<FuzzyWitness> witness;
  std::vector<LevelCut> cuts;  // one per distinct positive grade, descending
  LevelCut support;            // grades above 0
  bool all_cuts_ideals = false;
};

// Throws InvalidStructure for grades outside [0, 1] or a wrong count.
FuzzyReport fuzzy_ideal_check(const TernaryGammaSemiring& ts, const std::vector<Grade>& grades);

struct ChainReconstruction {
  std::vector<Grade> grades;
  FuzzyReport check;
  bool round_trip = false;  // cuts at the chain's levels give back the chain
};

// mu(a) = max level whose ideal contains a (0 when none). Throws
// InvalidStructure unless levels lie in (0, 1] and higher levels carry
// smaller ideals.
ChainReconstruction fuzzy_from_chain(const TernaryGammaSemiring& ts,
                                     const std::vector<std::pair<Grade, IdealSet>>& chain);

Grade parse_grade(std::string_view text);
std::string format_grade(const Grade& g);

// ---------------------------------------------------------------------------
// Path values over weighted digraphs

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  Element weight = 0;
};

struct WeightedGraph {
  std::size_t vertices = 0;
  std::vector<Edge> edges;
};

// "vertices N" followed by "src dst weight" lines; '#' starts a comment.
WeightedGraph parse_graph(std::string_view text, std::size_t order);

using PathMatrix = std::vector<std::optional<Element>>;  // row-major |V| x |V|

struct PathReport {
  std::size_t vertices = 0;
  PathMatrix join;   // add-join of walk weights
  PathMatrix value;  // {A A A}_gamma
  std::size_t iterations = 0;
  std::size_t horizon = 0;
  bool stabilized = false;
};

// Requires idempotent +; throws Error otherwise. horizon 0 means |V| * n.
PathReport ternary_path_values(const TernaryGammaSemiring& ts, std::size_t gamma,
                               const WeightedGraph& graph, std::size_t horizon = 0);

struct PathCrossCheck {
  std::size_t vertices = 0;
  PathMatrix explicit_value;  // join of {p q r} over all triples of walk weights
  bool agrees = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Enumerates reachable (vertex, walk weight) states and every triple of walk
// weights per vertex pair.
PathCrossCheck path_triple_check(const TernaryGammaSemiring& ts, std::size_t gamma,
                                 const WeightedGraph& graph, const PathReport& report);

}  // namespace tgs
