#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tgs/decomposition.hpp"
#include "tgs/radical.hpp"
#include "tgs/spectrum.hpp"

using namespace tgs;
using testing::bao;
using testing::zero_op;

namespace {

TernaryGammaSemiring bao2() { return direct_product(bao(), bao()); }

}  // namespace

TEST_CASE("subdirect irreducibility") {
  auto one = is_subdirectly_irreducible(zero_op(1));
  CHECK(one.trivial);
  CHECK_FALSE(one.irreducible);
  auto b = is_subdirectly_irreducible(bao());
  CHECK(b.irreducible);
  REQUIRE(b.monolith.has_value());
  CHECK(b.monolith->is_full());
  CHECK_FALSE(is_subdirectly_irreducible(bao2()).irreducible);
}

TEST_CASE("subdirect decompositions") {
  for (auto strategy : {DecompositionStrategy::meet_irreducible,
                        DecompositionStrategy::maximal_congruences}) {
    auto d = subdirect_decomposition(bao2(), strategy);
    CHECK(d.injective);
    REQUIRE(d.factors.size() == 2);
    for (const auto& f : d.factors) CHECK(are_isomorphic(f.structure, bao()).has_value());
    CHECK(d.kernel.is_diagonal());
    CHECK(parse_strategy(strategy_name(strategy)) == strategy);
  }
  auto one = subdirect_decomposition(zero_op(1), DecompositionStrategy::meet_irreducible);
  CHECK(one.factors.empty());
  CHECK(one.injective);
}

TEST_CASE("meet-irreducible decompositions embed every small structure") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 2; ++m)
      for (const auto& e : testing::strict_catalog(n, m).entries) {
        auto d = subdirect_decomposition(e.structure, DecompositionStrategy::meet_irreducible);
        CHECK(d.injective);
        for (const auto& f : d.factors) {
          CHECK(f.irreducible);
          CHECK(is_subdirectly_irreducible(f.structure).irreducible);
        }
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            for (std::size_t i = 0; i < d.factors.size(); ++i)
              CHECK((d.embedding[a][i] == d.embedding[b][i]) ==
                    d.factors[i].congruence.related(a, b));
      }
}

TEST_CASE("wedderburn check") {
  auto b = wedderburn_check(bao());
  CHECK(b.isomorphism == Verdict::holds);
  auto z = wedderburn_check(zero_op(3));
  CHECK(z.radical_order == 3);
  CHECK(z.quotient_order == 1);
  CHECK(z.isomorphism == Verdict::holds);
  CHECK(wedderburn_check(bao2()).isomorphism == Verdict::holds);
  for (const auto& e : testing::strict_catalog(3, 1).entries) {
    auto w = wedderburn_check(e.structure);
    if (w.isomorphism == Verdict::fails) CHECK_FALSE(w.failure.empty());
    if (radical(e.structure).semiprime) CHECK(w.isomorphism == Verdict::holds);
  }
}

TEST_CASE("pattern labels") {
  CHECK(classify_pattern(bao()).label == Pattern::simple);
  auto p = classify_pattern(bao2());
  CHECK(p.label == Pattern::idempotent_boolean);
  CHECK_FALSE(p.subdirectly_irreducible);
  auto z = classify_pattern(zero_op(2));
  CHECK(z.congruences == 2);
  CHECK(z.label == Pattern::simple);
  for (const auto& e : testing::strict_catalog(3, 1).entries) {
    auto label = classify_pattern(e.structure);
    CHECK(label.congruence_dump.empty() == (label.label != Pattern::other));
  }
}

TEST_CASE("semisimplicity readings") {
  auto b = semisimplicity_readings(bao());
  CHECK(b.factors_simple);
  CHECK(b.semiprime);
  CHECK(b.agree());
}

TEST_CASE("spectra of named structures") {
  auto b = spec_closed_sets(bao());
  REQUIRE(b.primes.size() == 1);
  CHECK(b.primes[0] == IdealSet::zero());
  CHECK(b.closed_sets.size() == 2);
  CHECK(b.anti_isomorphism);
  auto z = spec_closed_sets(zero_op(3));
  CHECK(z.empty_spectrum());
  CHECK(z.closed_sets.size() == 1);
  CHECK(spec_closed_sets(zero_op(1)).empty_spectrum());

  CHECK(krull_dimension(bao()) == 0);
  CHECK(krull_dimension(zero_op(3)) == kEmptySpectrumDimension);
  CHECK(krull_dimension(bao2()) == 0);
  CHECK(spec_closed_sets(bao2()).primes.size() == 2);
}

TEST_CASE("spectrum audits over small catalogs") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 2; ++m)
      for (const auto& e : testing::strict_catalog(n, m).entries) {
        auto s = spec_closed_sets(e.structure);
        CHECK(s.contains_empty);
        CHECK(s.contains_full);
        CHECK(s.closed_under_union);
        CHECK(s.closed_under_intersection);
        CHECK(s.v_order_reversing);
        CHECK(s.ideal_closure_ok);
        CHECK(s.set_closure_ok);
        for (std::size_t i = 0; i < s.ideals.size(); ++i)
          for (std::size_t j = 0; j < s.ideals.size(); ++j)
            if (s.ideals[i].subset_of(s.ideals[j]))
              CHECK((s.v_of_ideal[j] & ~s.v_of_ideal[i]) == 0);
        auto moved = relabel(e.structure, testing::random_relabeling(n, rng));
        CHECK(krull_dimension(moved) == krull_dimension(e.structure));
        auto d = dimension_report(e.structure);
        CHECK(d.quotient_zero_dimensional == (d.quotient_dimension <= 0));
        if (!d.quotient_zero_dimensional) {
          auto q = quotient(e.structure, radical(e.structure).radical).structure;
          auto raw = testing::to_raw(q);
          CHECK(d.quotient_chain.size() == std::size_t(d.quotient_dimension + 1));
          for (auto p : d.quotient_chain) CHECK(oracle::prime(raw, p.bits()));
        }
        CHECK(prime_avoidance_check(e.structure, AvoidanceVariant::intersection_as_printed)
                  .passes());
      }
}

TEST_CASE("a semiprime structure with a chain of primes") {
  // + saturates at 1 except 0 + x = x; {a b c} = 2 when a = b = c = 2, 0 with
  // a 0 argument, else 1.
  std::vector<Element> t(27, 1);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c)
        if (a == 0 || b == 0 || c == 0) t[(a * 3 + b) * 3 + c] = 0;
  t[26] = 2;
  TernaryGammaSemiring ts(3, {"1"}, {0, 1, 2, 1, 1, 1, 2, 1, 1}, {t});
  REQUIRE(check_axioms(ts, AxiomMode::strict()).all_pass());
  auto r = radical(ts);
  CHECK(r.radical == IdealSet::zero());
  CHECK(r.primes == std::vector<IdealSet>{IdealSet::zero(), IdealSet::from_elements({0, 1})});
  auto d = dimension_report(ts);
  CHECK(d.dimension == 1);
  CHECK(d.quotient_dimension == 1);
  CHECK_FALSE(d.quotient_zero_dimensional);
}

TEST_CASE("prime avoidance") {
  CHECK(prime_avoidance_check(bao(), AvoidanceVariant::union_of_primes).passes());
  CHECK(prime_avoidance_check(bao2(), AvoidanceVariant::intersection_as_printed).passes());
  CHECK(parse_avoidance_variant("union") == AvoidanceVariant::union_of_primes);
  CHECK(parse_avoidance_variant("intersection") == AvoidanceVariant::intersection_as_printed);
}

TEST_CASE("prime contraction") {
  auto id = contract_primes({bao2(), bao2(), {0, 1, 2, 3}});
  CHECK(id.well_defined);
  REQUIRE(id.continuous.has_value());
  CHECK(*id.continuous);
  CHECK(id.injective);
  CHECK(id.surjective);

  // (x, y) -> x.
  auto first = contract_primes({bao2(), bao(), {0, 0, 1, 1}});
  REQUIRE(first.contractions.size() == 1);
  CHECK(first.contractions[0].preimage == IdealSet::from_elements({0, 1}));
  CHECK(first.contractions[0].prime);

  auto to_one = contract_primes({bao(), zero_op(1), {0, 0}});
  CHECK(to_one.contractions.empty());
  CHECK(to_one.well_defined);

  CHECK_THROWS_AS(contract_primes({bao(), zero_op(2, AdditiveKind::max), {0, 1}}),
                  InvalidStructure);
}
