#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "tgs/enumeration.hpp"

using namespace tgs;
using testing::bao;
using testing::zero_op;

namespace {

std::set<std::vector<std::uint8_t>> canonical_set(const Catalog& catalog) {
  std::set<std::vector<std::uint8_t>> out;
  for (const auto& e : catalog.entries) out.insert(e.canonical.bytes);
  return out;
}

}  // namespace

TEST_CASE("additive monoids against the brute-force count") {
  CHECK(enumerate_additive_monoids(1).size() == 1);
  CHECK(enumerate_additive_monoids(2).size() == 2);
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(enumerate_additive_monoids(n).size() == oracle::monoid_classes(n));
  CHECK(enumerate_additive_monoids(5).size() == 78);
  CHECK_THROWS_AS(enumerate_additive_monoids(kMaxMonoidOrder + 1), BoundExceeded);
}

TEST_CASE("monoid tables are commutative monoids with identity 0") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& add : enumerate_additive_monoids(n)) {
      TernaryGammaSemiring ts(n, {"1"}, add, {std::vector<Element>(n * n * n, 0)});
      CHECK(satisfies(ts, Axiom::T1));
    }
}

TEST_CASE("canonical form matches the oracle") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& e : testing::strict_catalog(n, 1).entries) {
      auto cf = canonical_form(e.structure);
      CHECK(cf.bytes == oracle::canonical_bytes(testing::to_raw(e.structure)));
      CHECK(canonical_form(from_bytes(n, e.structure.gamma(), cf.bytes)).bytes == cf.bytes);
      auto moved = relabel(e.structure, testing::random_relabeling(n, rng));
      CHECK(canonical_form(moved).bytes == cf.bytes);
    }
}

TEST_CASE("canonical relabeling reaches the minimum") {
  auto ts = build_named(NamedKind::max_op, 3);
  auto cf = canonical_form(ts);
  CHECK(cf.relabeling.front() == 0);
  auto r = relabel(ts, cf.relabeling);
  auto bytes = std::vector<std::uint8_t>(r.add_table().begin(), r.add_table().end());
  bytes.insert(bytes.end(), r.op_table(0).begin(), r.op_table(0).end());
  CHECK(bytes == cf.bytes);
}

TEST_CASE("are_isomorphic") {
  auto ts = build_named(NamedKind::max_op, 3);
  auto self = are_isomorphic(ts, ts);
  REQUIRE(self.has_value());
  CHECK(is_isomorphism(ts, ts, *self));
  auto moved = relabel(ts, {0, 2, 1});
  auto iso = are_isomorphic(ts, moved);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism(ts, moved, *iso));
  CHECK_FALSE(are_isomorphic(bao(), zero_op(2, AdditiveKind::max)).has_value());
  CHECK_THROWS_AS(are_isomorphic(bao(), ts), InvalidStructure);
}

TEST_CASE("isomorphism agrees with canonical equality") {
  const auto& cat = testing::strict_catalog(3, 1);
  std::mt19937_64 rng(5);
  for (std::size_t i = 0; i < cat.entries.size(); ++i)
    for (std::size_t j = 0; j < cat.entries.size(); ++j) {
      auto a = cat.entries[i].structure;
      auto b = relabel(cat.entries[j].structure, testing::random_relabeling(3, rng));
      CHECK(are_isomorphic(a, b).has_value() == (i == j));
    }
}

TEST_CASE("gamma permutation") {
  auto ts = build_named(NamedKind::truncated_sum, 4, {{}, 2});
  TernaryGammaSemiring swapped(4, {"alpha", "beta"},
                               {ts.add_table().begin(), ts.add_table().end()},
                               {{ts.op_table(1).begin(), ts.op_table(1).end()},
                                {ts.op_table(0).begin(), ts.op_table(0).end()}});
  CHECK_FALSE(are_isomorphic(ts, swapped).has_value());
  auto iso = are_isomorphic(ts, swapped, true);
  REQUIRE(iso.has_value());
  CHECK(iso->gamma_map == std::vector<std::size_t>{1, 0});
  CHECK(canonical_form(ts, true) == canonical_form(swapped, true));
  CHECK_FALSE(canonical_form(ts) == canonical_form(swapped));
}

TEST_CASE("small catalogs") {
  CHECK(enumerate_structures(1, 1, AxiomMode::strict()).entries.size() == 1);
  const auto& cat = testing::strict_catalog(2, 1);
  auto set = canonical_set(cat);
  CHECK(set.count(canonical_form(bao()).bytes) == 1);
  CHECK(set.count(canonical_form(zero_op(2, AdditiveKind::max)).bytes) == 1);
  CHECK(set.count(canonical_form(zero_op(2, AdditiveKind::modular)).bytes) == 1);
  CHECK(cat.additive_reducts == 2);
}

TEST_CASE("pruned search equals the filter-everything oracle") {
  const std::vector<std::pair<std::size_t, std::size_t>> cases{{1, 1}, {2, 1}, {2, 2}, {3, 1}};
  for (auto [n, m] : cases)
    for (bool strict : {true, false}) {
      CAPTURE(n);
      CAPTURE(m);
      CAPTURE(strict);
      auto mode = strict ? AxiomMode::strict() : AxiomMode::relaxed();
      auto cat = enumerate_structures(n, m, mode);
      CHECK(canonical_set(cat) == oracle::filter_everything(n, m, strict));
    }
}

TEST_CASE("catalog entries are sound and distinct") {
  for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {4, 1}}) {
    const auto& cat = testing::strict_catalog(n, m);
    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& e : cat.entries) {
      CHECK(oracle::axioms_hold(testing::to_raw(e.structure), true));
      CHECK(canonical_form(e.structure) == e.canonical);
      CHECK(e.invariants == invariant_tuple(e.structure));
      CHECK(seen.insert(e.canonical.bytes).second);
    }
    CHECK(std::is_sorted(cat.entries.begin(), cat.entries.end(),
                         [](const auto& a, const auto& b) {
                           return a.canonical.bytes < b.canonical.bytes;
                         }));
  }
}

TEST_CASE("worker count does not change the catalog") {
  auto one = enumerate_structures(3, 2, AxiomMode::strict());
  EnumerationOptions options;
  options.jobs = 8;
  auto eight = enumerate_structures(3, 2, AxiomMode::strict(), options);
  REQUIRE(one.entries.size() == eight.entries.size());
  for (std::size_t i = 0; i < one.entries.size(); ++i) {
    CHECK(one.entries[i].canonical == eight.entries[i].canonical);
    CHECK(one.entries[i].branch == eight.entries[i].branch);
  }
}

TEST_CASE("permuted-gamma catalogs merge label swaps") {
  EnumerationOptions options;
  options.permute_gamma = true;
  auto merged = enumerate_structures(2, 2, AxiomMode::strict(), options);
  std::set<std::vector<std::uint8_t>> classes;
  for (const auto& e : testing::strict_catalog(2, 2).entries)
    classes.insert(canonical_form(e.structure, true).bytes);
  CHECK(merged.entries.size() == classes.size());
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(enumerate_structures(5, 1, AxiomMode::strict()), BoundExceeded);
  CHECK_THROWS_AS(enumerate_structures(2, 3, AxiomMode::strict()), BoundExceeded);
  CHECK_THROWS_AS(enumerate_structures(2, 1, AxiomMode::parse("T1,T2")), InvalidStructure);
}
