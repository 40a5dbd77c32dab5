#include <fstream>

#include "doctest.h"
#include "support.hpp"
#include "tgs/apps.hpp"
#include "tgs/radical.hpp"

using namespace tgs;
using testing::bao;
using testing::zero_op;

namespace {

std::vector<Vector> all_vectors(std::size_t n, std::size_t len) {
  std::vector<Vector> out{Vector{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Vector> next;
    for (const auto& v : out)
      for (std::size_t e = 0; e < n; ++e) {
        auto w = v;
        w.push_back(Element(e));
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("code generation") {
  auto zero = code_generate(bao(), 3, {Vector{0, 0, 0}});
  CHECK(zero.codewords == std::vector<Vector>{Vector{0, 0, 0}});
  auto single = code_generate(bao(), 2, {Vector{1, 0}});
  CHECK(single.codewords == std::vector<Vector>{Vector{1, 0}});
  CHECK(is_gamma_linear(bao(), single));
  auto full = code_generate(zero_op(3), 2, all_vectors(3, 2));
  CHECK(full.codewords.size() == 9);
  CHECK_THROWS_AS(code_generate(bao(), 2, {}), InvalidStructure);
  CHECK_THROWS_AS(code_generate(zero_op(3), 3, {Vector{1, 1, 1}}, 10), BoundExceeded);
  CHECK(hamming_weight(Vector{0, 2, 0, 1}) == 2);
}

TEST_CASE("weight distributions") {
  auto z = weight_report(bao(), code_generate(bao(), 3, {Vector{0, 0, 0}}));
  CHECK(z.plain == std::vector<std::uint64_t>{1, 0, 0, 0});
  CHECK(z.plain_equal);

  auto b = weight_report(bao(), code_generate(bao(), 3, {Vector{1, 0, 1}, Vector{0, 1, 0}}));
  CHECK(b.projection_injective);
  CHECK(b.plain_equal);
  CHECK(b.coset_equal);

  auto collapsed = weight_report(zero_op(2), code_generate(zero_op(2), 2, {Vector{1, 1}}));
  CHECK(collapsed.quotient_order == 1);
  CHECK_FALSE(collapsed.plain_equal);
  CHECK(collapsed.plain_witness.has_value());
  // The image of C is the single zero word.
  CHECK(collapsed.projected == std::vector<std::uint64_t>{1, 0, 0});
  CHECK(collapsed.coset == std::vector<std::uint64_t>{2, 0, 0});
  CHECK_FALSE(collapsed.coset_equal);
  CHECK(collapsed.group_metric);
}

TEST_CASE("syndromes") {
  auto none = check_code(bao(), 2, {});
  CHECK(none.source.kernel.codewords.size() == 4);
  CHECK(none.source.classes == 1);

  auto ts = build_named(NamedKind::max_op, 3);
  std::vector<CheckOperator> checks{{0, Vector{1, 2}, Vector{2, 1}}};
  auto r = check_code(ts, 2, checks);
  CHECK(r.source.partition_ok);
  CHECK(r.quotient.partition_ok);
  std::uint64_t total = 0;
  for (auto s : r.source.class_sizes) total += s;
  CHECK(total == 9);
  auto h = apply_check(ts, checks[0], Vector{0, 1});
  CHECK(h == Vector{2, 2});
}

TEST_CASE("differential profiles match nested loops") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& e : testing::strict_catalog(n, 1).entries) {
      auto raw = testing::to_raw(e.structure);
      auto p = sbox_differential_profile(e.structure, 0);
      std::uint64_t worst = 1;
      bool any = false;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = 0; d < n; ++d) {
              auto expect = oracle::sbox_count(raw, 0, a, b, c, d);
              CHECK(p.count(a, b, c, d) == expect);
              if (a || b || c) {
                worst = any ? std::max(worst, expect) : expect;
                any = true;
              }
            }
      CHECK(p.uniformity == worst);
      if (additive_group(e.structure)) {
        CHECK(p.group_reduct);
        CHECK(p.partition_property);
      }
    }
  auto one = sbox_differential_profile(zero_op(1), 0);
  CHECK(one.uniformity == 1);
  auto lift = sbox_lift_report(bao(), 0);
  CHECK(lift.same_uniformity);
}

TEST_CASE("fuzzy ideals") {
  auto ones = fuzzy_ideal_check(bao(), {Grade(1), Grade(1)});
  CHECK(ones.fuzzy_ideal);
  for (const auto& cut : ones.cuts) CHECK(cut.members == IdealSet::full(2));

  auto indicator = fuzzy_ideal_check(bao(), {Grade(1), Grade(0)});
  CHECK(indicator.fuzzy_ideal);
  REQUIRE(indicator.cuts.size() == 1);
  CHECK(indicator.cuts[0].members == IdealSet::zero());
  CHECK(indicator.support.members == IdealSet::zero());

  auto bad = fuzzy_ideal_check(bao(), {Grade(0), Grade(1)});
  CHECK_FALSE(bad.fuzzy_ideal);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->condition == "product");

  CHECK_THROWS_AS(fuzzy_ideal_check(bao(), {Grade(2), Grade(0)}), InvalidStructure);
  CHECK_THROWS_AS(fuzzy_ideal_check(bao(), {Grade(1)}), InvalidStructure);
  CHECK(parse_grade("1/2") == Grade(1, 2));
  CHECK(parse_grade("0.25") == Grade(1, 4));
  CHECK(format_grade(Grade(3, 4)) == "3/4");
}

TEST_CASE("fuzzy round trip from ideal chains") {
  for (const auto& e : testing::strict_catalog(3, 2).entries) {
    auto lattice = all_ideals(e.structure);
    // Longest chain through the sorted ideal list, greedily by inclusion.
    std::vector<IdealSet> chain{lattice.ideals.back()};
    for (auto it = lattice.ideals.rbegin() + 1; it != lattice.ideals.rend(); ++it)
      if (it->subset_of(chain.back()) && *it != chain.back()) chain.push_back(*it);
    std::vector<std::pair<Grade, IdealSet>> levels;
    for (std::size_t i = 0; i < chain.size(); ++i)
      levels.emplace_back(Grade(static_cast<long long>(i + 1), static_cast<long long>(chain.size())),
                          chain[i]);
    auto r = fuzzy_from_chain(e.structure, levels);
    CHECK(r.check.fuzzy_ideal);
    CHECK(r.check.all_cuts_ideals);
    CHECK(r.round_trip);
  }
  CHECK_THROWS_AS(fuzzy_from_chain(bao(), {{Grade(1), IdealSet::full(2)}, {Grade(1, 2), IdealSet::zero()}}),
                  InvalidStructure);
}

TEST_CASE("path values") {
  auto ts = bao();
  WeightedGraph single{2, {{0, 1, 1}}};
  auto r = ternary_path_values(ts, 0, single);
  CHECK(r.join[0 * 2 + 1] == Element(1));
  CHECK(r.value[0 * 2 + 1] == Element(1));
  CHECK_FALSE(r.value[1 * 2 + 0].has_value());
  CHECK(r.stabilized);

  std::ifstream in(testing::data_file("two_cycle.graph"));
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto g = parse_graph(text, 2);
  CHECK(g.vertices == 2);
  CHECK(g.edges.size() == 2);
  auto cyc = ternary_path_values(ts, 0, g);
  for (auto v : cyc.value) CHECK(v == Element(1));
  CHECK(path_triple_check(ts, 0, g, cyc).agrees);

  CHECK_THROWS_AS(ternary_path_values(testing::z3sum(), 0, g), Error);
  CHECK_THROWS_AS(parse_graph("vertices 2\n0 5 1\n", 2), InvalidStructure);
  CHECK_THROWS_AS(parse_graph("vertices 2\n0 1 7\n", 2), InvalidStructure);
}

TEST_CASE("path values stabilize within the horizon") {
  auto ts = build_named(NamedKind::max_op, 3, {AdditiveKind::max, 1});
  WeightedGraph g{3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 1}, {1, 1, 1}}};
  auto r = ternary_path_values(ts, 0, g);
  CHECK(r.stabilized);
  auto longer = ternary_path_values(ts, 0, g, 100);
  CHECK(longer.join == r.join);
  CHECK(longer.value == r.value);
  CHECK(path_triple_check(ts, 0, g, r).agrees);
}
