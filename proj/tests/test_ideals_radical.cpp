#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "tgs/ideals.hpp"
#include "tgs/radical.hpp"

using namespace tgs;
using testing::bao;
using testing::z3sum;
using testing::zero_op;

namespace {

void check_lattice_laws(const LatticeReport& l) {
  for (std::size_t x = 0; x < l.size; ++x) {
    CHECK(l.join_of(x, x) == x);
    CHECK(l.meet_of(x, x) == x);
    CHECK(l.leq(l.bottom, x));
    CHECK(l.leq(x, l.top));
    for (std::size_t y = 0; y < l.size; ++y) {
      CHECK(l.join_of(x, y) == l.join_of(y, x));
      CHECK(l.meet_of(x, y) == l.meet_of(y, x));
      CHECK(l.join_of(x, l.meet_of(x, y)) == x);
      CHECK(l.meet_of(x, l.join_of(x, y)) == x);
      for (std::size_t z = 0; z < l.size; ++z)
        CHECK(l.join_of(l.join_of(x, y), z) == l.join_of(x, l.join_of(y, z)));
    }
  }
}

std::vector<TernaryGammaSemiring> sample_structures() {
  std::vector<TernaryGammaSemiring> out;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 2; ++m)
      for (const auto& e : testing::strict_catalog(n, m).entries) out.push_back(e.structure);
  return out;
}

}  // namespace

TEST_CASE("ideal generation") {
  CHECK(ideal_generate(bao(), IdealSet()) == IdealSet::zero());
  CHECK(ideal_generate(bao(), IdealSet::full(2)) == IdealSet::full(2));
  CHECK(ideal_generate(zero_op(3), IdealSet::from_elements({1})) == IdealSet::full(3));
  auto mx = build_named(NamedKind::max_op, 3);
  CHECK(ideal_generate(mx, IdealSet::from_elements({1})) == IdealSet::full(3));
}

TEST_CASE("ideal lattices of named structures") {
  auto b = all_ideals(bao());
  REQUIRE(b.ideals.size() == 2);
  CHECK(b.ideals[0] == IdealSet::zero());
  CHECK(b.ideals[1] == IdealSet::full(2));
  CHECK(b.lattice.is_modular);
  CHECK(b.lattice.is_distributive);
  auto one = all_ideals(zero_op(1));
  CHECK(one.ideals.size() == 1);
  CHECK(one.lattice.is_distributive);
}

TEST_CASE("ideals and congruences against the oracle") {
  for (const auto& ts : sample_structures()) {
    auto raw = testing::to_raw(ts);
    auto lattice = all_ideals(ts);
    std::vector<std::uint64_t> bits;
    for (auto i : lattice.ideals) bits.push_back(i.bits());
    std::sort(bits.begin(), bits.end());
    CHECK(bits == oracle::ideals(raw));

    auto con = all_congruences(ts);
    CHECK(con.congruences.size() == oracle::congruences(raw).size());
    CHECK(con.congruences.front().is_diagonal());
    CHECK(con.congruences.back().is_full());
    for (const auto& rho : con.congruences) CHECK(is_congruence(ts, rho));

    std::vector<std::uint64_t> primes;
    for (auto p : all_prime_ideals(ts)) primes.push_back(p.bits());
    std::vector<std::uint64_t> expected;
    for (auto i : oracle::ideals(raw))
      if (oracle::prime(raw, i)) expected.push_back(i);
    std::sort(primes.begin(), primes.end());
    CHECK(primes == expected);
  }
}

TEST_CASE("lattice laws and ideal operations") {
  for (const auto& ts : sample_structures()) {
    auto il = all_ideals(ts);
    check_lattice_laws(il.lattice);
    for (std::size_t x = 0; x < il.ideals.size(); ++x)
      for (std::size_t y = 0; y < il.ideals.size(); ++y) {
        CHECK(il.ideals[il.lattice.meet_of(x, y)] == (il.ideals[x] & il.ideals[y]));
        CHECK(il.ideals[il.lattice.join_of(x, y)] ==
              ideal_generate(ts, il.ideals[x] | il.ideals[y]));
      }
    auto cl = all_congruences(ts);
    check_lattice_laws(cl.lattice);
    for (std::size_t x = 0; x < cl.congruences.size(); ++x)
      for (std::size_t y = 0; y < cl.congruences.size(); ++y)
        CHECK(cl.congruences[cl.lattice.meet_of(x, y)] ==
              meet(cl.congruences[x], cl.congruences[y]));
  }
}

TEST_CASE("ideal generation is a closure operator") {
  for (const auto& ts : sample_structures()) {
    const auto n = ts.order();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      auto c = ideal_generate(ts, IdealSet(s));
      CHECK(IdealSet(s).subset_of(c));
      CHECK(ideal_generate(ts, c) == c);
      CHECK(is_ideal(ts, c));
      for (std::uint64_t t = s; t < (std::uint64_t{1} << n); t = (t + 1) | s)
        CHECK(c.subset_of(ideal_generate(ts, IdealSet(t))));
    }
  }
}

TEST_CASE("congruence lattices of named structures") {
  CHECK(all_congruences(zero_op(1)).congruences.size() == 1);
  CHECK(all_congruences(bao()).congruences.size() == 2);
  CHECK(all_congruences(zero_op(3)).congruences.size() == 2);
  CHECK_THROWS_AS(all_congruences(zero_op(9)), BoundExceeded);
}

TEST_CASE("ideal to relation correspondence") {
  CHECK(correspondence_report(zero_op(1)).bijective());

  auto z = correspondence_report(zero_op(3));
  CHECK_FALSE(z.injective);
  CHECK(z.injective_witness.has_value());
  for (const auto& e : z.entries) CHECK(e.relation == relation_of(Congruence::full(3)));

  // min(1, 1, 1) = 1 lies outside {0}, so (1, 1) is missing.
  auto b = correspondence_report(bao());
  const auto& zero_entry = b.entries.front();
  CHECK(zero_entry.ideal == IdealSet::zero());
  CHECK_FALSE(zero_entry.reflexive);
  REQUIRE(zero_entry.reflexive_witness.has_value());
  CHECK(zero_entry.reflexive_witness->first == 1);
}

TEST_CASE("nilpotents") {
  for (auto defn : {NilDefinition::weak, NilDefinition::literal, NilDefinition::power})
    CHECK(nilpotents(zero_op(3), defn) == IdealSet::full(3));
  CHECK(nilpotents(bao(), NilDefinition::power) == IdealSet::zero());
  // Absorbing zero makes the literal reading collapse.
  for (const auto& e : testing::strict_catalog(3, 1).entries)
    CHECK(nilpotents(e.structure, NilDefinition::literal) == IdealSet::full(3));
  CHECK(parse_nil_definition(nil_definition_name(NilDefinition::weak)) == NilDefinition::weak);
}

TEST_CASE("primes and radicals") {
  auto bp = all_prime_ideals(bao());
  REQUIRE(bp.size() == 1);
  CHECK(bp[0] == IdealSet::zero());
  CHECK(all_prime_ideals(zero_op(3)).empty());
  CHECK(all_prime_ideals(zero_op(1)).empty());

  auto rb = radical(bao());
  CHECK(rb.radical == IdealSet::zero());
  CHECK(rb.semiprime);
  auto rz = radical(zero_op(3));
  CHECK(rz.radical == IdealSet::full(3));
  CHECK_FALSE(rz.semiprime);
}

TEST_CASE("radical against nilpotents") {
  CHECK(rad_nil_report(zero_op(3)).equal);
  CHECK(rad_nil_report(zero_op(2)).equal);
  CHECK(rad_nil_report(bao()).equal);
  CHECK(rad_nil_report(zero_op(1)).equal);
  for (const auto& e : testing::strict_catalog(3, 2).entries) {
    auto r = rad_nil_report(e.structure);
    CHECK(r.equal == (r.radical == r.nil));
    CHECK(r.equal == (r.only_in_radical.empty() && r.only_in_nil.empty()));
  }
}

TEST_CASE("cancellation on the radical quotient") {
  CHECK(cancellation_check(zero_op(1)).cancellative);
  auto z = cancellation_check(zero_op(3));
  CHECK(z.quotient_order == 1);
  CHECK(z.cancellative);
  auto b = cancellation_check(bao());
  CHECK(b.quotient_order == 2);
  CHECK_FALSE(b.cancellative);
  REQUIRE(b.witness.has_value());
  const auto& w = *b.witness;
  CHECK(w.c != w.d);
  CHECK(bao().op(0, w.a, w.b, w.c) == bao().op(0, w.a, w.b, w.d));
}

TEST_CASE("zeros, units and idempotence") {
  auto b = find_identities(bao());
  CHECK(b.absorbing_zeros == IdealSet::zero());
  CHECK(b.units == IdealSet::from_elements({1}));
  CHECK(b.lemma1.idempotent_gammas == std::vector<std::size_t>{0});
  CHECK(b.lemma1.additive_idempotent);
  CHECK(b.lemma1.implication_holds);

  auto z = find_identities(zero_op(3));
  CHECK(z.absorbing_zeros == IdealSet::zero());
  CHECK(z.units.empty());

  auto m = find_identities(z3sum());
  CHECK(m.absorbing_zeros.empty());
  CHECK(m.units == IdealSet::zero());
}

TEST_CASE("invariant tuples") {
  CHECK(invariant_tuple(zero_op(1)).as_array() == std::array<std::size_t, 6>{1, 1, 1, 1, 0, 0});
  CHECK(invariant_tuple(bao()).as_array() == std::array<std::size_t, 6>{2, 1, 2, 2, 0, 0});
}
