#include "tgs/ideals.hpp"

#include <algorithm>
#include <map>

namespace tgs {

namespace {

void require_small(const TernaryGammaSemiring& ts, std::size_t limit, const char* what) {
  if (ts.order() > limit)
    throw BoundExceeded(std::string(what) + ": carrier of size " + std::to_string(ts.order()) +
                        " exceeds the limit of " + std::to_string(limit));
}

}  // namespace

bool is_ideal(const TernaryGammaSemiring& ts, IdealSet set) {
  const auto n = ts.order();
  if (!set.contains(0)) return false;
  const auto members = set.elements();
  for (auto a : members) {
    if (a >= n) return false;
    for (auto b : members)
      if (!set.contains(ts.add(a, b))) return false;
  }
  for (std::size_t g = 0; g < ts.gamma_size(); ++g)
    for (auto i : members)
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t u = 0; u < n; ++u)
          if (!set.contains(ts.op(g, t, u, i)) || !set.contains(ts.op(g, t, i, u)) ||
              !set.contains(ts.op(g, i, t, u)))
            return false;
  return true;
}

IdealSet ideal_generate(const TernaryGammaSemiring& ts, IdealSet generators) {
  require_small(ts, 64, "ideal_generate");
  const auto n = ts.order();
  IdealSet current = generators | IdealSet::zero();
  for (;;) {
    IdealSet next = current;
    const auto members = current.elements();
    for (auto a : members)
      for (auto b : members) next.insert(ts.add(a, b));
    for (std::size_t g = 0; g < ts.gamma_size(); ++g)
      for (auto i : members)
        for (std::size_t t = 0; t < n; ++t)
          for (std::size_t u = 0; u < n; ++u) {
            next.insert(ts.op(g, t, u, i));
            next.insert(ts.op(g, t, i, u));
            next.insert(ts.op(g, i, t, u));
          }
    if (next == current) return current;
    current = next;
  }
}

std::optional<CompatibilityWitness> compatibility_violation(const TernaryGammaSemiring& ts,
                                                            const Congruence& rho) {
  const auto n = ts.order();
  if (rho.order() != n) throw InvalidStructure("partition size mismatch");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!rho.related(a, b)) continue;
      for (std::size_t x = 0; x < n; ++x) {
        if (!rho.related(ts.add(a, x), ts.add(b, x)))
          return CompatibilityWitness{"add", 0, Element(a), Element(b), {Element(x)},
                                      ts.add(a, x), ts.add(b, x)};
        if (!rho.related(ts.add(x, a), ts.add(x, b)))
          return CompatibilityWitness{"add", 1, Element(a), Element(b), {Element(x)},
                                      ts.add(x, a), ts.add(x, b)};
      }
      for (std::size_t g = 0; g < ts.gamma_size(); ++g)
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) {
            const Element l0 = ts.op(g, a, x, y), r0 = ts.op(g, b, x, y);
            const Element l1 = ts.op(g, x, a, y), r1 = ts.op(g, x, b, y);
            const Element l2 = ts.op(g, x, y, a), r2 = ts.op(g, x, y, b);
            const std::vector<Element> others{Element(x), Element(y)};
            if (!rho.related(l0, r0))
              return CompatibilityWitness{ts.gamma()[g], 0, Element(a), Element(b), others, l0, r0};
            if (!rho.related(l1, r1))
              return CompatibilityWitness{ts.gamma()[g], 1, Element(a), Element(b), others, l1, r1};
            if (!rho.related(l2, r2))
              return CompatibilityWitness{ts.gamma()[g], 2, Element(a), Element(b), others, l2, r2};
          }
    }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> LatticeReport::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y) {
      if (x == y || !leq(x, y)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < size && cover; ++z)
        if (z != x && z != y && leq(x, z) && leq(z, y)) cover = false;
      if (cover) out.emplace_back(x, y);
    }
  return out;
}

void audit_lattice(LatticeReport& l) {
  l.is_modular = true;
  l.is_distributive = true;
  l.modular_witness.reset();
  l.distributive_witness.reset();
  for (std::size_t x = 0; x < l.size; ++x)
    for (std::size_t y = 0; y < l.size; ++y)
      for (std::size_t z = 0; z < l.size; ++z) {
        if (l.is_modular && l.leq(x, z) &&
            l.join_of(x, l.meet_of(y, z)) != l.meet_of(l.join_of(x, y), z)) {
          l.is_modular = false;
          l.modular_witness = LatticeWitness{x, y, z};
        }
        if (l.is_distributive &&
            l.meet_of(x, l.join_of(y, z)) != l.join_of(l.meet_of(x, y), l.meet_of(x, z))) {
          l.is_distributive = false;
          l.distributive_witness = LatticeWitness{x, y, z};
        }
      }
}

IdealLattice all_ideals(const TernaryGammaSemiring& ts) {
  require_small(ts, kMaxIdealOrder, "all_ideals");
  const auto n = ts.order();
  IdealLattice out;
  const std::uint64_t candidates = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < candidates; ++mask) {
    IdealSet set((mask << 1) | 1U);
    if (is_ideal(ts, set)) out.ideals.push_back(set);
  }
  std::sort(out.ideals.begin(), out.ideals.end(), [](IdealSet a, IdealSet b) {
    return std::pair(a.size(), a.bits()) < std::pair(b.size(), b.bits());
  });

  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < out.ideals.size(); ++i) index[out.ideals[i].bits()] = i;
  const auto k = out.ideals.size();
  auto& l = out.lattice;
  l.size = k;
  l.join.resize(k * k);
  l.meet.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      l.join[i * k + j] = index.at(ideal_generate(ts, out.ideals[i] | out.ideals[j]).bits());
      l.meet[i * k + j] = index.at((out.ideals[i] & out.ideals[j]).bits());
    }
  l.bottom = 0;
  l.top = k - 1;
  audit_lattice(l);
  return out;
}

namespace {

// Restricted growth strings enumerate set partitions in a fixed order.
template <class Visit>
void for_each_partition(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> labels(n, 0);
  std::vector<std::size_t> max_prefix(n, 0);
  for (;;) {
    visit(labels);
    std::size_t i = n;
    bool found = false;
    while (i-- > 1) {
      if (labels[i] <= max_prefix[i - 1]) {
        found = true;
        break;
      }
    }
    if (!found) return;
    ++labels[i];
    max_prefix[i] = std::max(max_prefix[i - 1], labels[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      labels[j] = 0;
      max_prefix[j] = max_prefix[j - 1];
    }
  }
}

}  // namespace

CongruenceLattice all_congruences(const TernaryGammaSemiring& ts, std::size_t max_order) {
  require_small(ts, max_order, "all_congruences");
  const auto n = ts.order();
  CongruenceLattice out;
  for_each_partition(n, [&](const std::vector<std::size_t>& labels) {
    auto rho = Congruence::from_labels(labels);
    if (is_congruence(ts, rho)) out.congruences.push_back(std::move(rho));
  });
  std::sort(out.congruences.begin(), out.congruences.end(),
            [](const Congruence& a, const Congruence& b) {
              if (a.num_classes() != b.num_classes()) return a.num_classes() > b.num_classes();
              return a.representatives() < b.representatives();
            });

  const auto k = out.congruences.size();
  std::map<std::vector<Element>, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index[out.congruences[i].representatives()] = i;
  auto& l = out.lattice;
  l.size = k;
  l.join.resize(k * k);
  l.meet.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto& a = out.congruences[i];
      const auto& b = out.congruences[j];
      l.meet[i * k + j] = index.at(meet(a, b).representatives());
      // Least compatible partition above both: the meet of all upper bounds.
      Congruence upper = Congruence::full(n);
      for (const auto& c : out.congruences)
        if (a.refines(c) && b.refines(c)) upper = meet(upper, c);
      l.join[i * k + j] = index.at(upper.representatives());
    }
  l.bottom = 0;
  l.top = k - 1;
  audit_lattice(l);
  return out;
}

bool Relation::contains(const Relation& other) const {
  for (std::size_t a = 0; a < n; ++a)
    if ((other.rows[a] & ~rows[a]) != 0) return false;
  return true;
}

Relation relation_of(const Congruence& rho) {
  Relation r{rho.order(), std::vector<std::uint64_t>(rho.order(), 0)};
  for (std::size_t a = 0; a < r.n; ++a)
    for (std::size_t b = 0; b < r.n; ++b)
      if (rho.related(a, b)) r.rows[a] |= std::uint64_t{1} << b;
  return r;
}

CorrespondenceReport correspondence_report(const TernaryGammaSemiring& ts) {
  return correspondence_report(ts, all_ideals(ts), all_congruences(ts));
}

CorrespondenceReport correspondence_report(const TernaryGammaSemiring& ts,
                                           const IdealLattice& ideals,
                                           const CongruenceLattice& congruences) {
  const auto n = ts.order();
  CorrespondenceReport report;
  for (auto ideal : ideals.ideals) {
    CorrespondenceEntry e;
    e.ideal = ideal;
    e.relation = Relation{n, std::vector<std::uint64_t>(n, 0)};
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        bool related = true;
        for (std::size_t g = 0; g < ts.gamma_size() && related; ++g)
          for (std::size_t c = 0; c < n && related; ++c)
            if (!ideal.contains(ts.op(g, a, b, c))) related = false;
        if (related) e.relation.rows[a] |= std::uint64_t{1} << b;
      }
    const auto& r = e.relation;
    e.reflexive = true;
    for (std::size_t a = 0; a < n && e.reflexive; ++a)
      if (!r.related(a, a)) {
        e.reflexive = false;
        e.reflexive_witness = std::pair(Element(a), Element(a));
      }
    e.symmetric = true;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (r.related(a, b) && !r.related(b, a)) e.symmetric = false;
    e.transitive = true;
    for (std::size_t a = 0; a < n && e.transitive; ++a)
      for (std::size_t b = 0; b < n && e.transitive; ++b)
        for (std::size_t c = 0; c < n && e.transitive; ++c)
          if (r.related(a, b) && r.related(b, c) && !r.related(a, c)) {
            e.transitive = false;
            e.transitive_witness = std::array{Element(a), Element(b), Element(c)};
          }
    if (e.reflexive && e.symmetric && e.transitive) {
      std::vector<std::size_t> labels(n);
      for (std::size_t a = 0; a < n; ++a) labels[a] = r.rows[a];
      auto rho = Congruence::from_labels(labels);
      e.compatibility_witness = compatibility_violation(ts, rho);
      e.is_congruence = !e.compatibility_witness.has_value();
    }
    report.entries.push_back(std::move(e));
  }

  const auto& es = report.entries;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (i == j) continue;
      if (i < j && report.injective && es[i].relation == es[j].relation) {
        report.injective = false;
        report.injective_witness = std::pair(i, j);
      }
      if (report.order_reversing && es[i].ideal.subset_of(es[j].ideal) &&
          !es[i].relation.contains(es[j].relation)) {
        report.order_reversing = false;
        report.order_witness = std::pair(i, j);
      }
    }
  for (std::size_t c = 0; c < congruences.congruences.size() && report.surjective; ++c) {
    const auto target = relation_of(congruences.congruences[c]);
    bool hit = std::any_of(es.begin(), es.end(),
                           [&](const CorrespondenceEntry& e) { return e.relation == target; });
    if (!hit) {
      report.surjective = false;
      report.surjective_witness = c;
    }
  }
  return report;
}

}  // namespace tgs
