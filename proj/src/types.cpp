#include "tgs/types.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tgs {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::vector<Element> min_reps_from_roots(std::vector<std::size_t>& parent) {
  const std::size_t n = parent.size();
  std::vector<Element> least(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<Element> rep(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    auto r = find_root(parent, a);
    if (!seen[r]) {
      seen[r] = true;
      least[r] = static_cast<Element>(a);
    }
    rep[a] = least[r];
  }
  return rep;
}

}  // namespace

Congruence::Congruence(std::vector<Element> rep) : rep_(std::move(rep)) {
  for (std::size_t a = 0; a < rep_.size(); ++a) {
    if (rep_[a] > a || rep_[rep_[a]] != rep_[a]) {
      throw InvalidStructure("congruence: not a least-representative array");
    }
  }
}

Congruence Congruence::diagonal(std::size_t n) {
  std::vector<Element> rep(n);
  std::iota(rep.begin(), rep.end(), Element{0});
  return Congruence(std::move(rep));
}

Congruence Congruence::full(std::size_t n) { return Congruence(std::vector<Element>(n, 0)); }

Congruence Congruence::from_pairs(std::size_t n,
                                  const std::vector<std::pair<Element, Element>>& pairs) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (auto [a, b] : pairs) {
    auto ra = find_root(parent, a);
    auto rb = find_root(parent, b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  return Congruence(min_reps_from_roots(parent));
}

Congruence Congruence::from_labels(const std::vector<std::size_t>& labels) {
  const std::size_t n = labels.size();
  std::vector<Element> rep(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      if (labels[b] == labels[a]) {
        rep[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  return Congruence(std::move(rep));
}

std::size_t Congruence::num_classes() const {
  std::size_t count = 0;
  for (std::size_t a = 0; a < rep_.size(); ++a)
    if (rep_[a] == a) ++count;
  return count;
}

bool Congruence::refines(const Congruence& other) const {
  for (std::size_t a = 0; a < rep_.size(); ++a)
    if (!other.related(a, rep_[a])) return false;
  return true;
}

Congruence meet(const Congruence& a, const Congruence& b) {
  std::vector<std::size_t> labels(a.order());
  for (std::size_t x = 0; x < a.order(); ++x) labels[x] = a.rep(x) * 256U + b.rep(x);
  return Congruence::from_labels(labels);
}

}  // namespace tgs
