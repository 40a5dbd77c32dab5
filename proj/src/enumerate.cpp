#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

#include "tgs/enumeration.hpp"

namespace tgs {

std::vector<std::string> default_gamma_labels(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < m; ++g) labels.push_back(std::to_string(g + 1));
  return labels;
}

// ---------------------------------------------------------------------------
// Additive reducts

namespace {

class MonoidSearch {
 public:
  explicit MonoidSearch(std::size_t n) : n_(n), table_(n * n, kFree) {
    for (std::size_t a = 0; a < n; ++a) {
      table_[a] = static_cast<int>(a);
      table_[a * n] = static_cast<int>(a);
    }
    for (std::size_t a = 1; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) cells_.emplace_back(a, b);
  }

  template <class Visit>
  void run(Visit&& visit) { extend(0, visit); }

 private:
  static constexpr int kFree = -1;

  int at(int a, int b) const { return (a < 0 || b < 0) ? kFree : table_[a * n_ + b]; }

  bool associative_so_far() const {
    for (std::size_t x = 1; x < n_; ++x)
      for (std::size_t y = 1; y < n_; ++y)
        for (std::size_t z = 1; z < n_; ++z) {
          const int l = at(at(int(x), int(y)), int(z));
          const int r = at(int(x), at(int(y), int(z)));
          if (l != kFree && r != kFree && l != r) return false;
        }
    return true;
  }

  template <class Visit>
  void extend(std::size_t i, Visit& visit) {
    if (i == cells_.size()) {
      visit(std::vector<Element>(table_.begin(), table_.end()));
      return;
    }
    auto [a, b] = cells_[i];
    for (std::size_t v = 0; v < n_; ++v) {
      table_[a * n_ + b] = static_cast<int>(v);
      table_[b * n_ + a] = static_cast<int>(v);
      if (associative_so_far()) extend(i + 1, visit);
    }
    table_[a * n_ + b] = kFree;
    table_[b * n_ + a] = kFree;
  }

  std::size_t n_;
  std::vector<int> table_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
};

std::vector<Element> canonical_add_table(const std::vector<Element>& add, std::size_t n) {
  std::vector<Element> psi(n);
  std::iota(psi.begin(), psi.end(), Element{0});
  std::vector<Element> phi(n), best, candidate(n * n);
  do {
    for (std::size_t i = 0; i < n; ++i) phi[psi[i]] = static_cast<Element>(i);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) candidate[i * n + j] = phi[add[psi[i] * n + psi[j]]];
    if (best.empty() || candidate < best) best = candidate;
  } while (n > 1 && std::next_permutation(psi.begin() + 1, psi.end()));
  return best;
}

}  // namespace

std::vector<std::vector<Element>> enumerate_additive_monoids(std::size_t n) {
  if (n == 0) return {};
  if (n > kMaxMonoidOrder)
    throw BoundExceeded("enumerate_additive_monoids: order above " +
                        std::to_string(kMaxMonoidOrder));
  std::set<std::vector<Element>> classes;
  MonoidSearch(n).run([&](std::vector<Element> table) {
    classes.insert(canonical_add_table(table, n));
  });
  return {classes.begin(), classes.end()};
}

// ---------------------------------------------------------------------------
// Tensor search over one additive reduct

namespace {

constexpr std::int8_t kUnassigned = -1;

class TensorSearch {
 public:
  TensorSearch(const std::vector<Element>& add, std::size_t n, std::size_t m, AxiomMode mode)
      : add_(add), n_(n), m_(m), mode_(mode) {
    index_.assign(n * n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b)
        for (std::size_t c = b; c < n; ++c) {
          std::array<Element, 3> t{Element(a), Element(b), Element(c)};
          const int k = static_cast<int>(triples_.size());
          triples_.push_back(t);
          std::vector<std::array<Element, 3>> perms;
          auto p = t;
          do {
            perms.push_back(p);
            index_[(p[0] * n + p[1]) * n + p[2]] = k;
          } while (std::next_permutation(p.begin(), p.end()));
          orderings_.push_back(std::move(perms));
        }
    k_ = triples_.size();
    value_.assign(m_ * k_, kUnassigned);
    build_branch_order();
  }

  // Applies root constraints; false when the reduct admits no solution.
  bool setup() {
    if (mode_.enabled(Axiom::T3)) {
      for (std::size_t g = 0; g < m_; ++g)
        for (std::size_t k = 0; k < k_; ++k)
          if (triples_[k][0] == 0 && !assign(cell_id(g, k), 0)) return false;
    }
    return propagate();
  }

  int next_free() const {
    for (int cell : branch_order_)
      if (value_[cell] == kUnassigned) return cell;
    return -1;
  }

  bool assign_and_propagate(int cell, Element v) { return assign(cell, v) && propagate(); }

  template <class Leaf>
  void dfs(Leaf& on_leaf) {
    ++stats.explored_nodes;
    const int cell = next_free();
    if (cell < 0) {
      ++stats.leaves;
      on_leaf(build());
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      const auto mark = trail_.size();
      if (assign(cell, static_cast<Element>(v)) && propagate()) dfs(on_leaf);
      queue_.clear();
      undo(mark);
    }
  }

  SearchStats stats;

 private:
  int cell_id(std::size_t g, std::size_t k) const { return static_cast<int>(g * k_ + k); }
  int cell_of(std::size_t g, std::size_t a, std::size_t b, std::size_t c) const {
    return cell_id(g, index_[(a * n_ + b) * n_ + c]);
  }
  int get(std::size_t g, std::size_t a, std::size_t b, std::size_t c) const {
    return value_[cell_of(g, a, b, c)];
  }
  Element plus(std::size_t a, std::size_t b) const { return add_[a * n_ + b]; }

  bool assign(int cell, Element v) {
    if (value_[cell] != kUnassigned) return value_[cell] == static_cast<std::int8_t>(v);
    value_[cell] = static_cast<std::int8_t>(v);
    trail_.push_back(cell);
    queue_.push_back(cell);
    return true;
  }

  // Requires lhs == rhs where either side may still be unassigned.
  bool unify(int lhs_cell, int rhs_cell) {
    const auto l = value_[lhs_cell];
    const auto r = value_[rhs_cell];
    if (l != kUnassigned && r != kUnassigned) return l == r;
    if (l != kUnassigned) return assign(rhs_cell, static_cast<Element>(l));
    if (r != kUnassigned) return assign(lhs_cell, static_cast<Element>(r));
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = kUnassigned;
      trail_.pop_back();
    }
  }

  bool propagate() {
    while (!queue_.empty()) {
      const int cell = queue_.back();
      queue_.pop_back();
      if (mode_.enabled(Axiom::T2) && !distribute(cell)) return false;
      if (mode_.enabled(Axiom::T4) && !associate(cell)) return false;
    }
    return true;
  }

  // {a+b, c, d} = {a, c, d} + {b, c, d} with this cell as {a, c, d}.
  bool distribute(int cell) {
    const auto g = static_cast<std::size_t>(cell) / k_;
    const auto& t = triples_[static_cast<std::size_t>(cell) % k_];
    const auto v = static_cast<Element>(value_[cell]);
    for (int i = 0; i < 3; ++i) {
      if (i > 0 && t[i] == t[i - 1]) continue;
      const auto a = t[i];
      const auto c = t[(i + 1) % 3];
      const auto d = t[(i + 2) % 3];
      for (std::size_t b = 0; b < n_; ++b) {
        const int vb = get(g, b, c, d);
        if (vb == kUnassigned) continue;
        if (!assign(cell_of(g, plus(a, b), c, d), plus(v, static_cast<std::size_t>(vb))))
          return false;
      }
    }
    return true;
  }

  // {{a b c}_al d e}_be = {a b {c d e}_be}_al for every instance in which
  // this cell is one of the four lookups.
  bool associate(int cell) {
    const auto g = static_cast<std::size_t>(cell) / k_;
    const auto k = static_cast<std::size_t>(cell) % k_;
    const auto v = static_cast<std::size_t>(value_[cell]);
    for (const auto& p : orderings_[k]) {
      // Inner left: {p0 p1 p2}_g = v.
      for (std::size_t beta = 0; beta < m_; ++beta)
        for (std::size_t d = 0; d < n_; ++d)
          for (std::size_t e = 0; e < n_; ++e) {
            const int w = get(beta, p[2], d, e);
            if (w == kUnassigned) continue;
            if (!unify(cell_of(beta, v, d, e), cell_of(g, p[0], p[1], std::size_t(w))))
              return false;
          }
      // Inner right: {p0 p1 p2}_g = w with (c, d, e) = p.
      for (std::size_t alpha = 0; alpha < m_; ++alpha)
        for (std::size_t a = 0; a < n_; ++a)
          for (std::size_t b = 0; b < n_; ++b) {
            const int x = get(alpha, a, b, p[0]);
            if (x == kUnassigned) continue;
            if (!unify(cell_of(g, std::size_t(x), p[1], p[2]), cell_of(alpha, a, b, v)))
              return false;
          }
      // Outer left: {x d e}_g with x = p0 = {a b c}_alpha.
      // Outer right: {a b w}_g with w = p2 = {c d e}_beta.
      for (std::size_t h = 0; h < m_; ++h)
        for (std::size_t a = 0; a < n_; ++a)
          for (std::size_t b = 0; b < n_; ++b)
            for (std::size_t c = 0; c < n_; ++c) {
              const int val = get(h, a, b, c);
              if (val == static_cast<int>(p[0])) {
                // alpha = h, beta = g, (d, e) = (p1, p2).
                const int w = get(g, c, p[1], p[2]);
                if (w != kUnassigned && !unify(cell, cell_of(h, a, b, std::size_t(w))))
                  return false;
              }
              if (val == static_cast<int>(p[2])) {
                // beta = h with (c, d, e) = (a, b, c); alpha = g, (a, b) = (p0, p1).
                const int x = get(g, p[0], p[1], a);
                if (x != kUnassigned && !unify(cell_of(h, std::size_t(x), b, c), cell))
                  return false;
              }
            }
    }
    return true;
  }

  void build_branch_order() {
    // Greedy generating set of the additive reduct.
    std::vector<bool> generated(n_, false);
    std::vector<bool> generator(n_, false);
    generated[0] = true;
    for (std::size_t e = 1; e < n_; ++e) {
      if (generated[e]) continue;
      generator[e] = true;
      generated[e] = true;
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t x = 0; x < n_; ++x)
          for (std::size_t y = 0; y < n_; ++y)
            if (generated[x] && generated[y] && !generated[plus(x, y)]) {
              generated[plus(x, y)] = true;
              grew = true;
            }
      }
    }
    std::vector<std::tuple<int, std::size_t, std::size_t>> keys;
    for (std::size_t k = 0; k < k_; ++k) {
      int non_generators = 0;
      for (auto e : triples_[k])
        if (!generator[e]) ++non_generators;
      for (std::size_t g = 0; g < m_; ++g) keys.emplace_back(non_generators, k, g);
    }
    std::sort(keys.begin(), keys.end());
    for (auto [ng, k, g] : keys) branch_order_.push_back(cell_id(g, k));
  }

  TernaryGammaSemiring build() const {
    std::vector<std::vector<Element>> ops(m_, std::vector<Element>(n_ * n_ * n_));
    for (std::size_t g = 0; g < m_; ++g)
      for (std::size_t i = 0; i < n_ * n_ * n_; ++i)
        ops[g][i] = static_cast<Element>(value_[cell_id(g, index_[i])]);
    return TernaryGammaSemiring(n_, default_gamma_labels(m_), add_, std::move(ops));
  }

  const std::vector<Element>& add_;
  std::size_t n_, m_;
  AxiomMode mode_;
  std::size_t k_ = 0;
  std::vector<int> index_;
  std::vector<std::array<Element, 3>> triples_;
  std::vector<std::vector<std::array<Element, 3>>> orderings_;
  std::vector<std::int8_t> value_;
  std::vector<int> trail_;
  std::vector<int> queue_;
  std::vector<int> branch_order_;
};

struct Task {
  std::size_t reduct = 0;
  int cell = -1;  // -1: no free variable after root propagation
  Element value = 0;
};

struct Found {
  TernaryGammaSemiring structure;
  std::tuple<std::size_t, std::size_t, std::size_t> branch;
};

struct TaskResult {
  std::map<std::vector<std::uint8_t>, Found> found;
  SearchStats stats;
};

TaskResult run_task(const std::vector<Element>& add, std::size_t n, std::size_t m,
                    AxiomMode mode, bool permute_gamma, const Task& task) {
  TaskResult result;
  TensorSearch search(add, n, m, mode);
  if (!search.setup()) return result;
  if (task.cell >= 0 && !search.assign_and_propagate(task.cell, task.value)) {
    result.stats.explored_nodes = 1;
    return result;
  }
  std::size_t leaf_index = 0;
  auto on_leaf = [&](TernaryGammaSemiring ts) {
    const auto leaf = leaf_index++;
    if (!satisfies(ts, mode)) return;
    ++result.stats.accepted;
    auto form = canonical_form(ts, permute_gamma);
    result.found.try_emplace(form.bytes,
                             Found{std::move(ts), std::tuple(task.reduct, task.value, leaf)});
  };
  search.dfs(on_leaf);
  result.stats.explored_nodes += search.stats.explored_nodes;
  result.stats.leaves += search.stats.leaves;
  return result;
}

}  // namespace

Catalog enumerate_structures(std::size_t n, std::size_t m, AxiomMode mode,
                             const EnumerationOptions& options) {
  if (n == 0 || m == 0) throw InvalidStructure("enumeration requires n >= 1 and m >= 1");
  if (n > options.max_order || m > options.max_gamma)
    throw BoundExceeded("enumeration bound exceeded: n <= " + std::to_string(options.max_order) +
                        ", m <= " + std::to_string(options.max_gamma));
  if (!mode.enabled(Axiom::C))
    throw InvalidStructure("enumeration searches commutative tensors; the mode must include C");

  Catalog catalog;
  catalog.order = n;
  catalog.gamma_size = m;
  catalog.mode = mode;
  catalog.permute_gamma = options.permute_gamma;

  const auto reducts = enumerate_additive_monoids(n);
  catalog.additive_reducts = reducts.size();

  std::vector<Task> tasks;
  for (std::size_t r = 0; r < reducts.size(); ++r) {
    TensorSearch probe(reducts[r], n, m, mode);
    if (!probe.setup()) continue;
    const int cell = probe.next_free();
    if (cell < 0) {
      tasks.push_back(Task{r, -1, 0});
      continue;
    }
    for (std::size_t v = 0; v < n; ++v) tasks.push_back(Task{r, cell, static_cast<Element>(v)});
  }

  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++)
      results[i] = run_task(reducts[tasks[i].reduct], n, m, mode, options.permute_gamma, tasks[i]);
  };
  const auto workers = std::max<std::size_t>(1, std::min<std::size_t>(options.jobs, tasks.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  // Merge: sorted by canonical bytes, keeping the least branch id per class.
  std::map<std::vector<std::uint8_t>, const Found*> merged;
  for (const auto& r : results) {
    catalog.stats.explored_nodes += r.stats.explored_nodes;
    catalog.stats.leaves += r.stats.leaves;
    catalog.stats.accepted += r.stats.accepted;
    for (const auto& [bytes, found] : r.found) {
      auto [it, inserted] = merged.try_emplace(bytes, &found);
      if (!inserted && found.branch < it->second->branch) it->second = &found;
    }
  }

  const auto labels = default_gamma_labels(m);
  for (const auto& [bytes, found] : merged) {
    auto representative = from_bytes(n, labels, bytes);
    auto form = canonical_form(representative, options.permute_gamma);
    auto [r, v, leaf] = found->branch;
    catalog.entries.push_back(CatalogEntry{
        std::move(form), representative, invariant_tuple(representative), mode,
        "r" + std::to_string(r) + "/v" + std::to_string(v) + "/" + std::to_string(leaf)});
  }
  return catalog;
}

}  // namespace tgs
