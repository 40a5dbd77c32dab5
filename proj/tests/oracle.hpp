#pragma once

// Brute-force reference implementations used by the tests. Nothing here calls
// into the library's search, canonicalization or lattice code; structures are
// plain vectors of tables.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Byte = std::uint8_t;
using Table = std::vector<Byte>;

struct Raw {
  std::size_t n = 0;
  Table add;                // n * n
  std::vector<Table> ops;   // m tensors of n^3
  Byte a(std::size_t x, std::size_t y) const { return add[x * n + y]; }
  Byte t(std::size_t g, std::size_t x, std::size_t y, std::size_t z) const {
    return ops[g][(x * n + y) * n + z];
  }
};

// Every commutative monoid table with identity 0 (no isomorphism reduction).
inline std::vector<Table> raw_monoids(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t x = 1; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) cells.emplace_back(x, y);
  std::vector<Table> out;
  std::vector<std::size_t> digits(cells.size(), 0);
  while (true) {
    Table t(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      t[x] = Byte(x);
      t[x * n] = Byte(x);
    }
    for (std::size_t k = 0; k < cells.size(); ++k) {
      t[cells[k].first * n + cells[k].second] = Byte(digits[k]);
      t[cells[k].second * n + cells[k].first] = Byte(digits[k]);
    }
    bool assoc = true;
    for (std::size_t x = 0; x < n && assoc; ++x)
      for (std::size_t y = 0; y < n && assoc; ++y)
        for (std::size_t z = 0; z < n && assoc; ++z)
          assoc = t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]];
    if (assoc) out.push_back(t);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == n) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

inline Table relabel_add(const Table& t, std::size_t n, const std::vector<std::size_t>& p) {
  Table out(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out[p[x] * n + p[y]] = Byte(p[t[x * n + y]]);
  return out;
}

// Least serialization add || ops over all permutations fixing 0.
inline Table canonical_bytes(const Raw& s) {
  const auto n = s.n;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Table best;
  do {
    Table cur = relabel_add(s.add, n, p);
    for (const auto& m : s.ops) {
      Table r(n * n * n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z)
            r[(p[x] * n + p[y]) * n + p[z]] = Byte(p[m[(x * n + y) * n + z]]);
      cur.insert(cur.end(), r.begin(), r.end());
    }
    if (best.empty() || cur < best) best = cur;
  } while (n > 1 && std::next_permutation(p.begin() + 1, p.end()));
  return best;
}

inline std::size_t monoid_classes(std::size_t n) {
  std::set<Table> seen;
  for (const auto& t : raw_monoids(n)) seen.insert(canonical_bytes(Raw{n, t, {}}));
  return seen.size();
}

// Distributivity, absorbing zero (strict only), associativity across labels
// and symmetry. The additive monoid is assumed valid.
inline bool axioms_hold(const Raw& s, bool strict) {
  const auto n = s.n;
  const auto m = s.ops.size();
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const auto v = s.t(g, x, y, z);
          if (v != s.t(g, y, x, z) || v != s.t(g, x, z, y) || v != s.t(g, z, y, x)) return false;
          if (strict && x == 0 && v != 0) return false;
          for (std::size_t w = 0; w < n; ++w) {
            const auto sum = s.a(x, w);
            if (s.t(g, sum, y, z) != s.a(v, s.t(g, w, y, z))) return false;
            if (s.t(g, y, sum, z) != s.a(s.t(g, y, x, z), s.t(g, y, w, z))) return false;
            if (s.t(g, y, z, sum) != s.a(s.t(g, y, z, x), s.t(g, y, z, w))) return false;
          }
        }
  for (std::size_t al = 0; al < m; ++al)
    for (std::size_t be = 0; be < m; ++be)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = 0; d < n; ++d)
              for (std::size_t e = 0; e < n; ++e)
                if (s.t(be, s.t(al, a, b, c), d, e) != s.t(al, a, b, s.t(be, c, d, e)))
                  return false;
  return true;
}

// Every symmetric tensor tuple over every raw monoid, filtered by the axioms,
// collected as canonical serializations.
inline std::set<Table> filter_everything(std::size_t n, std::size_t m, bool strict) {
  std::vector<std::array<std::size_t, 3>> multisets;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y)
      for (std::size_t z = y; z < n; ++z) multisets.push_back({x, y, z});
  const auto cells = multisets.size() * m;
  std::set<Table> out;
  for (const auto& add : raw_monoids(n)) {
    std::vector<std::size_t> digits(cells, 0);
    while (true) {
      Raw s{n, add, std::vector<Table>(m, Table(n * n * n))};
      for (std::size_t g = 0; g < m; ++g)
        for (std::size_t k = 0; k < multisets.size(); ++k) {
          auto v = Byte(digits[g * multisets.size() + k]);
          auto [x, y, z] = multisets[k];
          std::array<std::size_t, 3> p{x, y, z};
          do {
            s.ops[g][(p[0] * n + p[1]) * n + p[2]] = v;
          } while (std::next_permutation(p.begin(), p.end()));
        }
      if (axioms_hold(s, strict)) out.insert(canonical_bytes(s));
      std::size_t k = 0;
      while (k < cells && ++digits[k] == n) digits[k++] = 0;
      if (k == cells) break;
    }
  }
  return out;
}

inline bool compatible(const Raw& s, const std::vector<std::size_t>& block) {
  const auto n = s.n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (block[x] != block[y]) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (block[s.a(x, z)] != block[s.a(y, z)]) return false;
        for (std::size_t g = 0; g < s.ops.size(); ++g)
          for (std::size_t w = 0; w < n; ++w)
            if (block[s.t(g, x, z, w)] != block[s.t(g, y, z, w)] ||
                block[s.t(g, z, x, w)] != block[s.t(g, z, y, w)] ||
                block[s.t(g, z, w, x)] != block[s.t(g, z, w, y)])
              return false;
      }
    }
  return true;
}

// Congruences as block labelings, enumerated through restricted growth strings.
inline std::vector<std::vector<std::size_t>> congruences(const Raw& s) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> rgs(s.n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == s.n) {
      if (compatible(s, rgs)) out.push_back(rgs);
      return;
    }
    for (std::size_t v = 0; v <= used && v < s.n; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(used, v + 1));
    }
  };
  if (s.n > 0) rec(rec, 1, 1);
  return out;
}

inline bool ideal(const Raw& s, std::uint64_t set) {
  const auto n = s.n;
  auto in = [&](std::size_t x) { return (set >> x) & 1U; };
  if (!in(0)) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (in(x) && in(y) && !in(s.a(x, y))) return false;
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t g = 0; g < s.ops.size(); ++g)
          if ((in(x) || in(y) || in(z)) && !in(s.t(g, x, y, z))) return false;
    }
  return true;
}

inline std::vector<std::uint64_t> ideals(const Raw& s) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << s.n); ++set)
    if (ideal(s, set)) out.push_back(set);
  return out;
}

inline bool prime(const Raw& s, std::uint64_t set) {
  if (set == (std::uint64_t{1} << s.n) - 1 || !ideal(s, set)) return false;
  auto in = [&](std::size_t x) { return (set >> x) & 1U; };
  for (std::size_t g = 0; g < s.ops.size(); ++g)
    for (std::size_t x = 0; x < s.n; ++x)
      for (std::size_t y = 0; y < s.n; ++y)
        for (std::size_t z = 0; z < s.n; ++z)
          if (in(s.t(g, x, y, z)) && !in(x) && !in(y) && !in(z)) return false;
  return true;
}

// Solutions of {x+a, y+b, z+c}_g = {x y z}_g + d, by nested loops.
inline std::uint64_t sbox_count(const Raw& s, std::size_t g, std::size_t a, std::size_t b,
                                std::size_t c, std::size_t d) {
  std::uint64_t count = 0;
  for (std::size_t x = 0; x < s.n; ++x)
    for (std::size_t y = 0; y < s.n; ++y)
      for (std::size_t z = 0; z < s.n; ++z)
        if (s.t(g, s.a(x, a), s.a(y, b), s.a(z, c)) == s.a(s.t(g, x, y, z), d)) ++count;
  return count;
}

}  // namespace oracle
