#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "tgs/core.hpp"
#include "tgs/enumeration.hpp"

namespace testing {

inline oracle::Raw to_raw(const tgs::TernaryGammaSemiring& ts) {
  oracle::Raw r;
  r.n = ts.order();
  r.add.assign(ts.add_table().begin(), ts.add_table().end());
  for (std::size_t g = 0; g < ts.gamma_size(); ++g)
    r.ops.emplace_back(ts.op_table(g).begin(), ts.op_table(g).end());
  return r;
}

inline std::string data_file(const std::string& name) {
  return (std::filesystem::path(TGS_DATA_DIR) / name).string();
}

// n = 2, + = OR, {a b c} = min(a, b, c).
inline tgs::TernaryGammaSemiring bao() { return tgs::build_named(tgs::NamedKind::boolean_and_or, 2); }

inline tgs::TernaryGammaSemiring zero_op(std::size_t n,
                                         tgs::AdditiveKind add = tgs::AdditiveKind::modular) {
  return tgs::build_named(tgs::NamedKind::zero_op, n, {add, 1});
}

inline tgs::TernaryGammaSemiring z3sum() { return tgs::build_named(tgs::NamedKind::modular, 3); }

inline std::vector<tgs::Element> random_relabeling(std::size_t n, std::mt19937_64& rng) {
  std::vector<tgs::Element> phi(n);
  for (std::size_t i = 0; i < n; ++i) phi[i] = tgs::Element(i);
  if (n > 1) std::shuffle(phi.begin() + 1, phi.end(), rng);
  return phi;
}

// Catalogs are cached per process; tests share them.
inline const tgs::Catalog& strict_catalog(std::size_t n, std::size_t m) {
  static std::map<std::pair<std::size_t, std::size_t>, tgs::Catalog> cache;
  auto key = std::make_pair(n, m);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, tgs::enumerate_structures(n, m, tgs::AxiomMode::strict())).first;
  return it->second;
}

}  // namespace testing
