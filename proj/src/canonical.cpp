#include <algorithm>
#include <numeric>

#include "tgs/enumeration.hpp"

namespace tgs {

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

namespace {

// Tables of ts relabeled by phi (old -> new), where psi is phi's inverse.
void relabeled_add(const TernaryGammaSemiring& ts, const std::vector<Element>& phi,
                   const std::vector<Element>& psi, std::vector<std::uint8_t>& out) {
  const auto n = ts.order();
  out.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = phi[ts.add(psi[i], psi[j])];
}

void relabeled_tensor(const TernaryGammaSemiring& ts, std::size_t g,
                      const std::vector<Element>& phi, const std::vector<Element>& psi,
                      std::vector<std::uint8_t>& out) {
  const auto n = ts.order();
  out.resize(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out[(i * n + j) * n + k] = phi[ts.op(g, psi[i], psi[j], psi[k])];
}

}  // namespace

CanonicalForm canonical_form(const TernaryGammaSemiring& ts, bool permute_gamma) {
  const auto n = ts.order();
  const auto m = ts.gamma_size();
  if (n > kMaxCanonicalOrder)
    throw BoundExceeded("canonical_form: carrier larger than " +
                        std::to_string(kMaxCanonicalOrder));

  CanonicalForm best;
  best.order = n;
  best.gamma_size = m;
  best.permuted_gamma = permute_gamma;

  std::vector<Element> psi(n);  // new -> old
  std::iota(psi.begin(), psi.end(), Element{0});
  std::vector<Element> phi(n);
  std::vector<std::uint8_t> add_bytes;
  std::vector<std::vector<std::uint8_t>> tensors(m);
  std::vector<std::size_t> order(m);
  bool have_best = false;

  do {
    for (std::size_t i = 0; i < n; ++i) phi[psi[i]] = static_cast<Element>(i);
    relabeled_add(ts, phi, psi, add_bytes);
    if (have_best) {
      // Prefix comparison on the additive block prunes most relabelings.
      auto cmp = std::lexicographical_compare_three_way(
          add_bytes.begin(), add_bytes.end(), best.bytes.begin(),
          best.bytes.begin() + static_cast<std::ptrdiff_t>(add_bytes.size()));
      if (cmp > 0) continue;
    }
    for (std::size_t g = 0; g < m; ++g) relabeled_tensor(ts, g, phi, psi, tensors[g]);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (permute_gamma)
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t x, std::size_t y) { return tensors[x] < tensors[y]; });
    std::vector<std::uint8_t> candidate = add_bytes;
    for (auto g : order) candidate.insert(candidate.end(), tensors[g].begin(), tensors[g].end());
    if (!have_best || candidate < best.bytes) {
      have_best = true;
      best.bytes = std::move(candidate);
      best.relabeling = phi;
      best.gamma_order = order;
    }
  } while (n > 1 && std::next_permutation(psi.begin() + 1, psi.end()));
  return best;
}

TernaryGammaSemiring from_bytes(std::size_t n, std::vector<std::string> gamma,
                                const std::vector<std::uint8_t>& bytes) {
  const auto m = gamma.size();
  if (bytes.size() != n * n + m * n * n * n)
    throw InvalidStructure("canonical bytes have the wrong length");
  std::vector<Element> add(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(n * n));
  std::vector<std::vector<Element>> ops;
  for (std::size_t g = 0; g < m; ++g) {
    auto first = bytes.begin() + static_cast<std::ptrdiff_t>(n * n + g * n * n * n);
    ops.emplace_back(first, first + static_cast<std::ptrdiff_t>(n * n * n));
  }
  return TernaryGammaSemiring(n, std::move(gamma), std::move(add), std::move(ops));
}

bool is_isomorphism(const TernaryGammaSemiring& first, const TernaryGammaSemiring& second,
                    const Isomorphism& iso) {
  const auto n = first.order();
  const auto m = first.gamma_size();
  if (second.order() != n || second.gamma_size() != m) return false;
  if (iso.map.size() != n || iso.gamma_map.size() != m || iso.map[0] != 0) return false;
  std::vector<bool> hit(n, false);
  for (auto v : iso.map) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  std::vector<bool> ghit(m, false);
  for (auto g : iso.gamma_map) {
    if (g >= m || ghit[g]) return false;
    ghit[g] = true;
  }
  const auto& f = iso.map;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (f[first.add(a, b)] != second.add(f[a], f[b])) return false;
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (f[first.op(g, a, b, c)] != second.op(iso.gamma_map[g], f[a], f[b], f[c]))
            return false;
  return true;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const TernaryGammaSemiring& first, const TernaryGammaSemiring& second,
            std::vector<std::size_t> gamma_map)
      : a_(first), b_(second), gmap_(std::move(gamma_map)), n_(first.order()),
        map_(n_, kUnmapped), used_(n_, false) {}

  std::optional<Isomorphism> run() {
    map_[0] = 0;
    used_[0] = true;
    if (!consistent(0)) return std::nullopt;
    if (extend(1)) return Isomorphism{map_, gmap_};
    return std::nullopt;
  }

 private:
  static constexpr Element kUnmapped = 0xFF;

  bool known(std::size_t x) const { return x < n_ && map_[x] != kUnmapped; }

  // Checks every constraint whose arguments are all mapped and that involves
  // the newly mapped element k (as an argument or as a result).
  bool consistent(std::size_t k) const {
    for (std::size_t x = 0; x <= k; ++x)
      for (std::size_t y = 0; y <= k; ++y) {
        const Element r = a_.add(x, y);
        if (!known(r)) continue;
        if (x != k && y != k && r != k) continue;
        if (map_[r] != b_.add(map_[x], map_[y])) return false;
      }
    for (std::size_t g = 0; g < a_.gamma_size(); ++g)
      for (std::size_t x = 0; x <= k; ++x)
        for (std::size_t y = 0; y <= k; ++y)
          for (std::size_t z = 0; z <= k; ++z) {
            const Element r = a_.op(g, x, y, z);
            if (!known(r)) continue;
            if (x != k && y != k && z != k && r != k) continue;
            if (map_[r] != b_.op(gmap_[g], map_[x], map_[y], map_[z])) return false;
          }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == n_) return is_isomorphism(a_, b_, Isomorphism{map_, gmap_});
    for (std::size_t v = 1; v < n_; ++v) {
      if (used_[v]) continue;
      map_[k] = static_cast<Element>(v);
      used_[v] = true;
      if (consistent(k) && extend(k + 1)) return true;
      used_[v] = false;
      map_[k] = kUnmapped;
    }
    return false;
  }

  const TernaryGammaSemiring& a_;
  const TernaryGammaSemiring& b_;
  std::vector<std::size_t> gmap_;
  std::size_t n_;
  std::vector<Element> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Isomorphism> are_isomorphic(const TernaryGammaSemiring& first,
                                          const TernaryGammaSemiring& second,
                                          bool permute_gamma) {
  if (first.order() != second.order() || first.gamma_size() != second.gamma_size())
    throw InvalidStructure("are_isomorphic: sizes differ");
  std::vector<std::size_t> gmap(first.gamma_size());
  std::iota(gmap.begin(), gmap.end(), std::size_t{0});
  do {
    if (auto iso = IsoSearch(first, second, gmap).run()) return iso;
  } while (permute_gamma && std::next_permutation(gmap.begin(), gmap.end()));
  return std::nullopt;
}

}  // namespace tgs
