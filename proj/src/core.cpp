#include "tgs/core.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace tgs {

TernaryGammaSemiring::TernaryGammaSemiring(std::size_t n, std::vector<std::string> gamma,
                                           std::vector<Element> add,
                                           std::vector<std::vector<Element>> ops)
    : n_(n), gamma_(std::move(gamma)), add_(std::move(add)), ops_(std::move(ops)) {
  if (n_ == 0 || n_ > kMaxOrder) throw InvalidStructure("carrier size must be in 1..255");
  if (gamma_.empty()) throw InvalidStructure("gamma must be nonempty");
  std::set<std::string> distinct(gamma_.begin(), gamma_.end());
  if (distinct.size() != gamma_.size()) throw InvalidStructure("gamma labels must be distinct");
  if (add_.size() != n_ * n_) throw InvalidStructure("additive table has wrong size");
  if (ops_.size() != gamma_.size()) throw InvalidStructure("one tensor per gamma label required");
  for (auto e : add_)
    if (e >= n_) throw InvalidStructure("additive table entry out of range");
  for (const auto& t : ops_) {
    if (t.size() != n_ * n_ * n_) throw InvalidStructure("ternary tensor has wrong size");
    for (auto e : t)
      if (e >= n_) throw InvalidStructure("ternary tensor entry out of range");
  }
  for (std::size_t a = 0; a < n_; ++a)
    if (add_[a] != a) throw InvalidStructure("element 0 must be the additive identity (0 + a = a)");
}

std::size_t TernaryGammaSemiring::gamma_index(std::string_view label) const {
  for (std::size_t g = 0; g < gamma_.size(); ++g)
    if (gamma_[g] == label) return g;
  throw InvalidStructure("unknown gamma label '" + std::string(label) + "'");
}

Element evaluate(const TernaryGammaSemiring& ts, std::string_view label, std::size_t a,
                 std::size_t b, std::size_t c) {
  return evaluate(ts, ts.gamma_index(label), a, b, c);
}

Element evaluate(const TernaryGammaSemiring& ts, std::size_t gamma, std::size_t a, std::size_t b,
                 std::size_t c) {
  if (gamma >= ts.gamma_size()) throw InvalidStructure("gamma index out of range");
  const auto n = ts.order();
  if (a >= n || b >= n || c >= n) throw InvalidStructure("element out of range");
  return ts.op(gamma, a, b, c);
}

// ---------------------------------------------------------------------------

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::T1: return "T1";
    case Axiom::T2: return "T2";
    case Axiom::T3: return "T3";
    case Axiom::T4: return "T4";
    case Axiom::C: return "C";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (auto a : kAllAxioms)
    if (axiom_name(a) == name) return a;
  return std::nullopt;
}

AxiomMode AxiomMode::relaxed() {
  return of({Axiom::T1, Axiom::T2, Axiom::T4, Axiom::C});
}

AxiomMode AxiomMode::of(std::initializer_list<Axiom> axioms) {
  unsigned bits = 1U << static_cast<unsigned>(Axiom::T1);
  for (auto a : axioms) bits |= 1U << static_cast<unsigned>(a);
  return AxiomMode(bits);
}

std::vector<Axiom> AxiomMode::axioms() const {
  std::vector<Axiom> out;
  for (auto a : kAllAxioms)
    if (enabled(a)) out.push_back(a);
  return out;
}

std::string AxiomMode::name() const {
  if (*this == strict()) return "strict";
  if (*this == relaxed()) return "relaxed";
  std::string out;
  for (auto a : axioms()) {
    if (!out.empty()) out += ',';
    out += axiom_name(a);
  }
  return out;
}

AxiomMode AxiomMode::parse(std::string_view text) {
  if (text == "strict") return strict();
  if (text == "relaxed") return relaxed();
  unsigned bits = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    auto axiom = parse_axiom(token);
    if (!axiom) throw InvalidStructure("unknown axiom '" + std::string(token) + "' in mode");
    bits |= 1U << static_cast<unsigned>(*axiom);
    start = end + 1;
  }
  if (!(bits & 1U)) throw InvalidStructure("axiom mode must include T1");
  return AxiomMode(bits);
}

bool AxiomReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

const AxiomResult* AxiomReport::find(Axiom axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return &r;
  return nullptr;
}

namespace {

constexpr std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

// {x y z} with `inserted` placed at `slot` and (p, q) filling the others in order.
Element op_with_slot(const TernaryGammaSemiring& ts, std::size_t g, unsigned slot,
                     std::size_t inserted, std::size_t p, std::size_t q) {
  switch (slot) {
    case 0: return ts.op(g, inserted, p, q);
    case 1: return ts.op(g, p, inserted, q);
    default: return ts.op(g, p, q, inserted);
  }
}

std::array<Element, 3> slot_triple(unsigned slot, Element inserted, Element p, Element q) {
  switch (slot) {
    case 0: return {inserted, p, q};
    case 1: return {p, inserted, q};
    default: return {p, q, inserted};
  }
}

// Each scanner calls visit(witness) on every violation; visit returns false
// to stop early. Scanners return false when stopped.
template <class Visit>
bool scan_t1(const TernaryGammaSemiring& ts, Visit&& visit) {
  const auto n = ts.order();
  for (std::size_t a = 0; a < n; ++a) {
    if (ts.add(0, a) != a &&
        !visit(AxiomWitness{{Element(a)}, {}, 2, ts.add(0, a), Element(a)}))
      return false;
    if (ts.add(a, 0) != a &&
        !visit(AxiomWitness{{Element(a)}, {}, 3, ts.add(a, 0), Element(a)}))
      return false;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (ts.add(a, b) != ts.add(b, a) &&
          !visit(AxiomWitness{{Element(a), Element(b)}, {}, 1, ts.add(a, b), ts.add(b, a)}))
        return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Element lhs = ts.add(ts.add(a, b), c);
        Element rhs = ts.add(a, ts.add(b, c));
        if (lhs != rhs &&
            !visit(AxiomWitness{{Element(a), Element(b), Element(c)}, {}, 0, lhs, rhs}))
          return false;
      }
  return true;
}

template <class Visit>
bool scan_t2(const TernaryGammaSemiring& ts, Visit&& visit) {
  const auto n = ts.order();
  for (std::size_t g = 0; g < ts.gamma_size(); ++g)
    for (unsigned slot = 0; slot < 3; ++slot)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = 0; d < n; ++d) {
              Element lhs = op_with_slot(ts, g, slot, ts.add(a, b), c, d);
              Element rhs = ts.add(op_with_slot(ts, g, slot, a, c, d),
                                   op_with_slot(ts, g, slot, b, c, d));
              if (lhs != rhs &&
                  !visit(AxiomWitness{{Element(a), Element(b), Element(c), Element(d)},
                                      {g},
                                      slot,
                                      lhs,
                                      rhs}))
                return false;
            }
  return true;
}

template <class Visit>
bool scan_t3(const TernaryGammaSemiring& ts, Visit&& visit) {
  const auto n = ts.order();
  for (std::size_t g = 0; g < ts.gamma_size(); ++g)
    for (unsigned slot = 0; slot < 3; ++slot)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          Element lhs = op_with_slot(ts, g, slot, 0, p, q);
          if (lhs != 0) {
            auto t = slot_triple(slot, 0, Element(p), Element(q));
            if (!visit(AxiomWitness{{t[0], t[1], t[2]}, {g}, slot, lhs, 0})) return false;
          }
        }
  return true;
}

template <class Visit>
bool scan_t4(const TernaryGammaSemiring& ts, Visit&& visit) {
  const auto n = ts.order();
  const auto m = ts.gamma_size();
  for (std::size_t alpha = 0; alpha < m; ++alpha)
    for (std::size_t beta = 0; beta < m; ++beta)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) {
            const Element inner = ts.op(alpha, a, b, c);
            for (std::size_t d = 0; d < n; ++d)
              for (std::size_t e = 0; e < n; ++e) {
                Element lhs = ts.op(beta, inner, d, e);
                Element rhs = ts.op(alpha, a, b, ts.op(beta, c, d, e));
                if (lhs != rhs &&
                    !visit(AxiomWitness{
                        {Element(a), Element(b), Element(c), Element(d), Element(e)},
                        {alpha, beta},
                        0,
                        lhs,
                        rhs}))
                  return false;
              }
          }
  return true;
}

template <class Visit>
bool scan_c(const TernaryGammaSemiring& ts, Visit&& visit) {
  const auto n = ts.order();
  for (std::size_t g = 0; g < ts.gamma_size(); ++g)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const std::array<std::size_t, 3> t{a, b, c};
          const Element lhs = ts.op(g, a, b, c);
          for (unsigned k = 1; k < 6; ++k) {
            const auto& p = kPermutations[k];
            Element rhs = ts.op(g, t[p[0]], t[p[1]], t[p[2]]);
            if (lhs != rhs &&
                !visit(AxiomWitness{{Element(a), Element(b), Element(c)}, {g}, k, lhs, rhs}))
              return false;
          }
        }
  return true;
}

template <class Visit>
bool scan(const TernaryGammaSemiring& ts, Axiom axiom, Visit&& visit) {
  switch (axiom) {
    case Axiom::T1: return scan_t1(ts, visit);
    case Axiom::T2: return scan_t2(ts, visit);
    case Axiom::T3: return scan_t3(ts, visit);
    case Axiom::T4: return scan_t4(ts, visit);
    case Axiom::C: return scan_c(ts, visit);
  }
  return true;
}

}  // namespace

AxiomReport check_axioms(const TernaryGammaSemiring& ts, AxiomMode mode,
                         std::size_t max_witnesses) {
  AxiomReport report{mode, {}};
  for (auto axiom : mode.axioms()) {
    AxiomResult result{axiom, true, 0, {}};
    scan(ts, axiom, [&](AxiomWitness&& w) {
      result.pass = false;
      ++result.violations;
      if (result.witnesses.size() < max_witnesses) result.witnesses.push_back(std::move(w));
      return true;
    });
    report.results.push_back(std::move(result));
  }
  return report;
}

bool satisfies(const TernaryGammaSemiring& ts, Axiom axiom) {
  return scan(ts, axiom, [](AxiomWitness&&) { return false; });
}

bool satisfies(const TernaryGammaSemiring& ts, AxiomMode mode) {
  // Cheapest checks first.
  for (auto axiom : {Axiom::T1, Axiom::T3, Axiom::C, Axiom::T2, Axiom::T4})
    if (mode.enabled(axiom) && !satisfies(ts, axiom)) return false;
  return true;
}

std::pair<Element, Element> evaluate_witness(const TernaryGammaSemiring& ts, Axiom axiom,
                                             const AxiomWitness& w) {
  const auto& x = w.args;
  auto need = [&](std::size_t args, std::size_t gammas) {
    if (x.size() != args || w.gammas.size() != gammas)
      throw InvalidStructure("witness has the wrong shape");
    for (auto e : x)
      if (e >= ts.order()) throw InvalidStructure("witness element out of range");
    for (auto g : w.gammas)
      if (g >= ts.gamma_size()) throw InvalidStructure("witness gamma out of range");
  };
  switch (axiom) {
    case Axiom::T1:
      switch (w.variant) {
        case 0:
          need(3, 0);
          return {ts.add(ts.add(x[0], x[1]), x[2]), ts.add(x[0], ts.add(x[1], x[2]))};
        case 1: need(2, 0); return {ts.add(x[0], x[1]), ts.add(x[1], x[0])};
        case 2: need(1, 0); return {ts.add(0, x[0]), x[0]};
        default: need(1, 0); return {ts.add(x[0], 0), x[0]};
      }
    case Axiom::T2: {
      need(4, 1);
      const auto g = w.gammas[0];
      const auto slot = w.variant;
      return {op_with_slot(ts, g, slot, ts.add(x[0], x[1]), x[2], x[3]),
              ts.add(op_with_slot(ts, g, slot, x[0], x[2], x[3]),
                     op_with_slot(ts, g, slot, x[1], x[2], x[3]))};
    }
    case Axiom::T3:
      need(3, 1);
      return {ts.op(w.gammas[0], x[0], x[1], x[2]), 0};
    case Axiom::T4: {
      need(5, 2);
      const auto alpha = w.gammas[0];
      const auto beta = w.gammas[1];
      return {ts.op(beta, ts.op(alpha, x[0], x[1], x[2]), x[3], x[4]),
              ts.op(alpha, x[0], x[1], ts.op(beta, x[2], x[3], x[4]))};
    }
    case Axiom::C: {
      need(3, 1);
      if (w.variant == 0 || w.variant >= 6) throw InvalidStructure("bad permutation index");
      const auto& p = kPermutations[w.variant];
      return {ts.op(w.gammas[0], x[0], x[1], x[2]),
              ts.op(w.gammas[0], x[p[0]], x[p[1]], x[p[2]])};
    }
  }
  return {0, 0};
}

// ---------------------------------------------------------------------------

std::optional<NamedKind> parse_named_kind(std::string_view name) {
  for (auto k : {NamedKind::modular, NamedKind::truncated_sum, NamedKind::max_op,
                 NamedKind::boolean_table2, NamedKind::boolean_and_or, NamedKind::zero_op})
    if (named_kind_name(k) == name) return k;
  return std::nullopt;
}

std::string_view named_kind_name(NamedKind kind) {
  switch (kind) {
    case NamedKind::modular: return "modular";
    case NamedKind::truncated_sum: return "truncated_sum";
    case NamedKind::max_op: return "max_op";
    case NamedKind::boolean_table2: return "boolean_table2";
    case NamedKind::boolean_and_or: return "boolean_and_or";
    case NamedKind::zero_op: return "zero_op";
  }
  return "?";
}

std::vector<Element> additive_table(AdditiveKind kind, std::size_t n) {
  std::vector<Element> add(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t v = 0;
      switch (kind) {
        case AdditiveKind::modular: v = (a + b) % n; break;
        case AdditiveKind::max: v = std::max(a, b); break;
        case AdditiveKind::truncated: v = std::min(a + b, n - 1); break;
      }
      add[a * n + b] = static_cast<Element>(v);
    }
  return add;
}

namespace {

template <class F>
std::vector<Element> tensor_from(std::size_t n, F&& f) {
  std::vector<Element> t(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) t[(a * n + b) * n + c] = static_cast<Element>(f(a, b, c));
  return t;
}

}  // namespace

TernaryGammaSemiring build_named(NamedKind kind, std::size_t n, const NamedParams& params) {
  if (n == 0 || n > kMaxOrder) throw InvalidStructure("unsupported carrier size");
  const auto m = params.gamma_size;
  if (m == 0) throw InvalidStructure("gamma size must be positive");
  const bool boolean = kind == NamedKind::boolean_table2 || kind == NamedKind::boolean_and_or;
  if (boolean && n != 2)
    throw InvalidStructure(std::string(named_kind_name(kind)) + " requires n = 2");
  if (kind == NamedKind::truncated_sum && m > 2)
    throw InvalidStructure("truncated_sum supports at most two gamma labels");

  AdditiveKind native = AdditiveKind::modular;
  switch (kind) {
    case NamedKind::modular:
    case NamedKind::zero_op: native = AdditiveKind::modular; break;
    case NamedKind::truncated_sum: native = AdditiveKind::truncated; break;
    case NamedKind::max_op:
    case NamedKind::boolean_table2:
    case NamedKind::boolean_and_or: native = AdditiveKind::max; break;
  }
  auto add = additive_table(params.add.value_or(native), n);

  std::vector<Element> tensor;
  switch (kind) {
    case NamedKind::modular:
      tensor = tensor_from(n, [n](auto a, auto b, auto c) { return (a + b + c) % n; });
      break;
    case NamedKind::truncated_sum:
      tensor = tensor_from(n, [n](auto a, auto b, auto c) { return std::min(a + b + c, n - 1); });
      break;
    case NamedKind::max_op:
      tensor = tensor_from(n, [](auto a, auto b, auto c) { return std::max({a, b, c}); });
      break;
    case NamedKind::boolean_table2:
      // Majority: (0,0,0)->0, (0,0,1)->0, (0,1,1)->1, (1,1,1)->1.
      tensor = tensor_from(n, [](auto a, auto b, auto c) { return a + b + c >= 2 ? 1 : 0; });
      break;
    case NamedKind::boolean_and_or:
      tensor = tensor_from(n, [](auto a, auto b, auto c) { return std::min({a, b, c}); });
      break;
    case NamedKind::zero_op:
      tensor.assign(n * n * n, 0);
      break;
  }

  std::vector<std::string> labels;
  std::vector<std::vector<Element>> ops;
  if (kind == NamedKind::truncated_sum && m == 2) {
    labels = {"alpha", "beta"};
    ops = {tensor, tensor_from(n, [](auto a, auto b, auto c) { return std::max({a, b, c}); })};
  } else {
    for (std::size_t g = 0; g < m; ++g) {
      labels.push_back(std::to_string(g + 1));
      ops.push_back(tensor);
    }
  }
  return TernaryGammaSemiring(n, std::move(labels), std::move(add), std::move(ops));
}

// ---------------------------------------------------------------------------

TernaryGammaSemiring direct_product(const TernaryGammaSemiring& first,
                                    const TernaryGammaSemiring& second) {
  if (first.gamma() != second.gamma()) throw InvalidStructure("direct_product: gamma mismatch");
  const auto n1 = first.order();
  const auto n2 = second.order();
  const auto n = n1 * n2;
  if (n > kMaxOrder) throw InvalidStructure("direct_product: carrier too large");
  auto enc = [n2](std::size_t x, std::size_t y) { return static_cast<Element>(x * n2 + y); };

  std::vector<Element> add(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      add[p * n + q] = enc(first.add(p / n2, q / n2), second.add(p % n2, q % n2));

  std::vector<std::vector<Element>> ops;
  for (std::size_t g = 0; g < first.gamma_size(); ++g) {
    std::vector<Element> t(n * n * n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < n; ++r)
          t[(p * n + q) * n + r] =
              enc(first.op(g, p / n2, q / n2, r / n2), second.op(g, p % n2, q % n2, r % n2));
    ops.push_back(std::move(t));
  }
  return TernaryGammaSemiring(n, first.gamma(), std::move(add), std::move(ops));
}

QuotientResult quotient(const TernaryGammaSemiring& ts, const Congruence& by) {
  const auto n = ts.order();
  if (by.order() != n) throw InvalidStructure("quotient: partition size mismatch");
  // Blocks ordered by least representative; the block of 0 comes first.
  std::vector<Element> cls(n);
  std::size_t k = 0;
  std::vector<Element> block_of_rep(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    if (by.rep(a) == a) block_of_rep[a] = static_cast<Element>(k++);
  for (std::size_t a = 0; a < n; ++a) cls[a] = block_of_rep[by.rep(a)];

  auto ill_defined = [&](const std::string& op, Element x, Element y) {
    std::ostringstream msg;
    msg << "quotient: induced " << op << " is not well defined (" << int(x) << " and "
        << int(y) << " are not identified)";
    throw IllDefinedQuotient(msg.str(), x, y);
  };

  constexpr int kUnset = -1;
  std::vector<int> add(k * k, kUnset);
  std::vector<Element> add_src(k * k, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto slot = cls[a] * k + cls[b];
      const Element v = ts.add(a, b);
      if (add[slot] == kUnset) {
        add[slot] = cls[v];
        add_src[slot] = v;
      } else if (add[slot] != cls[v]) {
        ill_defined("addition", add_src[slot], v);
      }
    }

  std::vector<std::vector<Element>> ops;
  for (std::size_t g = 0; g < ts.gamma_size(); ++g) {
    std::vector<int> t(k * k * k, kUnset);
    std::vector<Element> src(k * k * k, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const auto slot = (cls[a] * k + cls[b]) * k + cls[c];
          const Element v = ts.op(g, a, b, c);
          if (t[slot] == kUnset) {
            t[slot] = cls[v];
            src[slot] = v;
          } else if (t[slot] != cls[v]) {
            ill_defined("operation " + ts.gamma()[g], src[slot], v);
          }
        }
    ops.emplace_back(t.begin(), t.end());
  }
  TernaryGammaSemiring q(k, ts.gamma(), std::vector<Element>(add.begin(), add.end()),
                         std::move(ops));
  Homomorphism projection{ts, q, cls};
  return QuotientResult{std::move(q), by, std::move(projection)};
}

Congruence bourne_congruence(const TernaryGammaSemiring& ts, IdealSet ideal) {
  const auto n = ts.order();
  if (n > 64) throw BoundExceeded("ideal operations support at most 64 elements");
  const auto members = ideal.elements();
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      bool related = false;
      for (auto i : members) {
        for (auto j : members)
          if (ts.add(a, i) == ts.add(b, j)) {
            related = true;
            break;
          }
        if (related) break;
      }
      if (related) pairs.emplace_back(Element(a), Element(b));
    }
  return Congruence::from_pairs(n, pairs);
}

QuotientResult quotient(const TernaryGammaSemiring& ts, IdealSet by) {
  return quotient(ts, bourne_congruence(ts, by));
}

TernaryGammaSemiring restrict_to(const TernaryGammaSemiring& ts, IdealSet subset) {
  const auto members = subset.elements();
  if (members.empty() || members.front() != 0)
    throw InvalidStructure("restrict_to: subset must contain 0");
  const auto k = members.size();
  std::vector<int> index(ts.order(), -1);
  for (std::size_t i = 0; i < k; ++i) index[members[i]] = static_cast<int>(i);
  auto inside = [&](Element v) {
    if (index[v] < 0) throw InvalidStructure("restrict_to: subset not closed");
    return static_cast<Element>(index[v]);
  };
  std::vector<Element> add(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) add[a * k + b] = inside(ts.add(members[a], members[b]));
  std::vector<std::vector<Element>> ops;
  for (std::size_t g = 0; g < ts.gamma_size(); ++g) {
    std::vector<Element> t(k * k * k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c)
          t[(a * k + b) * k + c] = inside(ts.op(g, members[a], members[b], members[c]));
    ops.push_back(std::move(t));
  }
  return TernaryGammaSemiring(k, ts.gamma(), std::move(add), std::move(ops));
}

HomomorphismCheck is_homomorphism(const TernaryGammaSemiring& source,
                                  const TernaryGammaSemiring& target,
                                  const std::vector<Element>& map) {
  const auto n = source.order();
  if (map.size() != n) throw InvalidStructure("homomorphism map must be total on the source");
  for (auto v : map)
    if (v >= target.order()) throw InvalidStructure("homomorphism image out of range");
  if (source.gamma_size() != target.gamma_size())
    throw InvalidStructure("homomorphism: gamma sizes differ");

  HomomorphismCheck result;
  if (map[0] != 0) {
    result.witness = HomomorphismWitness{"zero", {0}, map[0], 0};
    return result;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Element lhs = map[source.add(a, b)];
      Element rhs = target.add(map[a], map[b]);
      if (lhs != rhs) {
        result.witness = HomomorphismWitness{"add", {Element(a), Element(b)}, lhs, rhs};
        return result;
      }
    }
  for (std::size_t g = 0; g < source.gamma_size(); ++g)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          Element lhs = map[source.op(g, a, b, c)];
          Element rhs = target.op(g, map[a], map[b], map[c]);
          if (lhs != rhs) {
            result.witness = HomomorphismWitness{
                source.gamma()[g], {Element(a), Element(b), Element(c)}, lhs, rhs};
            return result;
          }
        }
  result.ok = true;
  if (n <= 64) {
    IdealSet kernel;
    for (std::size_t a = 0; a < n; ++a)
      if (map[a] == 0) kernel.insert(a);
    result.kernel = kernel;
  }
  return result;
}

TernaryGammaSemiring relabel(const TernaryGammaSemiring& ts, const std::vector<Element>& phi) {
  const auto n = ts.order();
  if (phi.size() != n || phi[0] != 0) throw InvalidStructure("relabel: phi must fix 0");
  std::vector<bool> hit(n, false);
  for (auto v : phi) {
    if (v >= n || hit[v]) throw InvalidStructure("relabel: phi must be a permutation");
    hit[v] = true;
  }
  std::vector<Element> add(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) add[phi[a] * n + phi[b]] = phi[ts.add(a, b)];
  std::vector<std::vector<Element>> ops;
  for (std::size_t g = 0; g < ts.gamma_size(); ++g) {
    std::vector<Element> t(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          t[(phi[a] * n + phi[b]) * n + phi[c]] = phi[ts.op(g, a, b, c)];
    ops.push_back(std::move(t));
  }
  return TernaryGammaSemiring(n, ts.gamma(), std::move(add), std::move(ops));
}

}  // namespace tgs
