#include "tgs/apps.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "tgs/ideals.hpp"
#include "tgs/radical.hpp"

namespace tgs {

namespace {

std::uint64_t checked_space(std::size_t n, std::size_t length, std::uint64_t budget) {
  if (length == 0) throw InvalidStructure("code length must be at least 1");
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (size > budget / std::max<std::size_t>(n, 1))
      throw BoundExceeded("|T|^length exceeds the budget of " + std::to_string(budget));
    size *= n;
  }
  if (size > budget) throw BoundExceeded("|T|^length exceeds the budget of " + std::to_string(budget));
  return size;
}

// Vectors are encoded base n with the first coordinate most significant, so
// numeric order matches lexicographic order.
std::uint64_t encode(const Vector& x, std::size_t n) {
  std::uint64_t code = 0;
  for (auto e : x) code = code * n + e;
  return code;
}

Vector decode(std::uint64_t code, std::size_t n, std::size_t length) {
  Vector x(length);
  for (std::size_t i = length; i-- > 0;) {
    x[i] = static_cast<Element>(code % n);
    code /= n;
  }
  return x;
}

Vector vec_add(const TernaryGammaSemiring& ts, const Vector& x, const Vector& y) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ts.add(x[i], y[i]);
  return out;
}

Vector vec_op(const TernaryGammaSemiring& ts, std::size_t g, const Vector& x, const Vector& y,
              const Vector& z) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ts.op(g, x[i], y[i], z[i]);
  return out;
}

void require_vector(const TernaryGammaSemiring& ts, const Vector& x, std::size_t length) {
  if (x.size() != length) throw InvalidStructure("vector has the wrong length");
  for (auto e : x)
    if (e >= ts.order()) throw InvalidStructure("vector entry out of range");
}

std::vector<Element> negation_table(const TernaryGammaSemiring& ts) {
  std::vector<Element> neg(ts.order(), 0);
  for (std::size_t a = 0; a < ts.order(); ++a) {
    bool found = false;
    for (std::size_t b = 0; b < ts.order() && !found; ++b)
      if (ts.add(a, b) == 0) {
        neg[a] = static_cast<Element>(b);
        found = true;
      }
    if (!found) return {};
  }
  return neg;
}

std::optional<std::size_t> minimum_distance(const TernaryGammaSemiring& ts,
                                            const std::vector<Vector>& words, bool& group) {
  const auto neg = negation_table(ts);
  group = !neg.empty();
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      Vector diff(words[i].size());
      for (std::size_t k = 0; k < diff.size(); ++k)
        diff[k] = group ? ts.add(words[i][k], neg[words[j][k]]) : ts.add(words[i][k], words[j][k]);
      const auto d = hamming_weight(diff);
      if (!best || d < *best) best = d;
    }
  return best;
}

}  // namespace

GammaLinearCode code_generate(const TernaryGammaSemiring& ts, std::size_t length,
                              const std::vector<Vector>& generators, std::uint64_t budget) {
  const auto n = ts.order();
  checked_space(n, length, budget);
  if (generators.empty()) throw InvalidStructure("a code needs at least one generator");
  std::set<std::uint64_t> seen;
  std::vector<Vector> processed, queue;
  for (const auto& g : generators) {
    require_vector(ts, g, length);
    if (seen.insert(encode(g, n)).second) queue.push_back(g);
  }
  auto offer = [&](Vector v) {
    if (seen.insert(encode(v, n)).second) queue.push_back(std::move(v));
  };
  while (!queue.empty()) {
    Vector x = std::move(queue.back());
    queue.pop_back();
    processed.push_back(x);
    for (std::size_t i = 0; i < processed.size(); ++i) offer(vec_add(ts, x, processed[i]));
    for (std::size_t g = 0; g < ts.gamma_size(); ++g)
      for (std::size_t i = 0; i < processed.size(); ++i)
        for (std::size_t j = 0; j < processed.size(); ++j) {
          const auto& y = processed[i];
          const auto& z = processed[j];
          offer(vec_op(ts, g, x, y, z));
          offer(vec_op(ts, g, y, x, z));
          offer(vec_op(ts, g, y, z, x));
        }
  }
  GammaLinearCode code;
  code.length = length;
  for (auto c : seen) code.codewords.push_back(decode(c, n, length));
  return code;
}

bool is_gamma_linear(const TernaryGammaSemiring& ts, const GammaLinearCode& code) {
  if (code.codewords.empty()) return false;
  const auto n = ts.order();
  std::set<std::uint64_t> members;
  for (const auto& c : code.codewords) members.insert(encode(c, n));
  const auto& w = code.codewords;
  for (const auto& x : w)
    for (const auto& y : w)
      if (!members.count(encode(vec_add(ts, x, y), n))) return false;
  for (std::size_t g = 0; g < ts.gamma_size(); ++g)
    for (const auto& x : w)
      for (const auto& y : w)
        for (const auto& z : w)
          if (!members.count(encode(vec_op(ts, g, x, y, z), n))) return false;
  return true;
}

std::size_t hamming_weight(const Vector& x) {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](Element e) { return e != 0; }));
}

WeightReport weight_report(const TernaryGammaSemiring& ts, const GammaLinearCode& code) {
  WeightReport r;
  r.radical = radical(ts).radical;
  const auto q = quotient(ts, r.radical);
  const auto& pi = q.projection.map;
  r.quotient_order = q.structure.order();
  r.projection_injective = r.quotient_order == ts.order();

  const auto l = code.length;
  r.plain.assign(l + 1, 0);
  r.coset.assign(l + 1, 0);
  r.projected.assign(l + 1, 0);
  std::set<Vector> image;
  for (const auto& x : code.codewords) {
    Vector px(l);
    for (std::size_t i = 0; i < l; ++i) px[i] = pi[x[i]];
    const auto plain = hamming_weight(x);
    const auto projected = hamming_weight(px);
    ++r.plain[plain];
    ++r.coset[projected];
    if (plain != projected && !r.plain_witness) r.plain_witness = x;
    image.insert(std::move(px));
  }
  for (const auto& y : image) ++r.projected[hamming_weight(y)];
  r.plain_equal = r.plain == r.projected;
  r.coset_equal = r.coset == r.projected;
  r.minimum_distance = minimum_distance(ts, code.codewords, r.group_metric);
  return r;
}

Vector apply_check(const TernaryGammaSemiring& ts, const CheckOperator& h, const Vector& x) {
  return vec_op(ts, h.gamma, h.u, x, h.v);
}

namespace {

SyndromeSide syndrome_side(const TernaryGammaSemiring& ts, std::size_t length,
                           const std::vector<CheckOperator>& checks, std::uint64_t budget) {
  const auto n = ts.order();
  const auto space = checked_space(n, length, budget);
  SyndromeSide side;
  side.order = n;
  side.kernel.length = length;
  std::map<Vector, std::uint64_t> classes;
  for (std::uint64_t code = 0; code < space; ++code) {
    const auto x = decode(code, n, length);
    Vector syndrome;
    for (const auto& h : checks) {
      const auto hx = apply_check(ts, h, x);
      syndrome.insert(syndrome.end(), hx.begin(), hx.end());
    }
    if (std::all_of(syndrome.begin(), syndrome.end(), [](Element e) { return e == 0; }))
      side.kernel.codewords.push_back(x);
    ++classes[syndrome];
  }
  side.classes = classes.size();
  std::uint64_t total = 0;
  for (const auto& [s, count] : classes) {
    side.class_sizes.push_back(count);
    total += count;
  }
  std::sort(side.class_sizes.rbegin(), side.class_sizes.rend());
  side.partition_ok = total == space;
  bool group = false;
  side.minimum_distance = minimum_distance(ts, side.kernel.codewords, group);
  return side;
}

}  // namespace

CheckCodeReport check_code(const TernaryGammaSemiring& ts, std::size_t length,
                           const std::vector<CheckOperator>& checks, std::uint64_t budget) {
  for (const auto& h : checks) {
    if (h.gamma >= ts.gamma_size()) throw InvalidStructure("check operator gamma out of range");
    require_vector(ts, h.u, length);
    require_vector(ts, h.v, length);
  }
  CheckCodeReport r;
  r.source = syndrome_side(ts, length, checks, budget);

  const auto q = quotient(ts, radical(ts).radical);
  const auto& pi = q.projection.map;
  std::vector<CheckOperator> induced;
  for (const auto& h : checks) {
    CheckOperator p{h.gamma, Vector(length), Vector(length)};
    for (std::size_t i = 0; i < length; ++i) {
      p.u[i] = pi[h.u[i]];
      p.v[i] = pi[h.v[i]];
    }
    induced.push_back(std::move(p));
  }
  r.quotient = syndrome_side(q.structure, length, induced, budget);
  r.same_partition_size = r.source.classes == r.quotient.classes;
  r.same_minimum_distance = r.source.minimum_distance == r.quotient.minimum_distance;
  return r;
}

bool additive_group(const TernaryGammaSemiring& ts) { return !negation_table(ts).empty(); }

SBoxProfile sbox_differential_profile(const TernaryGammaSemiring& ts, std::size_t gamma) {
  if (gamma >= ts.gamma_size()) throw InvalidStructure("gamma index out of range");
  const auto n = ts.order();
  SBoxProfile p;
  p.order = n;
  p.gamma = gamma;
  p.counts.assign(n * n * n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        auto* row = &p.counts[((a * n + b) * n + c) * n];
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
              const auto shifted = ts.op(gamma, ts.add(x, a), ts.add(y, b), ts.add(z, c));
              const auto base = ts.op(gamma, x, y, z);
              for (std::size_t d = 0; d < n; ++d)
                if (ts.add(base, d) == shifted) ++row[d];
            }
      }

  p.group_reduct = additive_group(ts);
  p.partition_property = true;
  const std::uint64_t cube = std::uint64_t{n} * n * n;
  bool any_nonzero = false;
  std::uint64_t best = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        std::uint64_t sum = 0;
        for (std::size_t d = 0; d < n; ++d) {
          const auto v = p.count(a, b, c, d);
          sum += v;
          if ((a | b | c) != 0 && (!any_nonzero || v > best)) {
            any_nonzero = true;
            best = v;
            p.worst = std::array<Element, 4>{Element(a), Element(b), Element(c), Element(d)};
          }
        }
        p.max_row_sum = std::max(p.max_row_sum, sum);
        if (sum != cube) p.partition_property = false;
      }
  p.uniformity = any_nonzero ? best : 1;
  return p;
}

LiftReport sbox_lift_report(const TernaryGammaSemiring& ts, std::size_t gamma) {
  LiftReport r;
  r.source = sbox_differential_profile(ts, gamma);
  r.quotient = sbox_differential_profile(quotient(ts, radical(ts).radical).structure, gamma);
  r.same_uniformity = r.source.uniformity == r.quotient.uniformity;
  return r;
}

// ---------------------------------------------------------------------------

Grade parse_grade(std::string_view text) {
  auto fail = [&] { return InvalidStructure("malformed grade '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw fail();
    return v;
  };
  Grade g;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) throw fail();
    g = Grade(parse_int(text.substr(0, slash)), den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 15) throw fail();
    long long scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const auto whole = dot == 0 ? 0 : parse_int(text.substr(0, dot));
    g = Grade(whole * scale + (frac.empty() ? 0 : parse_int(frac)), scale);
  } else {
    g = Grade(parse_int(text));
  }
  if (g < 0 || g > 1) throw InvalidStructure("grade outside [0, 1]: " + std::string(text));
  return g;
}

std::string format_grade(const Grade& g) {
  if (g.denominator() == 1) return std::to_string(g.numerator());
  return std::to_string(g.numerator()) + "/" + std::to_string(g.denominator());
}

FuzzyReport fuzzy_ideal_check(const TernaryGammaSemiring& ts, const std::vector<Grade>& mu) {
  const auto n = ts.order();
  if (mu.size() != n) throw InvalidStructure("need one grade per element");
  for (const auto& g : mu)
    if (g < 0 || g > 1) throw InvalidStructure("grade outside [0, 1]");

  FuzzyReport r;
  r.fuzzy_ideal = true;
  for (std::size_t a = 0; a < n && r.fuzzy_ideal; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mu[ts.add(a, b)] < std::min(mu[a], mu[b])) {
        r.fuzzy_ideal = false;
        r.witness = FuzzyWitness{"add", {Element(a), Element(b)}, ""};
        break;
      }
  for (std::size_t g = 0; g < ts.gamma_size() && r.fuzzy_ideal; ++g)
    for (std::size_t x = 0; x < n && r.fuzzy_ideal; ++x)
      for (std::size_t y = 0; y < n && r.fuzzy_ideal; ++y)
        for (std::size_t a = 0; a < n; ++a)
          if (mu[ts.op(g, x, y, a)] < mu[a]) {
            r.fuzzy_ideal = false;
            r.witness = FuzzyWitness{"product", {Element(x), Element(y), Element(a)}, ts.gamma()[g]};
            break;
          }

  std::set<Grade> levels;
  for (const auto& g : mu)
    if (g > 0) levels.insert(g);
  r.all_cuts_ideals = true;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    LevelCut cut{*it, IdealSet(), false};
    for (std::size_t a = 0; a < n; ++a)
      if (mu[a] >= *it) cut.members.insert(a);
    cut.ideal = is_ideal(ts, cut.members);
    r.all_cuts_ideals = r.all_cuts_ideals && cut.ideal;
    r.cuts.push_back(cut);
  }
  r.support.level = 0;
  for (std::size_t a = 0; a < n; ++a)
    if (mu[a] > 0) r.support.members.insert(a);
  r.support.ideal = is_ideal(ts, r.support.members);
  return r;
}

ChainReconstruction fuzzy_from_chain(const TernaryGammaSemiring& ts,
                                     const std::vector<std::pair<Grade, IdealSet>>& chain) {
  auto sorted = chain;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& [level, ideal] = sorted[i];
    if (level <= 0 || level > 1) throw InvalidStructure("chain levels must lie in (0, 1]");
    if (!is_ideal(ts, ideal)) throw InvalidStructure("chain member is not an ideal");
    if (i > 0 && (level == sorted[i - 1].first || !sorted[i - 1].second.subset_of(ideal)))
      throw InvalidStructure("ideals do not form a chain indexed by decreasing levels");
  }
  ChainReconstruction r;
  r.grades.assign(ts.order(), Grade(0));
  for (std::size_t a = 0; a < ts.order(); ++a)
    for (const auto& [level, ideal] : sorted)
      if (ideal.contains(a)) {
        r.grades[a] = level;
        break;
      }
  r.check = fuzzy_ideal_check(ts, r.grades);
  r.round_trip = true;
  for (const auto& [level, ideal] : sorted) {
    IdealSet cut;
    for (std::size_t a = 0; a < ts.order(); ++a)
      if (r.grades[a] >= level) cut.insert(a);
    if (cut != ideal) r.round_trip = false;
  }
  return r;
}

// ---------------------------------------------------------------------------

WeightedGraph parse_graph(std::string_view text, std::size_t order) {
  WeightedGraph g;
  bool header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    auto fail = [&](const std::string& why) {
      return InvalidStructure("graph line " + std::to_string(line_no) + ": " + why);
    };
    if (!header) {
      long long count = -1;
      std::string extra;
      if (first != "vertices" || !(fields >> count) || count < 0 || (fields >> extra))
        throw fail("expected 'vertices N'");
      g.vertices = static_cast<std::size_t>(count);
      header = true;
      continue;
    }
    long long src = -1, dst = -1, weight = -1;
    std::string extra;
    std::istringstream edge(line);
    if (!(edge >> src >> dst >> weight) || (edge >> extra)) throw fail("expected 'src dst weight'");
    if (src < 0 || dst < 0 || static_cast<std::size_t>(src) >= g.vertices ||
        static_cast<std::size_t>(dst) >= g.vertices)
      throw fail("vertex out of range");
    if (weight < 0 || static_cast<std::size_t>(weight) >= order) throw fail("weight out of range");
    g.edges.push_back(Edge{std::size_t(src), std::size_t(dst), Element(weight)});
  }
  if (!header) throw InvalidStructure("graph: missing 'vertices N' header");
  return g;
}

namespace {

void join_into(const TernaryGammaSemiring& ts, std::optional<Element>& cell, Element value) {
  cell = cell ? ts.add(*cell, value) : value;
}

PathMatrix apply_triple(const TernaryGammaSemiring& ts, std::size_t gamma, const PathMatrix& m) {
  PathMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) out[i] = ts.op(gamma, *m[i], *m[i], *m[i]);
  return out;
}

void require_graph(const TernaryGammaSemiring& ts, const WeightedGraph& graph) {
  for (const auto& e : graph.edges)
    if (e.src >= graph.vertices || e.dst >= graph.vertices || e.weight >= ts.order())
      throw InvalidStructure("graph edge out of range");
}

}  // namespace

PathReport ternary_path_values(const TernaryGammaSemiring& ts, std::size_t gamma,
                               const WeightedGraph& graph, std::size_t horizon) {
  if (gamma >= ts.gamma_size()) throw InvalidStructure("gamma index out of range");
  for (std::size_t a = 0; a < ts.order(); ++a)
    if (ts.add(a, a) != a) throw Error("path values need an idempotent addition");
  require_graph(ts, graph);
  const auto v = graph.vertices;
  PathReport r;
  r.vertices = v;
  r.horizon = horizon == 0 ? v * ts.order() : horizon;

  PathMatrix current(v * v);
  for (const auto& e : graph.edges) join_into(ts, current[e.src * v + e.dst], e.weight);
  for (r.iterations = 0; r.iterations < r.horizon;) {
    PathMatrix next = current;
    for (std::size_t u = 0; u < v; ++u)
      for (const auto& e : graph.edges)
        if (const auto w = current[u * v + e.src]) join_into(ts, next[u * v + e.dst], ts.add(*w, e.weight));
    ++r.iterations;
    if (next == current) {
      r.stabilized = true;
      break;
    }
    current = std::move(next);
  }
  r.join = current;
  r.value = apply_triple(ts, gamma, current);
  return r;
}

PathCrossCheck path_triple_check(const TernaryGammaSemiring& ts, std::size_t gamma,
                                 const WeightedGraph& graph, const PathReport& report) {
  require_graph(ts, graph);
  const auto v = graph.vertices;
  const auto n = ts.order();
  PathCrossCheck c;
  c.vertices = v;
  c.explicit_value.assign(v * v, std::nullopt);
  for (std::size_t u = 0; u < v; ++u) {
    // Reachable states (vertex, weight of the walk so far).
    std::vector<bool> seen(v * n, false);
    std::vector<std::size_t> stack;
    for (const auto& e : graph.edges)
      if (e.src == u && !seen[e.dst * n + e.weight]) {
        seen[e.dst * n + e.weight] = true;
        stack.push_back(e.dst * n + e.weight);
      }
    while (!stack.empty()) {
      const auto state = stack.back();
      stack.pop_back();
      const auto at = state / n;
      const auto w = state % n;
      for (const auto& e : graph.edges)
        if (e.src == at) {
          const auto next = e.dst * n + ts.add(w, e.weight);
          if (!seen[next]) {
            seen[next] = true;
            stack.push_back(next);
          }
        }
    }
    for (std::size_t t = 0; t < v; ++t) {
      std::vector<Element> weights;
      for (std::size_t w = 0; w < n; ++w)
        if (seen[t * n + w]) weights.push_back(Element(w));
      auto& cell = c.explicit_value[u * v + t];
      for (auto p : weights)
        for (auto q : weights)
          for (auto r : weights) join_into(ts, cell, ts.op(gamma, p, q, r));
    }
  }
  c.agrees = true;
  for (std::size_t i = 0; i < v * v; ++i)
    if (c.explicit_value[i] != report.value[i]) {
      c.agrees = false;
      c.witness = std::pair(i / v, i % v);
      break;
    }
  return c;
}

}  // namespace tgs
