#include "affcrystal/path_model.hpp"

#include "affcrystal/algebra_energy.hpp"
#include "affcrystal/detail/rational_linear.hpp"
#include "affcrystal/perfect.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace affcrystal {

int GroundState::at(std::size_t k) const {
  if (k < elements.size()) return elements[k];
  const std::size_t s = static_cast<std::size_t>(period_start);
  return elements[s + (k - s) % static_cast<std::size_t>(period)];
}

int GroundState::weight_at(std::size_t k) const {
  if (k < weights.size()) return weights[k];
  const std::size_t s = static_cast<std::size_t>(period_start);
  return weights[s + (k - s) % static_cast<std::size_t>(period)];
}

std::size_t PathHash::operator()(const Path& p) const noexcept {
  std::size_t h = std::hash<int>{}(p.lambda);
  for (int v : p.prefix) h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

namespace {

int unit_index(const std::vector<int>& v) {
  int found = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1 || found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

}  // namespace

PathModel::PathModel(LevelOneCrystal b)
    : b_(std::move(b)), t_(tensor_product(b_.graph())), h_(energy_propagate(b_, t_)) {
  const auto& g = b_.graph();
  const auto minimal = minimal_elements(b_);
  std::vector<int> lower(static_cast<std::size_t>(b_.datum().size()), kAbsent);
  for (const auto& m : minimal) {
    dominants_.push_back(m.index);
    lower[static_cast<std::size_t>(m.index)] = m.lower;
  }
  ground_.resize(static_cast<std::size_t>(b_.datum().size()));
  for (int lambda : dominants_) {
    GroundState gs;
    gs.lambda = lambda;
    std::vector<int> first_seen(lower.size(), -1);
    int current = lambda;
    while (first_seen[static_cast<std::size_t>(current)] < 0) {
      const int bk = lower[static_cast<std::size_t>(current)];
      if (bk == kAbsent) throw std::logic_error("no unique b_lambda for Lambda_" + std::to_string(current));
      first_seen[static_cast<std::size_t>(current)] = static_cast<int>(gs.elements.size());
      gs.elements.push_back(bk);
      gs.weights.push_back(current);
      current = unit_index(g.epsilon_vec(bk));
      if (current < 0) throw std::logic_error("eps(" + g.label(bk) + ") is not a level-1 dominant weight");
    }
    gs.period_start = first_seen[static_cast<std::size_t>(current)];
    gs.period = static_cast<int>(gs.elements.size()) - gs.period_start;
    ground_[static_cast<std::size_t>(lambda)] = std::move(gs);
  }
}

const GroundState& PathModel::ground_state(int lambda) const {
  if (lambda < 0 || lambda >= static_cast<int>(ground_.size()) || !ground_[static_cast<std::size_t>(lambda)])
    throw std::invalid_argument("Lambda_" + std::to_string(lambda) + " is not a level-1 dominant weight of " +
                                b_.datum().type.name());
  return *ground_[static_cast<std::size_t>(lambda)];
}

void PathModel::canonicalize(Path& p) const {
  const auto& gs = ground_state(p.lambda);
  while (!p.prefix.empty() && p.prefix.back() == gs.at(p.prefix.size() - 1)) p.prefix.pop_back();
}

namespace {

// Signature of tail (x) p_{N-1} (x) ... (x) p_0: each factor writes -^eps +^phi,
// adjacent "+-" pairs cancel. Slot -1 stands for the ground-state tail.
struct Signature {
  std::vector<std::pair<int, int>> plus;  // surviving (slot, count), leftmost first
  int minus_total = 0;
  int rightmost_minus = -2;
};

Signature signature(const CrystalGraph& g, const std::vector<int>& prefix, int tail_phi, int i) {
  Signature s;
  if (tail_phi > 0) s.plus.push_back({-1, tail_phi});
  for (std::size_t k = prefix.size(); k-- > 0;) {
    int eps = g.epsilon(prefix[k], i);
    while (eps > 0 && !s.plus.empty()) {
      const int take = std::min(eps, s.plus.back().second);
      eps -= take;
      if ((s.plus.back().second -= take) == 0) s.plus.pop_back();
    }
    if (eps > 0) {
      s.minus_total += eps;
      s.rightmost_minus = static_cast<int>(k);
    }
    if (const int phi = g.phi(prefix[k], i); phi > 0) s.plus.push_back({static_cast<int>(k), phi});
  }
  return s;
}

}  // namespace

std::optional<Path> PathModel::apply(const Path& p, int i, bool lower) const {
  const auto& gs = ground_state(p.lambda);
  const auto& g = b_.graph();
  Path out = p;
  for (;;) {
    const auto s = signature(g, out.prefix, g.phi(gs.at(out.prefix.size()), i), i);
    if (lower) {
      if (s.plus.empty()) return std::nullopt;
      const int slot = s.plus.front().first;
      if (slot < 0) {
        out.prefix.push_back(gs.at(out.prefix.size()));
        continue;
      }
      auto& entry = out.prefix[static_cast<std::size_t>(slot)];
      entry = g.f(entry, i);
    } else {
      if (s.rightmost_minus < 0) return std::nullopt;
      auto& entry = out.prefix[static_cast<std::size_t>(s.rightmost_minus)];
      entry = g.e(entry, i);
    }
    canonicalize(out);
    return out;
  }
}

std::optional<Path> PathModel::f(const Path& p, int i) const { return apply(p, i, true); }
std::optional<Path> PathModel::e(const Path& p, int i) const { return apply(p, i, false); }

StringStats PathModel::stats(const Path& p, int i) const {
  const auto& gs = ground_state(p.lambda);
  const auto s = signature(b_.graph(), p.prefix, b_.graph().phi(gs.at(p.prefix.size()), i), i);
  int phi = 0;
  for (const auto& [slot, count] : s.plus) phi += count;
  return {s.minus_total, phi};
}

AffineWeight PathModel::weight(const Path& p) const {
  const auto& gs = ground_state(p.lambda);
  const auto& g = b_.graph();
  AffineWeight w = fundamental_weight(b_.datum(), p.lambda);
  const std::size_t n = p.prefix.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto wp = g.weight(p.prefix[k]);
    const auto wb = g.weight(gs.at(k));
    for (std::size_t j = 0; j < w.lambda.size(); ++j) w.lambda[j] += wp[j] - wb[j];
  }
  auto entry = [&](std::size_t k) { return k < n ? p.prefix[k] : gs.at(k); };
  for (std::size_t k = 0; k < n; ++k) {
    const int diff = energy(entry(k + 1), entry(k)) - energy(gs.at(k + 1), gs.at(k));
    w.delta -= static_cast<std::int64_t>(k + 1) * diff;
  }
  return w;
}

namespace {

void check_depth(int max_depth) {
  if (max_depth < 0) throw std::invalid_argument("max depth must be nonnegative");
}

}  // namespace

Character character(const PathModel& model, int lambda, int max_depth) {
  check_depth(max_depth);
  const int indices = model.crystal().datum().size();
  const Path root = model.ground_path(lambda);
  std::unordered_set<Path, PathHash> seen{root};
  Character ch{{model.weight(root), 1}};
  std::vector<Path> layer{root};
  while (!layer.empty()) {
    std::vector<std::vector<std::pair<Path, AffineWeight>>> found(layer.size());
    const long long count = static_cast<long long>(layer.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long long k = 0; k < count; ++k) {
      auto& out = found[static_cast<std::size_t>(k)];
      for (int i = 0; i < indices; ++i) {
        auto q = model.f(layer[static_cast<std::size_t>(k)], i);
        if (!q) continue;
        auto w = model.weight(*q);
        if (w.delta >= -max_depth) out.emplace_back(std::move(*q), std::move(w));
      }
    }
    std::vector<Path> next;
    for (auto& batch : found)
      for (auto& [q, w] : batch)
        if (seen.insert(q).second) {
          ++ch[w];
          next.push_back(std::move(q));
        }
    layer = std::move(next);
  }
  return ch;
}

Character character_serial(const PathModel& model, int lambda, int max_depth, bool reverse_indices) {
  check_depth(max_depth);
  const int indices = model.crystal().datum().size();
  const Path root = model.ground_path(lambda);
  std::unordered_set<Path, PathHash> seen{root};
  Character ch{{model.weight(root), 1}};
  std::deque<Path> queue{root};
  while (!queue.empty()) {
    const Path p = std::move(queue.front());
    queue.pop_front();
    for (int step = 0; step < indices; ++step) {
      const int i = reverse_indices ? indices - 1 - step : step;
      auto q = model.f(p, i);
      if (!q) continue;
      const auto w = model.weight(*q);
      if (w.delta < -max_depth || !seen.insert(*q).second) continue;
      ++ch[w];
      queue.push_back(std::move(*q));
    }
  }
  return ch;
}

std::vector<std::pair<AffineWeight, std::int64_t>> sorted_character(const Character& ch) {
  std::vector<std::pair<AffineWeight, std::int64_t>> out(ch.begin(), ch.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.delta != b.first.delta) return a.first.delta > b.first.delta;
    return a.first.lambda < b.first.lambda;
  });
  return out;
}

bool oracle_supported(const AffineDatum& d) {
  const char f = d.type.family;
  return d.type.twist == 1 && (f == 'A' || f == 'D' || f == 'E');
}

namespace {

using detail::Rational;

std::vector<std::vector<int>> finite_cartan(const AffineDatum& d) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(d.n), std::vector<int>(static_cast<std::size_t>(d.n)));
  for (int k = 1; k <= d.n; ++k)
    for (int j = 1; j <= d.n; ++j) m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)] = d.a(k, j);
  return m;
}

void require_oracle(const AffineDatum& d) {
  if (!oracle_supported(d))
    throw std::invalid_argument("lattice oracle unsupported for " + d.type.name() +
                                " (simply-laced untwisted types only)");
}

// Coefficients of prod_{k >= 1} (1 - q^k)^{-colors} up to q^top.
std::vector<std::int64_t> colored_partitions(int colors, int top) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(top) + 1, 0);
  a[0] = 1;
  for (int k = 1; k <= top; ++k)
    for (int c = 0; c < colors; ++c)
      for (int m = k; m <= top; ++m) a[static_cast<std::size_t>(m)] += a[static_cast<std::size_t>(m - k)];
  return a;
}

int half_norm(const std::vector<std::vector<int>>& a, const std::vector<int>& beta) {
  int s = 0;
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::size_t j = 0; j < beta.size(); ++j) s += beta[i] * a[i][j] * beta[j];
  return s / 2;
}

std::vector<int> classical_of(const AffineDatum& d, const std::vector<int>& beta) {
  std::vector<int> w(static_cast<std::size_t>(d.size()), 0);
  w[0] = 1;
  for (int j = 0; j <= d.n; ++j)
    for (int k = 1; k <= d.n; ++k) w[static_cast<std::size_t>(j)] += d.a(j, k) * beta[static_cast<std::size_t>(k - 1)];
  return w;
}

}  // namespace

std::int64_t oracle_multiplicity(const AffineDatum& d, const std::vector<int>& beta, int n) {
  require_oracle(d);
  if (static_cast<int>(beta.size()) != d.n) throw std::invalid_argument("beta needs one coefficient per simple root");
  const int norm = half_norm(finite_cartan(d), beta);
  if (n < norm) return 0;
  return colored_partitions(d.n, n - norm)[static_cast<std::size_t>(n - norm)];
}

std::optional<std::vector<int>> root_lattice_coordinates(const AffineDatum& d, const std::vector<int>& lambda) {
  std::vector<Rational> rhs;
  for (int k = 1; k <= d.n; ++k) rhs.emplace_back(lambda[static_cast<std::size_t>(k)]);
  const auto sol = detail::solve(finite_cartan(d), rhs);
  if (!sol) return std::nullopt;
  std::vector<int> beta;
  for (const auto& c : *sol) {
    if (c.denominator() != 1) return std::nullopt;
    beta.push_back(static_cast<int>(c.numerator()));
  }
  if (classical_of(d, beta) != lambda) return std::nullopt;
  return beta;
}

Character oracle_character(const AffineDatum& d, int max_depth) {
  require_oracle(d);
  check_depth(max_depth);
  const auto a = finite_cartan(d);
  const auto series = colored_partitions(d.n, max_depth);

  // |c_i|^2 <= (A^{-1})_{ii} (beta, beta) by Cauchy-Schwarz in the form A.
  std::vector<int> bound;
  for (int i = 0; i < d.n; ++i) {
    std::vector<Rational> e(static_cast<std::size_t>(d.n), Rational(0));
    e[static_cast<std::size_t>(i)] = 1;
    const Rational inv = (*detail::solve(a, e))[static_cast<std::size_t>(i)];
    const Rational cap = inv * Rational(2 * max_depth);
    int b = 0;
    while (Rational((b + 1) * (b + 1)) <= cap) ++b;
    bound.push_back(b);
  }

  Character out;
  std::vector<int> beta(static_cast<std::size_t>(d.n));
  for (int i = 0; i < d.n; ++i) beta[static_cast<std::size_t>(i)] = -bound[static_cast<std::size_t>(i)];
  for (;;) {
    const int norm = half_norm(a, beta);
    if (norm <= max_depth) {
      const auto w = classical_of(d, beta);
      for (int n = norm; n <= max_depth; ++n) out[AffineWeight{w, -n}] = series[static_cast<std::size_t>(n - norm)];
    }
    int k = 0;
    while (k < d.n && beta[static_cast<std::size_t>(k)] == bound[static_cast<std::size_t>(k)]) {
      beta[static_cast<std::size_t>(k)] = -bound[static_cast<std::size_t>(k)];
      ++k;
    }
    if (k == d.n) break;
    ++beta[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace affcrystal
