#include "affcrystal/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace affcrystal {

RootVector RootVector::simple(int n, int i) {
  RootVector r(n);
  r.twice_[static_cast<std::size_t>(i - 1)] = 2;
  return r;
}

bool RootVector::is_zero() const {
  return std::all_of(twice_.begin(), twice_.end(), [](int v) { return v == 0; });
}

bool RootVector::is_integral() const {
  return std::all_of(twice_.begin(), twice_.end(), [](int v) { return v % 2 == 0; });
}

bool RootVector::nonnegative() const {
  return std::all_of(twice_.begin(), twice_.end(), [](int v) { return v >= 0; });
}

int RootVector::twice_height() const { return std::accumulate(twice_.begin(), twice_.end(), 0); }

std::vector<int> RootVector::support() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < twice_.size(); ++k)
    if (twice_[k] != 0) out.push_back(static_cast<int>(k) + 1);
  return out;
}

int RootVector::pairing(const AffineDatum& d, int j) const {
  int total = 0;
  for (int k = 1; k <= rank(); ++k) total += twice(k) * d.a(j, k);
  if (total % 2 != 0) throw std::logic_error("non-integral pairing for " + to_string());
  return total / 2;
}

std::vector<int> RootVector::classical_weight(const AffineDatum& d) const {
  std::vector<int> out(static_cast<std::size_t>(d.size()));
  for (int j = 0; j <= d.n; ++j) out[static_cast<std::size_t>(j)] = pairing(d, j);
  return out;
}

RootVector RootVector::operator-() const {
  RootVector r = *this;
  for (auto& v : r.twice_) v = -v;
  return r;
}

RootVector& RootVector::operator+=(const RootVector& o) {
  for (std::size_t k = 0; k < twice_.size(); ++k) twice_[k] += o.twice_[k];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  for (std::size_t k = 0; k < twice_.size(); ++k) twice_[k] -= o.twice_[k];
  return *this;
}

std::string RootVector::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 1; k <= rank(); ++k) {
    int t = twice(k);
    if (t == 0) continue;
    if (t < 0) {
      out += "-";
      t = -t;
    } else if (!out.empty()) {
      out += "+";
    }
    if (t % 2 == 1) {
      out += t == 1 ? "(1/2)" : "(" + std::to_string(t) + "/2)";
    } else if (t != 2) {
      out += std::to_string(t / 2);
    }
    out += "a" + std::to_string(k);
  }
  return out;
}

std::size_t RootVectorHash::operator()(const RootVector& r) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : r.twice_coeffs()) h = (h ^ static_cast<std::size_t>(v + 1024)) * 0x100000001b3ULL;
  return h;
}

namespace {

// Squared length (up to a common factor) under the symmetrized form
// (alpha_k, alpha_l) = s_k a_{k,l}.
long long norm(const AffineDatum& d, const RootVector& r) {
  long long total = 0;
  for (int k = 1; k <= d.n; ++k)
    for (int l = 1; l <= d.n; ++l)
      total += static_cast<long long>(r.twice(k)) * r.twice(l) * d.symmetrizers[static_cast<std::size_t>(k)] * d.a(k, l);
  return total;
}

// Highest first; ties broken lexicographically (larger leading coefficient first).
bool height_then_lex(const RootVector& a, const RootVector& b) {
  if (a.twice_height() != b.twice_height()) return a.twice_height() > b.twice_height();
  return a.twice_coeffs() > b.twice_coeffs();
}

}  // namespace

std::vector<Root> finite_roots(const AffineDatum& d) {
  const int n = d.n;
  std::unordered_set<RootVector, RootVectorHash> seen;
  std::vector<RootVector> positive;
  std::vector<RootVector> layer;
  for (int i = 1; i <= n; ++i) {
    layer.push_back(RootVector::simple(n, i));
    seen.insert(layer.back());
  }
  while (!layer.empty()) {
    positive.insert(positive.end(), layer.begin(), layer.end());
    std::vector<RootVector> next;
    for (const auto& beta : layer) {
      for (int j = 1; j <= n; ++j) {
        const RootVector aj = RootVector::simple(n, j);
        if (beta == aj) continue;
        // p = length of the alpha_j string below beta
        int p = 0;
        RootVector down = beta - aj;
        while (seen.contains(down)) {
          ++p;
          down -= aj;
        }
        const int q = p - beta.pairing(d, j);
        if (q <= 0) continue;
        RootVector up = beta + aj;
        if (seen.insert(up).second) next.push_back(up);
      }
    }
    layer = std::move(next);
  }

  long long longest = 0;
  for (const auto& r : positive) longest = std::max(longest, norm(d, r));

  std::sort(positive.begin(), positive.end(), [](const RootVector& a, const RootVector& b) {
    if (a.twice_height() != b.twice_height()) return a.twice_height() < b.twice_height();
    return a.twice_coeffs() > b.twice_coeffs();
  });
  std::vector<Root> out;
  for (const auto& r : positive)
    out.push_back({r, norm(d, r) == longest ? RootLength::Long : RootLength::Short});
  for (const auto& r : positive)
    out.push_back({-r, norm(d, r) == longest ? RootLength::Long : RootLength::Short});
  return out;
}

LambdaWeights lambda_weights(const AffineDatum& d) {
  const int n = d.n;
  LambdaWeights out;
  std::vector<int> twice_theta(static_cast<std::size_t>(n));
  const bool a_even_twisted = d.type.family == 'A' && d.type.twist == 2 && d.type.rank % 2 == 0;
  for (int k = 1; k <= n; ++k)
    twice_theta[static_cast<std::size_t>(k - 1)] = a_even_twisted ? d.marks[static_cast<std::size_t>(k)]
                                                                  : 2 * d.marks[static_cast<std::size_t>(k)];
  out.theta = RootVector::from_twice(std::move(twice_theta));

  if (a_even_twisted) {
    // +(alpha_i + ... + alpha_{n-1} + 1/2 alpha_n), i = 1..n
    for (int i = 1; i <= n; ++i) {
      std::vector<int> t(static_cast<std::size_t>(n), 0);
      for (int k = i; k < n; ++k) t[static_cast<std::size_t>(k - 1)] = 2;
      t[static_cast<std::size_t>(n - 1)] = 1;
      out.positive.push_back(RootVector::from_twice(std::move(t)));
    }
  } else {
    const auto roots = finite_roots(d);
    const bool untwisted = d.type.twist == 1;
    const bool has_short =
        std::any_of(roots.begin(), roots.end(), [](const Root& x) { return x.length == RootLength::Short; });
    for (std::size_t k = 0; k < roots.size() / 2; ++k) {
      const auto& r = roots[k];
      if (untwisted || !has_short || r.length == RootLength::Short) out.positive.push_back(r.vec);
    }
  }
  std::sort(out.positive.begin(), out.positive.end(), height_then_lex);
  for (int i = 1; i <= n; ++i) {
    if (std::find(out.positive.begin(), out.positive.end(), RootVector::simple(n, i)) != out.positive.end())
      out.has_y.push_back(i);
  }
  if (std::find(out.positive.begin(), out.positive.end(), out.theta) == out.positive.end() ||
      !std::all_of(out.positive.begin(), out.positive.end(), [&](const RootVector& g) { return leq(g, out.theta); })) {
    throw std::logic_error("theta is not the highest element of Lambda+ for " + d.type.name());
  }
  return out;
}

bool leq(const RootVector& alpha, const RootVector& beta) { return (beta - alpha).nonnegative(); }

std::vector<int> dynkin_path(const AffineDatum& d, int i, int j) {
  if (i < 1 || i > d.n || j < 1 || j > d.n) throw std::out_of_range("dynkin_path: node out of range");
  std::vector<int> parent(static_cast<std::size_t>(d.n + 1), -1);
  std::deque<int> queue{i};
  parent[static_cast<std::size_t>(i)] = i;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == j) break;
    for (int v = 1; v <= d.n; ++v) {
      if (d.adjacent(u, v) && parent[static_cast<std::size_t>(v)] < 0) {
        parent[static_cast<std::size_t>(v)] = u;
        queue.push_back(v);
      }
    }
  }
  if (parent[static_cast<std::size_t>(j)] < 0) throw std::logic_error("dynkin_path: nodes are disconnected");
  std::vector<int> path{j};
  while (path.back() != i) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> connect_support(const AffineDatum& d, const RootVector& gamma, int i) {
  if (gamma.twice(i) != 0) {
    throw std::invalid_argument("connect_support: alpha_" + std::to_string(i) + " lies in the support of " +
                                gamma.to_string());
  }
  const auto supp = gamma.support();
  if (supp.empty()) throw std::invalid_argument("connect_support: empty support");
  std::vector<int> best;
  for (int s : supp) {
    auto p = dynkin_path(d, s, i);
    if (best.empty() || p.size() < best.size()) best = std::move(p);
  }
  best.erase(best.begin());
  return best;
}

}  // namespace affcrystal
