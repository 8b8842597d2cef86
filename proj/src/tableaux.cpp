#include "tableaux.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace weylsig {

CoefficientCache& CoefficientCache::global() {
  static CoefficientCache cache;
  return cache;
}

bool CoefficientCache::lookup(const std::string& key, BigInt& out) const {
  std::shared_lock lock(mu_);
  auto it = table_.find(key);
  if (it == table_.end()) return false;
  out = it->second;
  return true;
}

void CoefficientCache::store(const std::string& key, const BigInt& v) {
  std::unique_lock lock(mu_);
  table_.emplace(key, v);
}

BigInt CoefficientCache::kostka(const Partition& shape, const Composition& content) {
  Partition c = sort_to_partition(content);
  std::string key = "K" + to_string(shape) + to_string(c.parts());
  BigInt v;
  if (lookup(key, v)) return v;
  v = kostka_uncached(shape, c.parts());
  store(key, v);
  return v;
}

BigInt CoefficientCache::lr(const Partition& lam, const Partition& mu, const Partition& nu) {
  std::string key = "L" + to_string(lam) + to_string(mu) + to_string(nu);
  BigInt v;
  if (lookup(key, v)) return v;
  v = lr_uncached(lam, mu, nu);
  store(key, v);
  return v;
}

void CoefficientCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  std::unique_lock lock(mu_);
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    table_.emplace(line.substr(0, tab), BigInt(line.substr(tab + 1)));
  }
}

void CoefficientCache::save(const std::string& path) const {
  std::shared_lock lock(mu_);
  std::map<std::string, BigInt> sorted(table_.begin(), table_.end());
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write cache file " + path);
  for (const auto& [k, v] : sorted) out << k << '\t' << v.str() << '\n';
}

void CoefficientCache::clear() {
  std::unique_lock lock(mu_);
  table_.clear();
}

std::size_t CoefficientCache::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

// Horizontal-strip DP: add the letters one value at a time.
BigInt kostka_uncached(const Partition& shape, const Composition& content) {
  if (total(content) != shape.size()) return 0;
  for (int x : content)
    if (x < 0) return 0;
  const int rows = shape.length();
  std::map<std::vector<int>, BigInt> cur;
  cur[std::vector<int>(rows, 0)] = 1;
  for (int c : content) {
    if (c == 0) continue;
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [mu, cnt] : cur) {
      std::vector<int> nu(mu);
      std::function<void(int, int)> rec = [&](int r, int rem) {
        if (r == rows) {
          if (rem == 0) next[nu] += cnt;
          return;
        }
        int hi = shape[r];
        if (r > 0) hi = std::min(hi, mu[r - 1]);
        for (int v = mu[r]; v <= hi && v - mu[r] <= rem; ++v) {
          nu[r] = v;
          rec(r + 1, rem - (v - mu[r]));
        }
        nu[r] = mu[r];
      };
      rec(0, c);
    }
    cur.swap(next);
    if (cur.empty()) return 0;
  }
  auto it = cur.find(shape.parts());
  return it == cur.end() ? BigInt(0) : it->second;
}

BigInt lr_uncached(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (lam.size() != mu.size() + nu.size() || !contains(lam, mu)) return 0;
  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < lam.length(); ++r)
    for (int c = lam[r] - 1; c >= mu[r]; --c) cells.push_back({r, c});
  std::vector<std::vector<int>> fill(lam.length());
  for (int r = 0; r < lam.length(); ++r) fill[r].assign(lam[r], 0);
  const int k = nu.length();
  std::vector<int> used(k + 1, 0);
  BigInt count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[idx];
    int hi = k;
    if (c + 1 < lam[r]) hi = std::min(hi, fill[r][c + 1]);
    int lo = 1;
    if (r > 0 && c >= mu[r - 1]) lo = fill[r - 1][c] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= nu[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      ++used[v];
      fill[r][c] = v;
      rec(idx + 1);
      --used[v];
    }
    fill[r][c] = 0;
  };
  rec(0);
  return count;
}

BigInt kostka(const Partition& shape, const Composition& content) {
  return CoefficientCache::global().kostka(shape, content);
}

BigInt lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
  return CoefficientCache::global().lr(lam, mu, nu);
}

std::map<Partition, BigInt> split_square_coefficients(const Partition& lam, Sign sign, int cap) {
  if (lam.size() > cap) throw DomainError("split-square size " + std::to_string(lam.size()) + " exceeds cap");
  const int m = lam.size();
  if (m == 0) {
    std::map<Partition, BigInt> out;
    if (sign == Sign::Plus) out[Partition()] = 1;
    return out;
  }
  // Enough variables that no irreducible constituent is truncated.
  const int nvars = 2 * lam.length();
  auto weights = compositions_of(m, nvars);
  std::map<Composition, BigInt> kv;
  for (const auto& w : weights) kv[w] = kostka(lam, w);

  // Weight multiplicities of the square, only at dominant weights.
  std::map<Partition, BigInt> weight_mult;
  for (const Partition& kappa : partitions_of_bounded(2 * m, nvars)) {
    Composition kc(kappa.parts());
    kc.resize(nvars, 0);
    BigInt s = 0;
    for (const auto& w : weights) {
      bool ok = true;
      Composition rest(nvars);
      for (int i = 0; i < nvars; ++i) {
        rest[i] = kc[i] - w[i];
        if (rest[i] < 0) ok = false;
      }
      if (!ok) continue;
      s += kv[w] * kv[rest];
    }
    BigInt d = 0;
    bool even = std::all_of(kc.begin(), kc.end(), [](int x) { return x % 2 == 0; });
    if (even) {
      Composition half(nvars);
      for (int i = 0; i < nvars; ++i) half[i] = kc[i] / 2;
      d = kv[half];
    }
    BigInt v = sign == Sign::Plus ? (s + d) / 2 : (s - d) / 2;
    if (v != 0) weight_mult[kappa] = v;
  }

  // Peel highest weights; the Kostka matrix is unitriangular under dominance.
  std::map<Partition, BigInt> out;
  while (!weight_mult.empty()) {
    auto top = std::prev(weight_mult.end());
    Partition kappa = top->first;
    BigInt c = top->second;
    if (c < 0) throw DomainError("split-square peeling produced a negative coefficient");
    out[kappa] = c;
    for (auto it = weight_mult.begin(); it != weight_mult.end();) {
      it->second -= c * kostka(kappa, it->first.parts());
      if (it->second == 0)
        it = weight_mult.erase(it);
      else
        ++it;
    }
  }
  return out;
}

}  // namespace weylsig
