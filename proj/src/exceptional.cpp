#include "exceptional.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "linalg.hpp"
#include "parallel.hpp"

namespace weylsig {

long RootSystem::dot(int i, int j) const {
  long s = 0;
  for (std::size_t k = 0; k < roots[i].size(); ++k) s += static_cast<long>(roots[i][k]) * roots[j][k];
  return s;
}

bool RootSystem::is_long(int i) const {
  long best = 0;
  for (int j = 0; j < size(); ++j) best = std::max(best, dot(j, j));
  return dot(i, i) == best;
}

int RootSystem::index_of(const RootVec& v) const {
  auto it = std::find(roots.begin(), roots.end(), v);
  return it == roots.end() ? -1 : static_cast<int>(it - roots.begin());
}

int RootSystem::negative(int i) const {
  RootVec v = roots[i];
  for (int& x : v) x = -x;
  return index_of(v);
}

RootPerm RootSystem::reflection(int i) const {
  RootPerm p(size());
  const long ii = dot(i, i);
  for (int j = 0; j < size(); ++j) {
    const long c = 2 * dot(i, j) / ii;
    RootVec v = roots[j];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= static_cast<int>(c * roots[i][k]);
    p[j] = index_of(v);
    if (p[j] < 0) throw std::logic_error("reflection does not permute the roots");
  }
  return p;
}

namespace {

// Fill simple_coords, positive, lowest and ratio from roots and simple.
void finish(RootSystem& rs) {
  const int r = rs.rank;
  RatMatrix gram(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram(i, j) = rs.dot(rs.simple[i], rs.simple[j]);
  const RatMatrix ginv = inverse(gram);
  long lo = 0, hi = 0;
  for (int k = 0; k < rs.size(); ++k) {
    RootVec c(r);
    for (int i = 0; i < r; ++i) {
      Rational s = 0;
      for (int j = 0; j < r; ++j) s += ginv(i, j) * Rational(rs.dot(rs.simple[j], k));
      if (denominator(s) != 1) throw std::logic_error("root is not an integer combination of simple roots");
      c[i] = static_cast<int>(numerator(s));
    }
    bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    if (!nonneg && !nonpos) throw std::logic_error("root is neither positive nor negative");
    rs.simple_coords.push_back(c);
    rs.positive.push_back(nonneg);
    lo = std::min(lo, rs.dot(k, k));
    hi = std::max(hi, rs.dot(k, k));
  }
  long shortest = hi;
  for (int k = 0; k < rs.size(); ++k) shortest = std::min(shortest, rs.dot(k, k));
  rs.ratio = static_cast<int>(hi / shortest);
  int best = -1, height = 1;
  for (int k = 0; k < rs.size(); ++k) {
    int h = std::accumulate(rs.simple_coords[k].begin(), rs.simple_coords[k].end(), 0);
    if (h < height) height = h, best = k;
  }
  rs.lowest = best;
}

}  // namespace

RootSystem build_g2() {
  RootSystem rs;
  rs.name = "G2";
  rs.rank = 2;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        RootVec v(3, 0);
        v[i] = 1, v[j] = -1;
        rs.roots.push_back(v);
      }
  for (int i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      RootVec v(3, -s);
      v[i] = 2 * s;
      rs.roots.push_back(v);
    }
  rs.simple = {rs.index_of({1, -1, 0}), rs.index_of({-2, 1, 1})};
  finish(rs);
  return rs;
}

RootSystem build_f4() {
  // Coordinates doubled so that every root is integral.
  RootSystem rs;
  rs.name = "F4";
  rs.rank = 4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int a : {2, -2})
        for (int b : {2, -2}) {
          RootVec v(4, 0);
          v[i] = a, v[j] = b;
          rs.roots.push_back(v);
        }
  for (int i = 0; i < 4; ++i)
    for (int a : {2, -2}) {
      RootVec v(4, 0);
      v[i] = a;
      rs.roots.push_back(v);
    }
  for (int mask = 0; mask < 16; ++mask) {
    RootVec v(4);
    for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
    rs.roots.push_back(v);
  }
  rs.simple = {rs.index_of({0, 2, -2, 0}), rs.index_of({0, 0, 2, -2}), rs.index_of({0, 0, 0, 2}), rs.index_of({1, -1, -1, -1})};
  finish(rs);
  return rs;
}

RootPerm compose(const RootPerm& a, const RootPerm& b) {
  RootPerm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

RootPerm invert(const RootPerm& a) {
  RootPerm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

int WeylGroup::find(const RootPerm& p) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), p, [](const auto& e, const RootPerm& q) { return e.first < q; });
  if (it == sorted_.end() || it->first != p) return -1;
  return it->second;
}

WeylGroup enumerate_weyl_group(const RootSystem& rs) {
  WeylGroup w;
  std::vector<RootPerm> gens;
  for (int s : rs.simple) gens.push_back(rs.reflection(s));
  RootPerm id(rs.size());
  std::iota(id.begin(), id.end(), 0);
  std::set<RootPerm> seen{id};
  std::deque<RootPerm> queue{id};
  while (!queue.empty()) {
    RootPerm x = std::move(queue.front());
    queue.pop_front();
    w.elements.push_back(x);
    for (const auto& g : gens) {
      RootPerm y = compose(g, x);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  for (const auto& x : w.elements) {
    int flips = 0;
    for (int i = 0; i < rs.size(); ++i)
      if (rs.positive[i] && !rs.positive[x[i]]) ++flips;
    w.sign.push_back(flips % 2 == 0 ? 1 : -1);
  }
  for (int i = 0; i < w.order(); ++i) w.sorted_.emplace_back(w.elements[i], i);
  std::sort(w.sorted_.begin(), w.sorted_.end());

  w.class_of.assign(w.order(), -1);
  for (int i = 0; i < w.order(); ++i) {
    if (w.class_of[i] >= 0) continue;
    const int c = static_cast<int>(w.classes.size());
    w.classes.push_back({i});
    w.class_of[i] = c;
    for (std::size_t k = 0; k < w.classes[c].size(); ++k) {
      const RootPerm& x = w.elements[w.classes[c][k]];
      for (const auto& g : gens) {
        int j = w.find(compose(g, compose(x, g)));
        if (w.class_of[j] < 0) {
          w.class_of[j] = c;
          w.classes[c].push_back(j);
        }
      }
    }
    std::sort(w.classes[c].begin(), w.classes[c].end());
  }
  return w;
}

namespace {

// Coefficients of det(1 - t M) for a small integer matrix.
std::vector<Rational> det_one_minus(const RatMatrix& m) {
  const int r = m.rows();
  std::vector<Rational> out(r + 1, 0);
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const int k = static_cast<int>(idx.size());
    RatMatrix sub(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) sub(a, b) = m(idx[a], idx[b]);
    // Principal minor by elimination.
    Rational det = 1;
    for (int c = 0; c < k && det != 0; ++c) {
      int p = c;
      while (p < k && sub(p, c) == 0) ++p;
      if (p == k) {
        det = 0;
        break;
      }
      if (p != c) {
        for (int b = 0; b < k; ++b) std::swap(sub(p, b), sub(c, b));
        det = -det;
      }
      det *= sub(c, c);
      for (int a = c + 1; a < k; ++a) {
        Rational f = sub(a, c) / sub(c, c);
        for (int b = c; b < k; ++b) sub(a, b) -= f * sub(c, b);
      }
    }
    out[k] += (k % 2 == 0 ? det : -det);
  }
  return out;
}

RatMatrix root_basis_matrix(const RootSystem& rs, const RootPerm& g) {
  RatMatrix m(rs.rank, rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    const RootVec& c = rs.simple_coords[g[rs.simple[j]]];
    for (int i = 0; i < rs.rank; ++i) m(i, j) = c[i];
  }
  return m;
}

std::vector<Rational> char_poly(const RatMatrix& x) {
  // Faddeev-LeVerrier; returns c with p(t) = sum c[k] t^k.
  const int n = x.rows();
  std::vector<Rational> c(n + 1, 0);
  c[n] = 1;
  RatMatrix m(n, n);
  const RatMatrix id = RatMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    m = x * m + id.scaled(c[n - k + 1]);
    c[n - k] = -(x * m).trace() / Rational(k);
  }
  return c;
}

RatMatrix columns(const RatMatrix& s, const RatMatrix& coeffs) { return s * coeffs; }

// X with A S = S X, for S of full column rank.
RatMatrix restrict_to(const RatMatrix& a, const RatMatrix& s) {
  RatMatrix st = s.transpose();
  return inverse(st * s) * (st * (a * s));
}

}  // namespace

std::vector<Irreducible> character_table(const RootSystem& rs, const WeylGroup& w) {
  const int r = static_cast<int>(w.classes.size());
  const int order = w.order();
  std::vector<int> csize(r);
  for (int i = 0; i < r; ++i) csize[i] = static_cast<int>(w.classes[i].size());

  // a[j] is the class multiplication matrix: (a[j])_{ik} = #{x in C_i : x^{-1} z_k in C_j}.
  std::vector<RatMatrix> a(r, RatMatrix(r, r));
  for (int k = 0; k < r; ++k) {
    const RootPerm& z = w.elements[w.classes[k][0]];
    for (int x = 0; x < order; ++x) {
      int y = w.find(compose(invert(w.elements[x]), z));
      a[w.class_of[y]](w.class_of[x], k) += 1;
    }
  }

  std::vector<RatMatrix> spaces{RatMatrix::identity(r)};
  for (int j = 1; j < r; ++j) {
    std::vector<RatMatrix> next;
    for (const RatMatrix& s : spaces) {
      if (s.cols() == 1) {
        next.push_back(s);
        continue;
      }
      RatMatrix x = restrict_to(a[j], s);
      auto poly = char_poly(x);
      int found = 0;
      for (int lam = -csize[j]; lam <= csize[j]; ++lam) {
        Rational v = 0;
        for (int k = static_cast<int>(poly.size()) - 1; k >= 0; --k) v = v * lam + poly[k];
        if (v != 0) continue;
        RatMatrix shifted = x - RatMatrix::identity(x.rows()).scaled(Rational(lam));
        RatMatrix ns = nullspace(shifted);
        found += ns.cols();
        next.push_back(columns(s, ns));
      }
      if (found != s.cols()) throw std::logic_error("class algebra did not diagonalize over the integers");
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != r) throw std::logic_error("character table did not split completely");

  // Long and short reflection classes for prime labels.
  int long_class = -1, short_class = -1;
  for (int s : rs.simple) {
    int c = w.class_of[w.find(rs.reflection(s))];
    (rs.is_long(s) ? long_class : short_class) = c;
  }

  // Molien series denominators per class.
  int npos = 0;
  for (bool p : rs.positive) npos += p;
  std::vector<std::vector<Rational>> series(r);
  for (int i = 0; i < r; ++i) {
    auto q = det_one_minus(root_basis_matrix(rs, w.elements[w.classes[i][0]]));
    std::vector<Rational> s(npos + 1, 0);
    s[0] = 1;
    for (int n = 1; n <= npos; ++n)
      for (int k = 1; k < static_cast<int>(q.size()) && k <= n; ++k) s[n] -= q[k] * s[n - k];
    series[i] = std::move(s);
  }

  std::vector<Irreducible> out;
  for (const RatMatrix& v : spaces) {
    std::vector<Rational> omega(r);
    for (int i = 0; i < r; ++i) omega[i] = v(i, 0) / v(0, 0);
    Rational norm = 0;
    for (int i = 0; i < r; ++i) norm += omega[i] * omega[i] / Rational(csize[i]);
    Rational d2 = Rational(order) / norm;
    if (denominator(d2) != 1) throw std::logic_error("non-integral degree");
    BigInt d = sqrt(numerator(d2));
    if (d * d != numerator(d2)) throw std::logic_error("degree is not a square root");
    Irreducible chi;
    chi.dim = static_cast<int>(d);
    for (int i = 0; i < r; ++i) {
      Rational val = Rational(d) * omega[i] / Rational(csize[i]);
      if (denominator(val) != 1) throw std::logic_error("non-integral character value");
      chi.values.push_back(numerator(val));
    }
    chi.b = -1;
    for (int n = 0; n <= npos && chi.b < 0; ++n) {
      Rational m = 0;
      for (int i = 0; i < r; ++i) m += Rational(csize[i]) * Rational(chi.values[i]) * series[i][n];
      if (m != 0) chi.b = n;
    }
    if (chi.b < 0) throw std::logic_error("character missing from the coinvariant range");
    out.push_back(std::move(chi));
  }

  std::sort(out.begin(), out.end(), [](const Irreducible& x, const Irreducible& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    if (x.b != y.b) return x.b < y.b;
    return x.values > y.values;
  });

  // Primes: ' marks the member whose value on the long reflection is smaller
  // relative to the short one; ties are broken by the mixed rank 2 parabolic.
  std::vector<int> mixed;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = i + 1; j < rs.rank; ++j)
      if (rs.dot(rs.simple[i], rs.simple[j]) != 0 && rs.is_long(rs.simple[i]) != rs.is_long(rs.simple[j]))
        mixed = {rs.simple[i], rs.simple[j]};
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::size_t j = i;
    while (j < out.size() && out[j].dim == out[i].dim && out[j].b == out[i].b) ++j;
    const std::string base = "phi_{" + std::to_string(out[i].dim) + "," + std::to_string(out[i].b) + "}";
    if (j - i == 1) {
      out[i].label = base;
    } else if (j - i == 2) {
      auto key = [&](const Irreducible& c) { return c.values[long_class] - c.values[short_class]; };
      BigInt kx = key(out[i]), ky = key(out[i + 1]);
      bool first_prime;
      if (kx != ky) {
        first_prime = kx < ky;
      } else {
        BigInt mx = extended_sign_mult(rs, w, out[i], mixed), my = extended_sign_mult(rs, w, out[i + 1], mixed);
        if (mx == my) throw std::logic_error("cannot assign primes to " + base);
        first_prime = mx < my;
      }
      out[i].label = base + (first_prime ? "'" : "''");
      out[i + 1].label = base + (first_prime ? "''" : "'");
    } else {
      throw std::logic_error("more than two irreducibles share " + base);
    }
    i = j - 1;
  }
  return out;
}

const char* kind_name(SubsystemKind k) {
  switch (k) {
    case SubsystemKind::Parabolic: return "parabolic";
    case SubsystemKind::PseudoParabolic: return "pseudo-parabolic";
    case SubsystemKind::Neither: return "neither";
  }
  return "";
}

std::vector<int> closure(const RootSystem& rs, const std::vector<int>& gens) {
  std::vector<bool> in(rs.size(), false);
  std::vector<int> members;
  auto add = [&](int i) {
    if (i >= 0 && !in[i]) {
      in[i] = true;
      members.push_back(i);
      return true;
    }
    return false;
  };
  for (int g : gens) {
    add(g);
    add(rs.negative(g));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<int> cur = members;
    for (int i : cur)
      for (int j : cur) {
        RootVec v = rs.roots[i];
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += rs.roots[j][k];
        changed |= add(rs.index_of(v));
        const long c = 2 * rs.dot(i, j) / rs.dot(i, i);
        RootVec u = rs.roots[j];
        for (std::size_t k = 0; k < u.size(); ++k) u[k] -= static_cast<int>(c * rs.roots[i][k]);
        changed |= add(rs.index_of(u));
      }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

std::vector<int> simple_basis(const RootSystem& rs, const std::vector<int>& roots) {
  std::set<int> pos;
  for (int i : roots)
    if (rs.positive[i]) pos.insert(i);
  std::vector<int> basis;
  for (int i : pos) {
    bool decomposable = false;
    for (int j : pos) {
      if (j == i) continue;
      RootVec v = rs.roots[i];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= rs.roots[j][k];
      int d = rs.index_of(v);
      if (d >= 0 && pos.count(d)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) basis.push_back(i);
  }
  return basis;
}

}  // namespace

std::string classify(const RootSystem& rs, const std::vector<int>& roots) {
  if (roots.empty()) return "0";
  const auto basis = simple_basis(rs, roots);
  const int k = static_cast<int>(basis.size());
  std::vector<int> comp(k);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (rs.dot(basis[i], basis[j]) != 0) comp[find(i)] = find(j);

  struct Info {
    int rank = 0, longs = 0, shorts = 0;
  };
  std::map<int, Info> info;
  for (int i = 0; i < k; ++i) ++info[find(i)].rank;
  for (int r : roots)
    for (int i = 0; i < k; ++i)
      if (rs.dot(r, basis[i]) != 0) {
        auto& in = info[find(i)];
        (rs.is_long(r) ? in.longs : in.shorts) += 1;
        break;
      }

  std::vector<std::pair<int, std::string>> special;  // (rank, name) not long type A
  std::map<int, int> long_a;                          // rank -> count
  for (const auto& [_, in] : info) {
    const int n = in.rank, total = in.longs + in.shorts;
    std::string name;
    if (in.longs == 0 || in.shorts == 0) {
      const bool is_long = in.shorts == 0;
      if (total == n * (n + 1)) {
        if (is_long) {
          ++long_a[n];
          continue;
        }
        name = "A^" + std::to_string(rs.ratio) + "_" + std::to_string(n);
      } else if (total == 2 * n * (n - 1)) {
        name = "D_" + std::to_string(n);
      } else {
        throw std::logic_error("unrecognized simply laced component");
      }
    } else if (n == 2 && total == 12) {
      name = "G_2";
    } else if (n == 4 && total == 48) {
      name = "F_4";
    } else if (total == 2 * n * n) {
      name = (in.longs >= in.shorts ? "B_" : "C_") + std::to_string(n);
    } else {
      throw std::logic_error("unrecognized component");
    }
    special.emplace_back(n, name);
  }
  std::sort(special.begin(), special.end(), [](const auto& x, const auto& y) { return x.first != y.first ? x.first > y.first : x.second < y.second; });
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < special.size();) {
    std::size_t j = i;
    while (j < special.size() && special[j] == special[i]) ++j;
    parts.push_back((j - i > 1 ? std::to_string(j - i) : "") + special[i].second);
    i = j;
  }
  for (auto it = long_a.rbegin(); it != long_a.rend(); ++it)
    parts.push_back((it->second > 1 ? std::to_string(it->second) : "") + "A_" + std::to_string(it->first));
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "+") + p;
  return out;
}

std::vector<int> canonical_form(const WeylGroup& w, const std::vector<int>& roots) {
  std::vector<int> best;
  for (const auto& g : w.elements) {
    std::vector<int> img;
    img.reserve(roots.size());
    for (int r : roots) img.push_back(g[r]);
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

std::vector<std::vector<int>> all_closed_subsystems(const RootSystem& rs) {
  std::vector<int> pos;
  for (int i = 0; i < rs.size(); ++i)
    if (rs.positive[i]) pos.push_back(i);
  std::set<std::vector<int>> found{{}};
  std::vector<int> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!pick.empty()) found.insert(closure(rs, pick));
    if (static_cast<int>(pick.size()) == rs.rank) return;
    for (std::size_t i = start; i < pos.size(); ++i) {
      pick.push_back(pos[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return {found.begin(), found.end()};
}

namespace {

const std::vector<std::string>& column_order(const std::string& name) {
  static const std::map<std::string, std::vector<std::string>> orders = {
      {"G2", {"0", "A_1", "A^3_1", "G_2", "A_2", "A^3_1+A_1"}},
      {"F4", {"0", "A_1", "A^2_1", "A_2", "B_2", "A^2_1+A_1", "A^2_2", "B_3", "A^2_1+A_2", "A^2_2+A_1", "C_3", "F_4",
              "2A_1", "B_2+A_1", "A_3", "A^2_1+2A_1", "B_4", "A^2_1+A_3", "A^2_2+A_2", "C_3+A_1", "3A_1", "4A_1",
              "B_2+2A_1", "D_4"}},
  };
  return orders.at(name);
}

const std::vector<std::string>& row_order(const std::string& name) {
  static const std::map<std::string, std::vector<std::string>> orders = {
      {"G2", {"phi_{1,6}", "phi_{1,3}''", "phi_{1,3}'", "phi_{1,0}", "phi_{2,1}", "phi_{2,2}"}},
      {"F4", {"phi_{1,0}", "phi_{1,12}''", "phi_{1,12}'", "phi_{1,24}", "phi_{2,4}''", "phi_{2,16}'", "phi_{2,4}'",
              "phi_{2,16}''", "phi_{4,8}", "phi_{9,2}", "phi_{9,6}''", "phi_{9,6}'", "phi_{9,10}", "phi_{6,6}'",
              "phi_{6,6}''", "phi_{12,4}", "phi_{4,1}", "phi_{4,7}''", "phi_{4,7}'", "phi_{4,13}", "phi_{8,3}''",
              "phi_{8,9}'", "phi_{8,3}'", "phi_{8,9}''", "phi_{16,5}"}},
  };
  return orders.at(name);
}

}  // namespace

std::vector<RootSubsystem> enumerate_closed_subsystems(const RootSystem& rs, const WeylGroup& w) {
  std::set<std::vector<int>> parabolic, pseudo;
  const int r = rs.rank;
  std::vector<int> ext = rs.simple;
  ext.push_back(rs.lowest);
  for (unsigned mask = 0; mask < (1u << (r + 1)); ++mask) {
    std::vector<int> gens;
    for (int i = 0; i <= r; ++i)
      if (mask & (1u << i)) gens.push_back(ext[i]);
    auto c = canonical_form(w, closure(rs, gens));
    pseudo.insert(c);
    if (!(mask & (1u << r))) parabolic.insert(c);
  }
  std::set<std::vector<int>> classes;
  for (const auto& s : all_closed_subsystems(rs)) classes.insert(canonical_form(w, s));

  const auto& order = column_order(rs.name);
  std::vector<RootSubsystem> out(order.size());
  std::vector<bool> filled(order.size(), false);
  for (const auto& c : classes) {
    RootSubsystem sub;
    sub.roots = c;
    sub.basis = simple_basis(rs, c);
    sub.label = classify(rs, c);
    sub.kind = parabolic.count(c) ? SubsystemKind::Parabolic : pseudo.count(c) ? SubsystemKind::PseudoParabolic : SubsystemKind::Neither;
    auto it = std::find(order.begin(), order.end(), sub.label);
    if (it == order.end()) throw std::logic_error("unexpected subsystem class " + sub.label);
    auto pos = static_cast<std::size_t>(it - order.begin());
    if (filled[pos]) throw std::logic_error("two subsystem classes labeled " + sub.label);
    filled[pos] = true;
    out[pos] = std::move(sub);
  }
  if (std::find(filled.begin(), filled.end(), false) != filled.end()) throw std::logic_error("missing subsystem class");
  return out;
}

BigInt extended_sign_mult(const RootSystem& rs, const WeylGroup& w, const Irreducible& chi, const std::vector<int>& roots) {
  std::vector<RootPerm> gens;
  for (int i : roots) gens.push_back(rs.reflection(i));
  RootPerm id(rs.size());
  std::iota(id.begin(), id.end(), 0);
  std::set<RootPerm> seen{id};
  std::deque<RootPerm> queue{id};
  Rational sum = 0;
  while (!queue.empty()) {
    RootPerm x = std::move(queue.front());
    queue.pop_front();
    int idx = w.find(x);
    sum += Rational(w.sign[idx]) * Rational(chi.values[w.class_of[idx]]);
    for (const auto& g : gens) {
      RootPerm y = compose(g, x);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  sum /= Rational(static_cast<long>(seen.size()));
  if (denominator(sum) != 1) throw std::logic_error("non-integral sign multiplicity");
  return numerator(sum);
}

int ExtendedTable::count(SubsystemKind k) const {
  return static_cast<int>(std::count_if(columns.begin(), columns.end(), [k](const RootSubsystem& s) { return s.kind == k; }));
}

ExtendedTable extended_table(const std::string& group, int workers) {
  static std::mutex mu;
  static std::map<std::string, ExtendedTable> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(group); it != cache.end()) return it->second;
  RootSystem rs;
  if (group == "G2")
    rs = build_g2();
  else if (group == "F4")
    rs = build_f4();
  else
    throw DomainError("unknown exceptional group '" + group + "'");
  WeylGroup w = enumerate_weyl_group(rs);
  ExtendedTable t;
  t.group = group;
  t.columns = enumerate_closed_subsystems(rs, w);
  auto chars = character_table(rs, w);
  for (const auto& label : row_order(group)) {
    auto it = std::find_if(chars.begin(), chars.end(), [&](const Irreducible& c) { return c.label == label; });
    if (it == chars.end()) throw std::logic_error("character " + label + " not found");
    t.rows.push_back(*it);
  }
  if (t.rows.size() != chars.size()) throw std::logic_error("row order does not cover the character table");
  t.cells.assign(t.rows.size(), std::vector<BigInt>(t.columns.size()));
  parallel_for(static_cast<int>(t.rows.size()), workers, [&](int i) {
    for (std::size_t j = 0; j < t.columns.size(); ++j) t.cells[i][j] = extended_sign_mult(rs, w, t.rows[i], t.columns[j].basis);
  });
  cache[group] = t;
  return t;
}

}  // namespace weylsig
