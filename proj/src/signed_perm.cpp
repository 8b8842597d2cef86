#include "signed_perm.hpp"

#include <deque>

#include "numeric.hpp"

namespace weylsig {

SignedPerm SignedPerm::identity(int n) {
  SignedPerm g;
  g.img.resize(n);
  for (int j = 0; j < n; ++j) g.img[j] = j + 1;
  return g;
}

SignedPerm SignedPerm::transposition(int n, int i) {
  SignedPerm g = identity(n);
  std::swap(g.img[i], g.img[i + 1]);
  return g;
}

SignedPerm SignedPerm::sign_change(int n, int i) {
  SignedPerm g = identity(n);
  g.img[i] = -g.img[i];
  return g;
}

SignedPerm SignedPerm::signed_swap(int n, int i) {
  SignedPerm g = identity(n);
  g.img[i] = -(i + 2);
  g.img[i + 1] = -(i + 1);
  return g;
}

int SignedPerm::det() const {
  int d = 1;
  std::vector<bool> seen(img.size(), false);
  for (int j = 0; j < n(); ++j) {
    if (img[j] < 0) d = -d;
    if (seen[j]) continue;
    int len = 0;
    for (int k = j; !seen[k]; k = target(k)) {
      seen[k] = true;
      ++len;
    }
    if (len % 2 == 0) d = -d;
  }
  return d;
}

int SignedPerm::negatives() const {
  int c = 0;
  for (int x : img)
    if (x < 0) ++c;
  return c;
}

bool SignedPerm::is_identity() const {
  for (int j = 0; j < n(); ++j)
    if (img[j] != j + 1) return false;
  return true;
}

SignedPerm SignedPerm::operator*(const SignedPerm& h) const {
  SignedPerm r;
  r.img.resize(h.img.size());
  for (int j = 0; j < h.n(); ++j) r.img[j] = h.sign(j) * img[h.target(j)];
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  r.img.resize(img.size());
  for (int j = 0; j < n(); ++j) r.img[target(j)] = sign(j) * (j + 1);
  return r;
}

std::size_t SignedPermHash::operator()(const SignedPerm& g) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : g.img) h = (h ^ static_cast<std::size_t>(x + 64)) * 1099511628211ull;
  return h;
}

std::vector<SignedPerm> generate(const std::vector<SignedPerm>& gens, int n, std::size_t cap) {
  std::vector<SignedPerm> out{SignedPerm::identity(n)};
  SignedPermMap<int> seen{{out[0], 0}};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& s : gens) {
      SignedPerm g = s * out[i];
      if (seen.count(g)) continue;
      if (out.size() >= cap) throw DomainError("group enumeration exceeds element cap");
      seen.emplace(g, static_cast<int>(out.size()));
      out.push_back(std::move(g));
    }
  return out;
}

std::vector<SignedPerm> coxeter_generators(GroupTag tag, int n) {
  std::vector<SignedPerm> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(SignedPerm::transposition(n, i));
  if (tag == GroupTag::B && n >= 1) gens.push_back(SignedPerm::sign_change(n, n - 1));
  if (tag == GroupTag::D && n >= 2) gens.push_back(SignedPerm::signed_swap(n, n - 2));
  return gens;
}

Group enumerate_group(GroupTag tag, int n, std::size_t cap) {
  Group g{tag, n, coxeter_generators(tag, n), {}, {}};
  g.elements = generate(g.gens, n, cap);
  SignedPermMap<int> index;
  for (std::size_t i = 0; i < g.elements.size(); ++i) index.emplace(g.elements[i], static_cast<int>(i));
  std::vector<int> cls(g.elements.size(), -1);
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    if (cls[i] >= 0) continue;
    int id = static_cast<int>(g.classes.size());
    g.classes.emplace_back();
    std::deque<int> todo{static_cast<int>(i)};
    cls[i] = id;
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      g.classes[id].push_back(x);
      for (const auto& s : g.gens) {
        int y = index.at(s * g.elements[x] * s.inverse());
        if (cls[y] < 0) {
          cls[y] = id;
          todo.push_back(y);
        }
      }
    }
  }
  return g;
}

std::string to_string(const SignedPerm& g) {
  std::string s = "(";
  for (int j = 0; j < g.n(); ++j) {
    if (j) s += ',';
    s += std::to_string(g.img[j]);
  }
  return s + ")";
}

}  // namespace weylsig
