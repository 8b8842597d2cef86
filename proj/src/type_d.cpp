#include "type_d.hpp"

#include <algorithm>
#include <functional>

#include "type_b.hpp"

namespace weylsig {

namespace {

Composition sorted_desc(Composition c) {
  for (int x : c)
    if (x <= 0) throw DomainError("parabolic parts must be positive");
  std::sort(c.begin(), c.end(), std::greater<>());
  return c;
}

// True when the multiset `sub` (zeros ignored) is contained in `parts`.
bool multiset_contains(const Composition& parts, const Composition& sub) {
  std::map<int, int> need;
  for (int x : sub)
    if (x > 0) ++need[x];
  for (int x : parts) {
    auto it = need.find(x);
    if (it != need.end() && --it->second == 0) need.erase(it);
  }
  return need.empty();
}

Composition with(Composition c, int x) {
  c.push_back(x);
  return c;
}

BigInt at(const SignSignatureD& sig, const ParabolicD& p) {
  auto it = sig.find(p);
  return it == sig.end() ? BigInt(0) : it->second;
}

}  // namespace

ParabolicD ParabolicD::plus(Composition a) {
  ParabolicD p;
  p.kind = DKind::Plus;
  p.a = sorted_desc(std::move(a));
  return p;
}

ParabolicD ParabolicD::minus(Composition a) {
  ParabolicD p = plus(std::move(a));
  if (!p.a.empty() && p.a.back() > 1) p.kind = DKind::Minus;
  return p;
}

ParabolicD ParabolicD::bar(Composition a, int d) {
  if (d < 0) throw DomainError("negative D-part");
  if (d == 0) return plus(std::move(a));
  if (d == 1) return plus(with(std::move(a), 1));
  ParabolicD p = plus(std::move(a));
  p.kind = DKind::Bar;
  p.d = d;
  return p;
}

IrrepD IrrepD::pair(Partition a, Partition b) {
  IrrepD v;
  if (lex_compare(conjugate(a), conjugate(b)) > 0) std::swap(a, b);
  v.lam = std::move(a);
  v.mu = std::move(b);
  return v;
}

IrrepD IrrepD::split_rep(Partition lam, Sign s) {
  IrrepD v;
  v.split = true;
  v.lam = lam;
  v.mu = std::move(lam);
  v.sign = s;
  return v;
}

std::vector<ParabolicD> enumerate_parabolics_d(int n, int cap) {
  if (n > cap) throw DomainError("rank exceeds cap");
  std::vector<ParabolicD> out;
  for (const Partition& p : partitions_of(n)) out.push_back(ParabolicD::plus(p.parts()));
  for (const Partition& p : partitions_of(n))
    if (!p.empty() && p.parts().back() > 1) out.push_back(ParabolicD::minus(p.parts()));
  for (int d = n; d >= 2; --d)
    for (const Partition& p : partitions_of(n - d)) out.push_back(ParabolicD::bar(p.parts(), d));
  return out;
}

std::vector<IrrepD> irreps_d(int n) {
  std::vector<IrrepD> out;
  for (const IrrepB& b : irreps_b(n)) {
    if (b.lam == b.mu) {
      out.push_back(IrrepD::split_rep(b.lam, Sign::Plus));
      out.push_back(IrrepD::split_rep(b.lam, Sign::Minus));
      continue;
    }
    IrrepD v = IrrepD::pair(b.lam, b.mu);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

namespace {

Composition full_parts(const ParabolicD& p) { return p.kind == DKind::Bar ? with(p.a, p.d) : p.a; }

// Sum of K_{l,alpha} K_{m,beta} over alpha + beta = p with the Bar restriction
// on the last entry. `mode` selects which ordered pairs are counted.
enum class PairMode { All, OffDiagonal };

BigInt pair_sum(const Partition& ls, const Partition& ms, const Composition& p, bool last_restricted, PairMode mode) {
  BigInt sum = 0;
  const std::size_t k = p.size();
  for (const Composition& alpha : sub_compositions(p)) {
    if (total(alpha) != ls.size()) continue;
    Composition beta(k);
    for (std::size_t i = 0; i < k; ++i) beta[i] = p[i] - alpha[i];
    if (last_restricted && k > 0 && alpha[k - 1] != 0 && beta[k - 1] != 0) continue;
    bool diag = alpha == beta;
    if (mode == PairMode::OffDiagonal && diag) continue;
    BigInt kl = kostka(ls, alpha);
    if (kl == 0) continue;
    sum += kl * kostka(ms, beta);
  }
  return sum;
}

// Sum over alpha with 2 alpha = p of K(K + eps)/2, K = K_{l,alpha}.
BigInt diagonal_sum(const Partition& ls, const Composition& p, int eps) {
  Composition alpha;
  for (int x : p) {
    if (x % 2 != 0) return 0;
    alpha.push_back(x / 2);
  }
  BigInt k = kostka(ls, alpha);
  return k * (k + eps) / 2;
}

}  // namespace

BigInt sign_mult_d_pair(const Partition& lam, const Partition& mu, const ParabolicD& p) {
  if (lam.size() + mu.size() != p.rank()) throw DomainError("irrep and parabolic ranks differ");
  return pair_sum(conjugate(lam), conjugate(mu), full_parts(p), p.kind == DKind::Bar, PairMode::All);
}

BigInt sign_mult_d(const IrrepD& v, const ParabolicD& p) {
  if (v.rank() != p.rank()) throw DomainError("irrep and parabolic ranks differ");
  if (!v.split) {
    if (v.lam == v.mu) throw DomainError("{lam,lam} is reducible; use a split label");
    return sign_mult_d_pair(v.lam, v.mu, p);
  }
  const Partition ls = conjugate(v.lam);
  const Composition parts = full_parts(p);
  if (p.kind == DKind::Bar) return pair_sum(ls, ls, parts, true, PairMode::OffDiagonal) / 2;
  BigInt off = pair_sum(ls, ls, parts, false, PairMode::OffDiagonal) / 2;
  // The swap inside P acts on the diagonal piece by (-1)^{n/2}, so the
  // symmetric half goes to the matching sign only when n/2 is even.
  bool same = (v.sign == Sign::Plus) == (p.kind == DKind::Plus);
  int eps = (v.rank() / 2) % 2 == 0 ? 1 : -1;
  return off + diagonal_sum(ls, parts, same ? eps : -eps);
}

SignSignatureD sign_signature_d(const IrrepD& v) {
  SignSignatureD sig;
  for (const auto& p : enumerate_parabolics_d(v.rank())) sig[p] = sign_mult_d(v, p);
  return sig;
}

namespace {

// Is some P^+ (or P^-) containing the multiset `prefix` in the support?
bool plus_probe(const SignSignatureD& sig, const Composition& prefix) {
  for (const auto& [p, m] : sig)
    if (m > 0 && p.kind == DKind::Plus && multiset_contains(p.a, prefix)) return true;
  return false;
}

bool minus_probe(const SignSignatureD& sig, const Composition& prefix) {
  for (const auto& [p, m] : sig) {
    if (m <= 0) continue;
    bool minus_class = p.kind == DKind::Minus || (p.kind == DKind::Plus && !p.a.empty() && p.a.back() == 1);
    if (minus_class && multiset_contains(p.a, prefix)) return true;
  }
  return false;
}

// Is some \bar P_{(prefix, ...), (d)} in the support? d <= 1 falls back to P^+.
bool bar_probe(const SignSignatureD& sig, const Composition& prefix, int d) {
  if (d == 0) return plus_probe(sig, prefix);
  if (d == 1) return plus_probe(sig, with(prefix, 1));
  for (const auto& [p, m] : sig)
    if (m > 0 && p.kind == DKind::Bar && p.d == d && multiset_contains(p.a, prefix)) return true;
  return false;
}

Composition greedy(int n, const std::function<bool(const Composition&)>& probe) {
  Composition out;
  int used = 0;
  while (used < n) {
    int best = 0;
    for (int p = n - used; p >= 1; --p)
      if (probe(with(out, p))) {
        best = p;
        break;
      }
    if (best == 0) throw DomainError("signature has no consistent type A parabolic chain");
    out.push_back(best);
    used += best;
  }
  return out;
}

Partition half_dual(const Composition& c) {
  Composition h;
  for (int x : c) {
    if (x % 2 != 0) throw DomainError("split candidate has an odd part");
    h.push_back(x / 2);
  }
  return conjugate(Partition(h));
}

Partition trimmed(Composition c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return Partition(std::move(c));
}

}  // namespace

IrrepD recover_d(const SignSignatureD& sig, int n, Match match) {
  auto fail = [] { return DomainError("signature does not come from an irreducible representation"); };
  Composition alpha = greedy(n, [&](const Composition& pre) { return plus_probe(sig, pre); });
  Composition beta = greedy(n, [&](const Composition& pre) { return minus_probe(sig, pre); });

  IrrepD v;
  try {
    auto c = lex_compare(alpha, beta);
    // The top key 2 lam^* lies over P^+ for V^+ when n/2 is even, over P^- when odd.
    const bool odd = (n / 2) % 2 != 0;
    if (c > 0) {
      v = IrrepD::split_rep(half_dual(alpha), odd ? Sign::Minus : Sign::Plus);
    } else if (c < 0) {
      v = IrrepD::split_rep(half_dual(beta), odd ? Sign::Plus : Sign::Minus);
    } else {
      const int k = static_cast<int>(alpha.size());
      Composition d(k, 0);
      Composition prefix;
      int s = -1;
      for (int i = 0; i < k; ++i) {
        int best = -1;
        for (int p = n; p >= 0; --p)
          if (bar_probe(sig, prefix, p)) {
            best = p;
            break;
          }
        if (best < 0) throw fail();
        d[i] = best;
        if (2 * best > alpha[i]) {
          s = i;
          break;
        }
        prefix.push_back(alpha[i]);
      }
      if (s < 0) throw fail();
      // prefix now holds alpha_1..alpha_{s-1}; the D-factor stays d_s.
      for (int i = s + 1; i < k; ++i) {
        int f = -1;
        for (int p = n; p >= 0; --p)
          if (bar_probe(sig, with(prefix, p), d[s])) {
            f = p;
            break;
          }
        if (f < 0) throw fail();
        prefix.push_back(f);
        d[i] = f + d[i - 1] - alpha[i - 1];
        if (d[i] < 0 || d[i] > alpha[i]) throw fail();
      }
      Composition e(k);
      for (int i = 0; i < k; ++i) e[i] = alpha[i] - d[i];
      v = IrrepD::pair(conjugate(trimmed(d)), conjugate(trimmed(e)));
      if (!v.irreducible()) throw fail();
    }
  } catch (const DomainError&) {
    throw fail();
  }
  if (v.rank() != n) throw fail();
  auto check = sign_signature_d(v);
  auto differ = [&](const BigInt& x, const BigInt& y) { return match == Match::Exact ? x != y : (x > 0) != (y > 0); };
  for (const auto& [p, m] : check)
    if (differ(at(sig, p), m)) throw fail();
  for (const auto& [p, m] : sig)
    if (m != 0 && differ(at(check, p), m)) throw fail();
  return v;
}

BigInt dim_d(const IrrepD& v) {
  if (!v.split) return dim_b(IrrepB{v.lam, v.mu});
  if (v.rank() == 0) return v.sign == Sign::Plus ? 1 : 0;
  return dim_b(IrrepB{v.lam, v.lam}) / 2;
}

namespace {

bool zero_module(const IrrepD& v) { return v.split && v.rank() == 0 && v.sign == Sign::Minus; }

BigInt binom2(const BigInt& c) { return c * (c - 1) / 2; }

}  // namespace

std::map<PairD, BigInt> branch_d_nonsplit(const IrrepD& v, int k) {
  if (v.split) throw DomainError("expected a non-split label");
  std::map<PairD, BigInt> out;
  for (const auto& [pr, m] : branch_b_to_bb(IrrepB{v.lam, v.mu}, k))
    out[{IrrepD::pair(pr.first.lam, pr.first.mu), IrrepD::pair(pr.second.lam, pr.second.mu)}] += m;
  return out;
}

std::map<PairD, BigInt> branch_d_split(const IrrepD& v, int k) {
  if (!v.split) throw DomainError("expected a split label");
  const int n = v.rank();
  if (k < 0 || k > n) throw DomainError("branching index out of range");
  std::map<PairD, BigInt> out;
  // One representative per orbit of (nu,sigma,xi,zeta) <-> (sigma,nu,zeta,xi).
  for (const auto& [pr, m] : branch_b_to_bb(IrrepB{v.lam, v.lam}, k)) {
    const Partition &nu = pr.first.lam, &sigma = pr.first.mu, &xi = pr.second.lam, &zeta = pr.second.mu;
    bool rep = nu > sigma || (nu == sigma && xi > zeta);
    if (!rep) continue;
    out[{IrrepD::pair(nu, sigma), IrrepD::pair(xi, zeta)}] += m;
  }
  if (k % 2 == 0) {
    for (const Partition& nu : partitions_of(k / 2))
      for (const Partition& xi : partitions_of((n - k) / 2)) {
        BigInt c = lr_coefficient(v.lam, nu, xi);
        if (c == 0) continue;
        for (Sign s1 : {Sign::Plus, Sign::Minus})
          for (Sign s2 : {Sign::Plus, Sign::Minus}) {
            IrrepD left = IrrepD::split_rep(nu, s1), right = IrrepD::split_rep(xi, s2);
            if (zero_module(left) || zero_module(right)) continue;
            int minus = (v.sign == Sign::Minus) + (s1 == Sign::Minus) + (s2 == Sign::Minus);
            BigInt dcoef = minus % 2 == 0 ? binom2(c + 1) : binom2(c);
            if (dcoef != 0) out[{left, right}] += dcoef;
          }
      }
  }
  return out;
}

std::map<Partition, BigInt> branch_d_split_to_sn(const IrrepD& v) {
  if (!v.split) throw DomainError("expected a split label");
  return split_square_coefficients(v.lam, v.sign);
}

std::map<PairD, BigInt> expand_reducible(const std::map<PairD, BigInt>& terms) {
  auto pieces = [](const IrrepD& x) {
    std::vector<IrrepD> out;
    if (x.split || x.lam != x.mu) {
      out.push_back(x);
    } else {
      out.push_back(IrrepD::split_rep(x.lam, Sign::Plus));
      if (x.rank() > 0) out.push_back(IrrepD::split_rep(x.lam, Sign::Minus));
    }
    return out;
  };
  std::map<PairD, BigInt> out;
  for (const auto& [pr, m] : terms)
    for (const auto& l : pieces(pr.first))
      for (const auto& r : pieces(pr.second)) out[{l, r}] += m;
  return out;
}

}  // namespace weylsig
