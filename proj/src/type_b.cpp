#include "type_b.hpp"

#include <algorithm>
#include <functional>

#include "tableaux.hpp"

namespace weylsig {

namespace {

Composition sorted_desc(Composition c) {
  for (int x : c)
    if (x <= 0) throw DomainError("parabolic parts must be positive");
  std::sort(c.begin(), c.end(), std::greater<>());
  return c;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Partitions of size m contained in lam.
std::vector<Partition> subpartitions(const Partition& lam, int m) {
  std::vector<Partition> out;
  for (const Partition& p : partitions_of_bounded(m, lam.length()))
    if (contains(lam, p)) out.push_back(p);
  return out;
}

}  // namespace

ParabolicB::ParabolicB(Composition a_parts, Composition b_parts)
    : a(sorted_desc(std::move(a_parts))), b(sorted_desc(std::move(b_parts))) {}

BigInt SignSignatureB::at(const ParabolicB& p) const {
  auto it = mult.find(p);
  return it == mult.end() ? BigInt(0) : it->second;
}

std::vector<ParabolicB> enumerate_parabolics_b(int n, bool generalized, int cap) {
  if (n > cap) throw DomainError("rank exceeds cap");
  std::vector<ParabolicB> out;
  for (int bs = n; bs >= 0; --bs) {
    auto bparts = partitions_of(bs);
    auto aparts = partitions_of(n - bs);
    std::reverse(aparts.begin(), aparts.end());
    for (const Partition& b : bparts) {
      if (!generalized && b.length() > 1) continue;
      for (const Partition& a : aparts) out.emplace_back(a.parts(), b.parts());
    }
  }
  // b-parts lex descending across sizes, a-parts ascending within.
  std::stable_sort(out.begin(), out.end(), [](const ParabolicB& x, const ParabolicB& y) { return lex_compare(x.b, y.b) > 0; });
  return out;
}

std::vector<IrrepB> irreps_b(int n) {
  std::vector<IrrepB> out;
  for (int i = 0; i <= n; ++i) {
    auto ls = partitions_of(i);
    auto ms = partitions_of(n - i);
    std::reverse(ls.begin(), ls.end());
    std::reverse(ms.begin(), ms.end());
    for (const auto& l : ls)
      for (const auto& m : ms) out.push_back({l, m});
  }
  return out;
}

bool succ(const IrrepB& x, const IrrepB& y) {
  auto c = lex_compare(conjugate(x.mu), conjugate(y.mu));
  if (c != 0) return c > 0;
  if (x.mu != y.mu) return false;
  return lex_compare(conjugate(x.lam), conjugate(y.lam)) > 0;
}

std::vector<IrrepB> irreps_b_succ_order(int n) {
  auto out = irreps_b(n);
  std::sort(out.begin(), out.end(), succ);
  return out;
}

ParabolicB dual_parabolic(const IrrepB& v) { return ParabolicB(conjugate(v.lam).parts(), conjugate(v.mu).parts()); }

BigInt sign_mult_b(const IrrepB& v, const ParabolicB& p) {
  if (v.rank() != p.rank()) throw DomainError("irrep and parabolic ranks differ");
  const Partition ls = conjugate(v.lam), ms = conjugate(v.mu);
  BigInt sum = 0;
  for (const Composition& alpha : sub_compositions(p.a)) {
    if (total(alpha) != ls.size()) continue;
    BigInt kl = kostka(ls, alpha);
    if (kl == 0) continue;
    Composition beta(p.a.size());
    for (std::size_t i = 0; i < p.a.size(); ++i) beta[i] = p.a[i] - alpha[i];
    sum += kl * kostka(ms, concat(beta, p.b));
  }
  return sum;
}

SignSignatureB sign_signature_b(const IrrepB& v, bool generalized) {
  SignSignatureB sig;
  sig.rank = v.rank();
  sig.generalized = generalized;
  for (const auto& p : enumerate_parabolics_b(v.rank(), generalized)) sig.mult[p] = sign_mult_b(v, p);
  return sig;
}

IrrepB recover_b(const SignSignatureB& sig, Match match) {
  const int n = sig.rank;
  // gamma = lam* + mu*, the lex-largest pure type A parabolic present.
  Partition gamma;
  bool found = false;
  for (const Partition& g : partitions_of(n)) {
    if (sig.at(ParabolicB(g.parts(), {})) > 0) {
      gamma = g;
      found = true;
      break;
    }
  }
  if (!found) throw DomainError("signature has no type A parabolic in its support");
  Composition a(gamma.length()), b(gamma.length());
  for (int t = 0; t < gamma.length(); ++t) {
    int best = 0;
    for (int p = gamma[t]; p >= 1; --p) {
      Composition rest(gamma.parts());
      rest[t] -= p;
      if (sig.at(ParabolicB(sort_to_partition(rest).parts(), {p})) > 0) {
        best = p;
        break;
      }
    }
    b[t] = best;
    a[t] = gamma[t] - best;
  }
  auto as_partition = [](const Composition& c) {
    Composition t(c);
    while (!t.empty() && t.back() == 0) t.pop_back();
    return Partition(t);
  };
  IrrepB v;
  try {
    v = {conjugate(as_partition(a)), conjugate(as_partition(b))};
  } catch (const DomainError&) {
    throw DomainError("signature does not come from an irreducible representation");
  }
  auto check = sign_signature_b(v, sig.generalized);
  auto differ = [&](const BigInt& x, const BigInt& y) { return match == Match::Exact ? x != y : (x > 0) != (y > 0); };
  for (const auto& [p, m] : check.mult)
    if (differ(sig.at(p), m)) throw DomainError("signature does not come from an irreducible representation");
  for (const auto& [p, m] : sig.mult)
    if (m != 0 && differ(check.at(p), m)) throw DomainError("signature does not come from an irreducible representation");
  return v;
}

std::map<IrrepB, BigInt> decompose_b(const SignSignatureB& vec) {
  const int n = vec.rank;
  auto order = irreps_b_succ_order(n);
  std::map<IrrepB, BigInt> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    ParabolicB row = dual_parabolic(order[i]);
    BigInt rhs = vec.at(row);
    for (std::size_t j = 0; j < i; ++j) {
      auto it = out.find(order[j]);
      if (it != out.end()) rhs -= it->second * sign_mult_b(order[j], row);
    }
    if (rhs < 0) throw DomainError("vector is not a non-negative combination of irreducible signatures");
    if (rhs > 0) out[order[i]] = rhs;
  }
  for (const auto& p : enumerate_parabolics_b(n, true)) {
    BigInt s = 0;
    for (const auto& [v, m] : out) s += m * sign_mult_b(v, p);
    if (s != vec.at(p)) throw DomainError("vector is inconsistent with any representation");
  }
  return out;
}

BigInt dim_b(const IrrepB& v) { return binomial(v.rank(), v.lam.size()) * hook_dimension(v.lam) * hook_dimension(v.mu); }

std::map<PairB, BigInt> branch_b_to_bb(const IrrepB& v, int k) {
  const int n = v.rank();
  if (k < 0 || k > n) throw DomainError("branching index out of range");
  std::map<PairB, BigInt> out;
  for (int i = 0; i <= std::min(k, v.lam.size()); ++i) {
    int j = k - i;
    if (j > v.mu.size()) continue;
    for (const Partition& nu : subpartitions(v.lam, i))
      for (const Partition& xi : partitions_of(v.lam.size() - i)) {
        BigInt c1 = lr_coefficient(v.lam, nu, xi);
        if (c1 == 0) continue;
        for (const Partition& sigma : subpartitions(v.mu, j))
          for (const Partition& zeta : partitions_of(v.mu.size() - j)) {
            BigInt c2 = lr_coefficient(v.mu, sigma, zeta);
            if (c2 == 0) continue;
            out[{IrrepB{nu, sigma}, IrrepB{xi, zeta}}] += c1 * c2;
          }
      }
  }
  return out;
}

std::map<Partition, BigInt> branch_b_to_sn(const IrrepB& v) {
  std::map<Partition, BigInt> out;
  for (const Partition& nu : partitions_of(v.rank())) {
    BigInt c = lr_coefficient(nu, v.lam, v.mu);
    if (c != 0) out[nu] = c;
  }
  return out;
}

namespace {

// Multiplicity of t_1 ⊗ ... ⊗ t_k in V_nu restricted to S_{a_1} x ... x S_{a_k}.
BigInt iterated_lr(const Partition& nu, const std::vector<Partition>& targets, std::size_t count) {
  if (count == 0) return nu.empty() ? BigInt(1) : BigInt(0);
  const Partition& last = targets[count - 1];
  if (last.size() > nu.size()) return 0;
  BigInt sum = 0;
  for (const Partition& rho : subpartitions(nu, nu.size() - last.size())) {
    BigInt c = lr_coefficient(nu, rho, last);
    if (c != 0) sum += c * iterated_lr(rho, targets, count - 1);
  }
  return sum;
}

BigInt peel_b(const IrrepB& v, const ParabolicB& p, const FactorTarget& t, std::size_t bcount) {
  if (bcount == 0) {
    BigInt sum = 0;
    for (const auto& [nu, c] : branch_b_to_sn(v)) sum += c * iterated_lr(nu, t.a, t.a.size());
    return sum;
  }
  const int last = p.b[bcount - 1];
  BigInt sum = 0;
  for (const auto& [pr, c] : branch_b_to_bb(v, v.rank() - last))
    if (pr.second == t.b[bcount - 1]) sum += c * peel_b(pr.first, p, t, bcount - 1);
  return sum;
}

}  // namespace

BigInt branch_b_generalized(const IrrepB& v, const ParabolicB& p, const FactorTarget& target) {
  if (v.rank() != p.rank()) throw DomainError("irrep and parabolic ranks differ");
  if (target.a.size() != p.a.size() || target.b.size() != p.b.size()) throw DomainError("target has the wrong number of factors");
  for (std::size_t i = 0; i < p.a.size(); ++i)
    if (target.a[i].size() != p.a[i]) throw DomainError("target factor size does not match parabolic");
  for (std::size_t i = 0; i < p.b.size(); ++i)
    if (target.b[i].rank() != p.b[i]) throw DomainError("target factor size does not match parabolic");
  return peel_b(v, p, target, p.b.size());
}

std::vector<LabeledDim> wigner_mackey_labels(int n, int cap) {
  if (n > cap) throw DomainError("rank exceeds cap");
  std::vector<LabeledDim> out;
  for (const auto& v : irreps_b(n)) out.push_back({v, dim_b(v)});
  return out;
}

}  // namespace weylsig
