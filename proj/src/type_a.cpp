#include "type_a.hpp"

#include <algorithm>

#include "tableaux.hpp"

namespace weylsig {

BigInt SignSignatureA::at(const Partition& p) const {
  auto it = mult.find(p);
  return it == mult.end() ? BigInt(0) : it->second;
}

BigInt sign_mult_a(const Partition& lam, const Composition& parabolic) {
  for (int x : parabolic)
    if (x <= 0) throw DomainError("type A parabolic parts must be positive");
  if (total(parabolic) != lam.size()) throw DomainError("parabolic rank does not match |lambda|");
  return kostka(conjugate(lam), parabolic);
}

SignSignatureA sign_signature_a(const Partition& lam) {
  SignSignatureA sig;
  sig.rank = lam.size();
  for (const Partition& p : partitions_of(lam.size())) sig.mult[p] = sign_mult_a(lam, p.parts());
  return sig;
}

Partition recover_a(const SignSignatureA& sig) {
  for (auto it = sig.mult.rbegin(); it != sig.mult.rend(); ++it)
    if (it->second > 0) return conjugate(it->first);
  throw DomainError("empty sign signature");
}

std::vector<Partition> type_a_order(int n) {
  std::vector<Partition> out = partitions_of(n);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return conjugate(a) > conjugate(b); });
  return out;
}

std::map<Partition, BigInt> decompose_a(const SignSignatureA& vec) {
  const int n = vec.rank;
  for (const auto& [p, v] : vec.mult)
    if (p.size() != n) throw DomainError("signature key " + to_string(p) + " has the wrong rank");
  auto order = type_a_order(n);
  std::map<Partition, BigInt> out;
  // Row i: P_{lam_i*}; only irreps j <= i contribute.
  for (std::size_t i = 0; i < order.size(); ++i) {
    Partition row = conjugate(order[i]);
    BigInt rhs = vec.at(row);
    for (std::size_t j = 0; j < i; ++j) {
      auto it = out.find(order[j]);
      if (it != out.end()) rhs -= it->second * sign_mult_a(order[j], row.parts());
    }
    if (rhs < 0) throw DomainError("vector is not a non-negative combination of irreducible signatures");
    if (rhs > 0) out[order[i]] = rhs;
  }
  for (const Partition& p : partitions_of(n)) {
    BigInt s = 0;
    for (const auto& [lam, m] : out) s += m * sign_mult_a(lam, p.parts());
    if (s != vec.at(p)) throw DomainError("vector is inconsistent with any representation");
  }
  return out;
}

}  // namespace weylsig
