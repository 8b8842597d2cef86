#include <set>

#include "doctest.h"
#include "labels.hpp"
#include "type_d.hpp"

using namespace weylsig;

namespace {

Partition ones(int n) { return Partition(std::vector<int>(n, 1)); }

BigInt at(const SignSignatureD& s, const ParabolicD& p) {
  auto it = s.find(p);
  return it == s.end() ? BigInt(0) : it->second;
}

ParabolicD swapped(const ParabolicD& p) {
  if (p.kind == DKind::Bar) return p;
  return p.kind == DKind::Plus ? ParabolicD::minus(p.a) : ParabolicD::plus(p.a);
}

template <class M>
M add(M a, const M& b) {
  for (const auto& [k, v] : b) a[k] += v;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

}  // namespace

TEST_CASE("labels") {
  CHECK(label_text(parse_irrep_d("{[2],[1]}")) == "{[1],[2]}");
  CHECK(parse_irrep_d("{[1],[2]}") == parse_irrep_d("{[2],[1]}"));
  CHECK(parse_irrep_d("[1,1]+") == IrrepD::split_rep({1, 1}, Sign::Plus));
  CHECK(label_text(parse_parabolic_d("(2,2)-")) == "(2,2)-");
  CHECK(label_text(parse_parabolic_d("(1)|(3)")) == "(1)|(3)");
  // Minus with a last part 1 is the same class as Plus.
  CHECK(ParabolicD::minus({2, 1}) == ParabolicD::plus({2, 1}));
  CHECK_THROWS_AS(parse_irrep_d("[1]"), DomainError);
}

TEST_CASE("irreducible count and dimensions") {
  for (int n = 2; n <= 6; ++n) {
    BigInt order = 1, s = 0;
    for (int i = 1; i <= n; ++i) order *= 2 * i;
    order /= 2;
    for (const auto& v : irreps_d(n)) s += dim_d(v) * dim_d(v);
    CHECK(s == order);
  }
}

TEST_CASE("sign and trivial representations") {
  for (int n = 2; n <= 5; ++n) {
    auto sign = IrrepD::pair(ones(n), {});
    auto triv = IrrepD::pair({n}, {});
    for (const auto& p : enumerate_parabolics_d(n)) {
      CHECK(sign_mult_d(sign, p) == 1);
      bool only = p.kind == DKind::Plus && p.a == Composition(n, 1);
      CHECK(sign_mult_d(triv, p) == (only ? 1 : 0));
    }
  }
}

TEST_CASE("conjugate parabolics swap the split pieces") {
  CHECK(sign_mult_d(IrrepD::split_rep({1, 1}, Sign::Plus), ParabolicD::plus({4})) ==
        sign_mult_d(IrrepD::split_rep({1, 1}, Sign::Minus), ParabolicD::minus({4})));
  for (int n = 2; n <= 6; ++n)
    for (const auto& v : irreps_d(n))
      for (const auto& p : enumerate_parabolics_d(n)) {
        IrrepD w = v;
        if (v.split) w.sign = v.sign == Sign::Plus ? Sign::Minus : Sign::Plus;
        REQUIRE(sign_mult_d(v, p) == sign_mult_d(w, swapped(p)));
      }
}

TEST_CASE("split pieces sum to the reducible module") {
  for (int n = 2; n <= 8; n += 2)
    for (const auto& lam : partitions_of(n / 2))
      for (const auto& p : enumerate_parabolics_d(n))
        REQUIRE(sign_mult_d(IrrepD::split_rep(lam, Sign::Plus), p) + sign_mult_d(IrrepD::split_rep(lam, Sign::Minus), p) ==
                sign_mult_d_pair(lam, lam, p));
}

TEST_CASE("split formula: diagonal term depends on the parity of n/2") {
  // D_6, lam = [2,1]: the diagonal Kostka number at (2,2,2)/2 is 2.
  auto p = ParabolicD::plus({2, 2, 2});
  CHECK(sign_mult_d(IrrepD::split_rep({2, 1}, Sign::Plus), p) == 4);
  CHECK(sign_mult_d(IrrepD::split_rep({2, 1}, Sign::Minus), p) == 6);
}

TEST_CASE("recover_d round trip and distinctness") {
  for (int n = 2; n <= 7; ++n) {
    std::set<SignSignatureD> seen;
    for (const auto& v : irreps_d(n)) {
      auto sig = sign_signature_d(v);
      REQUIRE(recover_d(sig, n) == v);
      seen.insert(sig);
    }
    CHECK(seen.size() == irreps_d(n).size());
  }
  auto trivial = sign_signature_d(IrrepD::pair({4}, {}));
  CHECK(recover_d(trivial, 4) == IrrepD::pair({4}, {}));
  auto bad = add(sign_signature_d(IrrepD::pair({3}, {1})), sign_signature_d(IrrepD::pair({4}, {})));
  CHECK_THROWS_AS(recover_d(bad, 4), DomainError);
}

TEST_CASE("nonsplit branching") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& v : irreps_d(n)) {
      if (v.split) continue;
      for (int k = 0; k <= n; ++k) {
        BigInt d = 0;
        for (const auto& [pr, m] : branch_d_nonsplit(v, k)) d += m * dim_d(pr.first) * dim_d(pr.second);
        REQUIRE(d == dim_d(v));
        // Forgetting order in the B_n branching gives the D_n branching.
        std::map<PairD, BigInt> from_b;
        for (const auto& [pr, m] : branch_b_to_bb(IrrepB{v.lam, v.mu}, k))
          from_b[{IrrepD::pair(pr.first.lam, pr.first.mu), IrrepD::pair(pr.second.lam, pr.second.mu)}] += m;
        REQUIRE(from_b == branch_d_nonsplit(v, k));
      }
      CHECK(branch_d_nonsplit(v, 0).size() == 1);
    }
}

TEST_CASE("split branching") {
  for (int n = 2; n <= 8; n += 2)
    for (const auto& lam : partitions_of(n / 2)) {
      auto plus = IrrepD::split_rep(lam, Sign::Plus), minus = IrrepD::split_rep(lam, Sign::Minus);
      for (int k = 0; k <= n; ++k) {
        auto bp = branch_d_split(plus, k), bm = branch_d_split(minus, k);
        for (const auto* b : {&bp, &bm}) {
          BigInt d = 0;
          for (const auto& [pr, m] : *b) d += m * dim_d(pr.first) * dim_d(pr.second);
          REQUIRE(d == dim_d(plus));
        }
        REQUIRE(expand_reducible(add(bp, bm)) == expand_reducible(branch_d_nonsplit(IrrepD::pair(lam, lam), k)));
      }
      auto id = branch_d_split(plus, n);
      CHECK(id == std::map<PairD, BigInt>{{{plus, IrrepD::split_rep({}, Sign::Plus)}, 1}});
    }
  CHECK_THROWS_AS(branch_d_split(IrrepD::pair({2}, {1}), 1), DomainError);
}

TEST_CASE("split restriction to S_n") {
  using M = std::map<Partition, BigInt>;
  CHECK(branch_d_split_to_sn(IrrepD::split_rep({1}, Sign::Plus)) == M{{{2}, 1}});
  CHECK(branch_d_split_to_sn(IrrepD::split_rep({1}, Sign::Minus)) == M{{{1, 1}, 1}});
  for (const auto& lam : partitions_of(3)) {
    auto sum = add(branch_d_split_to_sn(IrrepD::split_rep(lam, Sign::Plus)), branch_d_split_to_sn(IrrepD::split_rep(lam, Sign::Minus)));
    auto want = branch_b_to_sn(IrrepB{lam, lam});
    std::erase_if(want, [](const auto& kv) { return kv.second == 0; });
    CHECK(sum == want);
  }
}
