#include <fstream>
#include <map>
#include <sstream>

#include "doctest.h"
#include "labels.hpp"
#include "oracle.hpp"
#include "wgraph.hpp"

using namespace weylsig;

namespace {

std::string g2_text() {
  std::ifstream in(std::string(WEYLSIG_TEST_DATA_DIR) + "/data/g2_wcell.txt");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const CoxeterData& g2() {
  static const CoxeterData c = CoxeterData::parse("G2");
  return c;
}

RatMatrix idempotent_check(const RatMatrix& m) { return m * m - m; }

int count_matching(const WeakWGraph& g, const RootSet& A) {
  int c = 0;
  for (const auto& t : g.tau) c += t == A;
  return c;
}

// Characters of a graph module, indexed by group elements in the (faithful)
// Coxeter-graph representation.
std::map<std::vector<std::string>, Rational> character(const WeakWGraph& g, const CoxeterData& cox) {
  auto key = [](const RatMatrix& m) {
    std::vector<std::string> k;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) k.push_back(m(i, j).str());
    return k;
  };
  auto ref = coxeter_graph(cox);
  std::map<std::vector<std::string>, RatMatrix> seen;
  std::vector<std::pair<RatMatrix, RatMatrix>> todo{{RatMatrix::identity(cox.rank), RatMatrix::identity(g.size())}};
  seen.emplace(key(todo[0].first), todo[0].second);
  for (std::size_t i = 0; i < todo.size(); ++i)
    for (int a = 1; a <= cox.rank; ++a) {
      RatMatrix x = simple_reflection_matrix(ref, a) * todo[i].first;
      if (seen.count(key(x))) continue;
      RatMatrix y = simple_reflection_matrix(g, a) * todo[i].second;
      seen.emplace(key(x), y);
      todo.emplace_back(x, y);
    }
  std::map<std::vector<std::string>, Rational> out;
  for (const auto& [k, m] : seen) out[k] = m.trace();
  return out;
}

}  // namespace

TEST_CASE("Coxeter data") {
  auto a3 = CoxeterData::parse("A3");
  CHECK(a3.rank == 3);
  CHECK(a3.m[0][1] == 3);
  CHECK(a3.m[0][2] == 2);
  CHECK(g2().m[0][1] == 6);
  CHECK(CoxeterData::parse("C3").m == CoxeterData::parse("B3").m);
  CHECK(CoxeterData::parse("F4").m[1][2] == 4);
  CHECK_THROWS_AS(CoxeterData::parse("E6"), DomainError);
  CHECK_THROWS_AS(CoxeterData::from_matrix({{1, 3}, {2, 1}}), DomainError);
}

TEST_CASE("simple reflection matrices") {
  auto a2 = coxeter_graph(CoxeterData::parse("A2"));
  RatMatrix s1(2, 2);
  s1(0, 0) = -1;
  s1(0, 1) = 1;
  s1(1, 1) = 1;
  CHECK(simple_reflection_matrix(a2, 1) == s1);
  WeakWGraph all;
  all.ids = {0, 1};
  all.tau = {{1}, {1, 2}};
  CHECK(simple_reflection_matrix(all, 1) == RatMatrix::identity(2).scaled(-1));
  auto file = parse_wcell(g2_text());
  for (int a = 1; a <= 2; ++a) {
    auto s = simple_reflection_matrix(file.cells[1], a);
    CHECK(s * s == RatMatrix::identity(5));
  }
}

TEST_CASE("validate") {
  for (const char* t : {"A1", "A2", "A3", "B3", "D4", "G2", "F4"}) {
    auto cox = CoxeterData::parse(t);
    CHECK_MESSAGE(validate(coxeter_graph(cox), cox).ok, t);
  }
  auto cox = CoxeterData::parse("A3");
  auto g = coxeter_graph(cox);
  g.m[{0, 1}] = 2;
  auto v = validate(g, cox);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.violation.empty());
}

TEST_CASE("G2 wcell file") {
  auto file = parse_wcell(g2_text());
  REQUIRE(file.cells.size() == 4);
  std::vector<int> sizes;
  for (const auto& c : file.cells) sizes.push_back(c.size());
  CHECK(sizes == std::vector<int>{1, 5, 5, 1});
  CHECK(file.cells[1].ids == std::vector<int>{1, 3, 6, 7, 11});
  CHECK(file.induced == std::vector<std::vector<int>>{{}, {0}, {0}, {1, 2}});
  for (const auto& c : file.cells) CHECK(validate(c, g2()).ok);
  std::vector<std::string> sigs;
  for (const auto& c : file.cells) sigs.push_back(to_string(tau_signature(c)));
  CHECK(sigs == std::vector<std::string>{"{{}}", "{{1},{2}}", "{{1},{2}}", "{{1,2}}"});
  CHECK(std::set<std::string>(sigs.begin(), sigs.end()).size() == 3);
}

TEST_CASE("wcell parse errors") {
  auto text = g2_text();
  auto pos = text.find("0[1]: {2} --> 1");
  REQUIRE(pos != std::string::npos);
  std::string bad = text;
  bad.replace(pos, std::string("0[1]: {2} --> 1").size(), "0[1]: {2 --> 1");
  int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
  try {
    parse_wcell(bad);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line == line);
  }
  CHECK(parse_wcell("// Individual cells.\n").cells.empty());
  CHECK_THROWS_AS(parse_wcell("// Individual cells.\n// cell #0:\n0[0]: {} --> 3\n"), ParseError);
  CHECK_THROWS_AS(parse_wcell("// Individual cells.\n// cell #0:\n1[0]: {}\n"), ParseError);
  CHECK_THROWS_AS(parse_wcell("// Cells and their vertices.\n#0={0,1}\n// Individual cells.\n// cell #0:\n0[0]: {}\n"), ParseError);
  auto labeled = parse_wcell("// Individual cells.\n// cell #0:\n0[0]: {1} --> 1(2)\n1[1]: {2} --> 0\n");
  CHECK(labeled.cells[0].edge(0, 1) == 2);
  CHECK(labeled.cells[0].edge(1, 0) == 1);
}

TEST_CASE("vertex partition") {
  auto file = parse_wcell(g2_text());
  const auto& c1 = file.cells[1];
  auto p = vertex_partition(c1, {});
  CHECK(p.minus.size() == 5);
  CHECK(p.zero.empty());
  CHECK(p.plus.empty());
  p = vertex_partition(c1, {1});
  CHECK(p.minus == std::vector<int>{1, 3});
  CHECK(p.plus == std::vector<int>{0, 2, 4});
  CHECK(p.zero.empty());
  for (const char* t : {"A2", "A3", "G2"}) {
    auto cox = CoxeterData::parse(t);
    RootSet all;
    for (int a = 1; a <= cox.rank; ++a) all.insert(a);
    CHECK(vertex_partition(coxeter_graph(cox), all).minus.empty());
  }
}

TEST_CASE("projectors") {
  for (const char* t : {"A2", "A3"}) {
    auto cox = CoxeterData::parse(t);
    auto g = coxeter_graph(cox);
    for (const auto& A : all_subsets(cox.rank)) {
      auto q = projector_Q(g, cox, A), r = projector_R(g, cox, A);
      CHECK(idempotent_check(q).is_zero());
      CHECK(idempotent_check(r).is_zero());
    }
  }
  auto file = parse_wcell(g2_text());
  for (const auto& c : file.cells)
    for (const auto& A : all_subsets(2)) {
      auto part = vertex_partition(c, A);
      auto q = projector_Q(c, g2(), A), r = projector_R(c, g2(), A);
      CHECK(r.trace() == static_cast<int>(part.minus.size()));
      // V(A,+) as displayed, without the precedence given to V(A,-) at A = {}.
      int disjoint = 0;
      for (const auto& t : c.tau) disjoint += std::none_of(A.begin(), A.end(), [&](int a) { return t.count(a) > 0; });
      CHECK(rank(q) == disjoint);
      // Image of R(A) is span V(A,-); W(A) acts on it by sign.
      CHECK(rank(r) == static_cast<int>(part.minus.size()));
      for (int v : part.minus)
        for (int a : A) CHECK(c.tau[v].count(a) == 1);
      for (int v : part.minus)
        for (int a : A) {
          auto s = simple_reflection_matrix(c, a);
          for (int i = 0; i < c.size(); ++i) CHECK(s(i, v) == (i == v ? -1 : 0));
        }
      // Sign occurs in W(A) exactly when some tau(v) contains A.
      bool some = false;
      for (const auto& t : c.tau) some = some || std::includes(t.begin(), t.end(), A.begin(), A.end());
      CHECK((r.trace() != 0) == some);
    }
}

TEST_CASE("tau subsets are realized by the rank of Q(complement) R(A)") {
  auto file = parse_wcell(g2_text());
  for (const auto& c : file.cells)
    for (const auto& A : all_subsets(2)) {
      auto t = tau_subset_realized(c, g2(), A);
      CHECK(t.count == count_matching(c, A));
      CHECK(t.rank == t.count);
      RootSet rest;
      for (int a = 1; a <= 2; ++a)
        if (!A.count(a)) rest.insert(a);
      auto q = projector_Q(c, g2(), rest), r = projector_R(c, g2(), A);
      CHECK((q * r).trace() == (r * q).trace());
      CHECK((q * r).trace() == t.trace);
    }
  auto t = tau_subset_realized(file.cells[3], g2(), {1, 2});
  CHECK(t.count == 1);
  CHECK(tau_subset_realized(file.cells[3], g2(), {1}).count == 0);
  // The trace of the product is not the count in general.
  auto c1 = tau_subset_realized(file.cells[1], g2(), {1});
  CHECK(c1.count == 2);
  CHECK(c1.trace == 1);
}

TEST_CASE("equal characters give equal tau counts") {
  auto file = parse_wcell(g2_text());
  std::vector<std::map<std::vector<std::string>, Rational>> chars;
  for (const auto& c : file.cells) chars.push_back(character(c, g2()));
  CHECK(chars[0].size() == 12);
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < chars.size(); ++j) {
      if (chars[i] != chars[j]) continue;
      for (const auto& A : all_subsets(2))
        CHECK(tau_subset_realized(file.cells[i], g2(), A).count == tau_subset_realized(file.cells[j], g2(), A).count);
    }
  // The two 5-vertex cells are not isomorphic modules.
  CHECK(chars[1] != chars[2]);
}

TEST_CASE("identify_special in type A") {
  for (int r = 1; r <= 4; ++r) {
    auto cox = CoxeterData::parse("A" + std::to_string(r));
    RootSet all;
    for (int a = 1; a <= r; ++a) all.insert(a);
    CHECK(std::get<Partition>(identify_special(TauSignature{{RootSet{}}}, cox)) == Partition{r + 1});
    CHECK(std::get<Partition>(identify_special(TauSignature{{all}}, cox)) == Partition(std::vector<int>(r + 1, 1)));
  }
  // Left cells of S_3: {e}, {s1, s2 s1}, {s2, s1 s2}, {w0}.
  auto a2 = CoxeterData::parse("A2");
  WeakWGraph two;
  two.ids = {0, 1};
  two.tau = {{1}, {2}};
  two.m[{0, 1}] = 1;
  two.m[{1, 0}] = 1;
  CHECK(validate(two, a2).ok);
  std::set<Partition> got;
  for (const auto& sig : {TauSignature{{RootSet{}}}, tau_signature(two), TauSignature{{RootSet{1, 2}}}})
    got.insert(std::get<Partition>(identify_special(sig, a2)));
  CHECK(got == std::set<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK_THROWS_AS(identify_special(TauSignature{{RootSet{}}}, g2()), DomainError);
}

TEST_CASE("identify_special names the reflection representation") {
  auto natural = [](const SignedPerm& g) {
    Rational t = 0;
    for (int j = 0; j < g.n(); ++j)
      if (g.target(j) == j) t += g.sign(j);
    return t;
  };
  for (int r = 2; r <= 4; ++r) {
    auto cox = CoxeterData::parse("A" + std::to_string(r));
    auto lam = std::get<Partition>(identify_special(tau_signature(coxeter_graph(cox)), cox));
    CHECK(lam == Partition{r, 1});
  }
  for (int r = 2; r <= 4; ++r) {
    auto cox = CoxeterData::parse("B" + std::to_string(r));
    auto v = std::get<IrrepB>(identify_special(tau_signature(coxeter_graph(cox)), cox));
    auto m = build_bn_irrep(v.lam, v.mu);
    for (const auto& g : enumerate_group(GroupTag::B, r).elements) REQUIRE(m.character(g) == natural(g));
  }
  for (int r = 3; r <= 4; ++r) {
    auto cox = CoxeterData::parse("D" + std::to_string(r));
    auto v = std::get<IrrepD>(identify_special(tau_signature(coxeter_graph(cox)), cox));
    auto m = build_dn_irrep(v);
    for (const auto& g : enumerate_group(GroupTag::D, r).elements) REQUIRE(m.character(g) == natural(g));
  }
}

TEST_CASE("subset helpers") {
  auto s = all_subsets(2);
  REQUIRE(s.size() == 4);
  CHECK(to_string(s[0]) == "{}");
  CHECK(to_string(s[1]) == "{1}");
  CHECK(to_string(s[3]) == "{1,2}");
  CHECK(to_string(TauSignature{{RootSet{1}, RootSet{2}}}) == "{{1},{2}}");
}
