#include "wgraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "labels.hpp"
#include "type_a.hpp"

namespace weylsig {

namespace {

constexpr std::size_t kGroupCap = 1000000;

std::vector<std::vector<int>> square(int n, int fill) { return std::vector<std::vector<int>>(n, std::vector<int>(n, fill)); }

void link(std::vector<std::vector<int>>& m, int i, int j, int order) { m[i][j] = m[j][i] = order; }

}  // namespace

CoxeterData CoxeterData::from_matrix(std::vector<std::vector<int>> m) {
  const int r = static_cast<int>(m.size());
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(m[i].size()) != r) throw DomainError("Coxeter matrix is not square");
    if (m[i][i] != 1) throw DomainError("Coxeter matrix diagonal must be 1");
    for (int j = 0; j < r; ++j)
      if (i != j && (m[i][j] < 2 || m[i][j] != m[j][i])) throw DomainError("Coxeter matrix must be symmetric with entries >= 2");
  }
  CoxeterData c;
  c.rank = r;
  c.m = std::move(m);
  return c;
}

CoxeterData CoxeterData::parse(const std::string& type) {
  static const std::regex re(R"(([ABCDGF])(\d+))");
  std::smatch mt;
  if (!std::regex_match(type, mt, re)) throw DomainError("unknown Coxeter type '" + type + "'");
  char f = mt[1].str()[0];
  int r = std::stoi(mt[2].str());
  if (f == 'C') f = 'B';
  if (r < 1 || r > 12) throw DomainError("rank out of range in '" + type + "'");
  auto m = square(r, 2);
  for (int i = 0; i < r; ++i) m[i][i] = 1;
  switch (f) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(m, i, i + 1, 3);
      break;
    case 'B':
      for (int i = 0; i + 1 < r; ++i) link(m, i, i + 1, i + 2 == r ? 4 : 3);
      break;
    case 'D':
      if (r < 2) throw DomainError("type D needs rank >= 2");
      for (int i = 0; i + 2 < r; ++i) link(m, i, i + 1, 3);
      if (r >= 3) link(m, r - 3, r - 1, 3);
      break;
    case 'G':
      if (r != 2) throw DomainError("type G has rank 2");
      link(m, 0, 1, 6);
      break;
    case 'F':
      if (r != 4) throw DomainError("type F has rank 4");
      link(m, 0, 1, 3);
      link(m, 1, 2, 4);
      link(m, 2, 3, 3);
      break;
  }
  CoxeterData c = from_matrix(std::move(m));
  c.family = f;
  return c;
}

std::string CoxeterData::name() const {
  if (family == 0) return "custom" + std::to_string(rank);
  return std::string(1, family) + std::to_string(rank);
}

std::vector<std::vector<int>> CoxeterData::cartan() const {
  auto a = square(rank, 0);
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) {
      int lo = 0, hi = 0;
      switch (m[i][j]) {
        case 2: break;
        case 3: lo = hi = -1; break;
        case 4: lo = -1, hi = -2; break;
        case 6: lo = -1, hi = -3; break;
        default: throw DomainError("Coxeter matrix is not crystallographic");
      }
      // alpha_1 is the short root of G2.
      if (family == 'G') std::swap(lo, hi);
      a[i][j] = lo;
      a[j][i] = hi;
    }
  return a;
}

Rational WeakWGraph::edge(int u, int v) const {
  auto it = m.find({u, v});
  return it == m.end() ? Rational(0) : it->second;
}

WeakWGraph coxeter_graph(const CoxeterData& cox) {
  WeakWGraph g;
  auto a = cox.cartan();
  for (int i = 0; i < cox.rank; ++i) {
    g.ids.push_back(i);
    g.tau.push_back({i + 1});
  }
  for (int i = 0; i < cox.rank; ++i)
    for (int j = 0; j < cox.rank; ++j)
      if (i != j && a[i][j] != 0) g.m[{i, j}] = a[i][j];
  return g;
}

RatMatrix simple_reflection_matrix(const WeakWGraph& g, int alpha) {
  const int n = g.size();
  RatMatrix s(n, n);
  for (int v = 0; v < n; ++v) {
    if (g.tau[v].count(alpha)) {
      s(v, v) = -1;
      continue;
    }
    s(v, v) = 1;
    for (int u = 0; u < n; ++u)
      if (g.tau[u].count(alpha)) s(u, v) -= g.edge(u, v);
  }
  return s;
}

namespace {

RatMatrix power(const RatMatrix& x, int k) {
  RatMatrix r = RatMatrix::identity(x.rows());
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

// W(A) in the root-basis reflection representation, with the module matrices carried along.
struct ParabolicAverage {
  RatMatrix plain, signed_;
};

ParabolicAverage average(const WeakWGraph& g, const CoxeterData& cox, const RootSet& A) {
  const int r = cox.rank;
  const auto a = cox.cartan();
  std::vector<int> gens(A.begin(), A.end());
  std::vector<std::vector<int>> root_mats;
  std::vector<RatMatrix> mod_mats;
  for (int i : gens) {
    if (i < 1 || i > r) throw DomainError("root index out of range");
    std::vector<int> s(static_cast<std::size_t>(r) * r, 0);
    for (int j = 0; j < r; ++j) {
      s[j * r + j] = 1;
      s[(i - 1) * r + j] -= a[i - 1][j];
    }
    root_mats.push_back(std::move(s));
    mod_mats.push_back(simple_reflection_matrix(g, i));
  }
  auto mul = [r](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> z(x.size(), 0);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k)
        if (x[i * r + k] != 0)
          for (int j = 0; j < r; ++j) z[i * r + j] += x[i * r + k] * y[k * r + j];
    return z;
  };
  struct Hash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t h = 0;
      for (int x : v) h = h * 1000003u + static_cast<std::size_t>(x + 7);
      return h;
    }
  };
  std::vector<int> id(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i) id[i * r + i] = 1;

  std::unordered_map<std::vector<int>, int, Hash> seen;  // element -> parity
  std::deque<std::pair<std::vector<int>, RatMatrix>> queue;
  seen[id] = 1;
  queue.emplace_back(id, RatMatrix::identity(g.size()));
  ParabolicAverage out{RatMatrix(g.size(), g.size()), RatMatrix(g.size(), g.size())};
  while (!queue.empty()) {
    auto [w, mw] = std::move(queue.front());
    queue.pop_front();
    const int sign = seen.at(w);
    out.plain = out.plain + mw;
    out.signed_ = sign > 0 ? out.signed_ + mw : out.signed_ - mw;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto next = mul(root_mats[k], w);
      if (seen.count(next)) continue;
      if (seen.size() >= kGroupCap) throw DomainError("parabolic subgroup exceeds element cap");
      seen[next] = -sign;
      queue.emplace_back(std::move(next), mod_mats[k] * mw);
    }
  }
  Rational inv = Rational(1) / Rational(static_cast<long>(seen.size()));
  out.plain = out.plain.scaled(inv);
  out.signed_ = out.signed_.scaled(inv);
  return out;
}

RootSet complement(const RootSet& A, int rank) {
  RootSet out;
  for (int i = 1; i <= rank; ++i)
    if (!A.count(i)) out.insert(i);
  return out;
}

}  // namespace

Validation validate(const WeakWGraph& g, const CoxeterData& cox) {
  Validation res;
  for (int v = 0; v < g.size(); ++v)
    for (int x : g.tau[v])
      if (x < 1 || x > cox.rank) {
        res.ok = false;
        res.violation = "vertex " + std::to_string(g.ids[v]) + " has tau outside 1.." + std::to_string(cox.rank);
        return res;
      }
  std::vector<RatMatrix> s;
  for (int i = 1; i <= cox.rank; ++i) s.push_back(simple_reflection_matrix(g, i));
  const RatMatrix id = RatMatrix::identity(g.size());
  for (int i = 0; i < cox.rank; ++i)
    if (!(s[i] * s[i] == id)) {
      res.ok = false;
      res.violation = "s_" + std::to_string(i + 1) + "^2 != 1";
      return res;
    }
  for (int i = 0; i < cox.rank; ++i)
    for (int j = i + 1; j < cox.rank; ++j)
      if (!(power(s[i] * s[j], cox.m[i][j]) == id)) {
        res.ok = false;
        res.violation = "(s_" + std::to_string(i + 1) + " s_" + std::to_string(j + 1) + ")^" + std::to_string(cox.m[i][j]) + " != 1";
        return res;
      }
  return res;
}

VertexPartition vertex_partition(const WeakWGraph& g, const RootSet& A) {
  VertexPartition p;
  for (int v = 0; v < g.size(); ++v) {
    const RootSet& t = g.tau[v];
    bool inside = std::includes(t.begin(), t.end(), A.begin(), A.end());
    bool meets = std::any_of(A.begin(), A.end(), [&](int a) { return t.count(a) > 0; });
    if (inside)
      p.minus.push_back(v);
    else if (meets)
      p.zero.push_back(v);
    else
      p.plus.push_back(v);
  }
  return p;
}

RatMatrix projector_Q(const WeakWGraph& g, const CoxeterData& cox, const RootSet& A) { return average(g, cox, A).plain; }

RatMatrix projector_R(const WeakWGraph& g, const CoxeterData& cox, const RootSet& A) { return average(g, cox, A).signed_; }

TauRealization tau_subset_realized(const WeakWGraph& g, const CoxeterData& cox, const RootSet& A) {
  TauRealization t;
  for (const RootSet& x : g.tau)
    if (x == A) ++t.count;
  RatMatrix prod = projector_Q(g, cox, complement(A, cox.rank)) * projector_R(g, cox, A);
  t.rank = rank(prod);
  t.trace = prod.trace();
  if (t.rank != t.count) throw std::logic_error("rank of Q(D-A)R(A) differs from the tau count");
  return t;
}

TauSignature tau_signature(const WeakWGraph& g) {
  TauSignature s;
  s.subsets.insert(g.tau.begin(), g.tau.end());
  return s;
}

ParseError::ParseError(int line_no, const std::string& what)
    : DomainError("line " + std::to_string(line_no) + ": " + what), line(line_no) {}

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

struct PendingVertex {
  int global = 0;
  RootSet tau;
  std::vector<std::pair<int, Rational>> targets;
  int line = 0;
};

}  // namespace

WCellFile parse_wcell(const std::string& text) {
  static const std::regex blank(R"(\s*)");
  static const std::regex rule(R"(\s*-+\s*)");
  static const std::regex comment(R"(\s*//\s*(.*?)\s*)");
  static const std::regex cell_header(R"(cell #(\d+):)");
  static const std::regex listing(R"(\s*#(\d+)=\{([\d,\s]*)\}\s*)");
  static const std::regex induced(R"(\s*#(\d+):(->)?([#\d,\s]*)\.\s*)");
  static const std::regex vertex(R"(\s*(\d+)\[(\d+)\]:\s*\{([\d,\s]*)\}\s*(?:-->\s*(\S.*?))?\s*)");
  static const std::regex target(R"((\d+)(?:\((-?\d+)\))?)");
  static const std::regex cell_ref(R"(#(\d+))");

  enum class Section { None, Listing, Induced, Cells };
  Section section = Section::None;
  std::map<int, std::pair<std::vector<int>, int>> listed;  // cell -> (globals, line)
  std::map<int, std::vector<int>> arrows;
  std::map<int, std::vector<PendingVertex>> cells;
  int current = -1;

  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch mt;
    if (std::regex_match(line, blank) || std::regex_match(line, rule)) continue;
    if (std::regex_match(line, mt, comment)) {
      const std::string body = mt[1].str();
      std::smatch ch;
      if (body.rfind("Cells and their vertices", 0) == 0) {
        section = Section::Listing;
      } else if (body.rfind("Induced graph on cells", 0) == 0) {
        section = Section::Induced;
      } else if (body.rfind("Individual cells", 0) == 0) {
        section = Section::Cells;
      } else if (std::regex_match(body, ch, cell_header)) {
        if (section != Section::Cells) throw ParseError(no, "cell header outside the individual cells section");
        current = std::stoi(ch[1].str());
        if (cells.count(current)) throw ParseError(no, "cell #" + ch[1].str() + " appears twice");
        cells[current];
      }
      continue;
    }
    switch (section) {
      case Section::Listing: {
        if (!std::regex_match(line, mt, listing)) throw ParseError(no, "expected '#<cell>={<vertices>}'");
        std::vector<int> ids;
        for (const auto& s : split_commas(mt[2].str()))
          if (!s.empty()) ids.push_back(std::stoi(s));
        listed[std::stoi(mt[1].str())] = {ids, no};
        break;
      }
      case Section::Induced: {
        if (!std::regex_match(line, mt, induced)) throw ParseError(no, "expected '#<cell>:->#<cell>,...'.");
        auto& out = arrows[std::stoi(mt[1].str())];
        const std::string body = mt[3].str();
        if (!mt[2].matched && body.find_first_not_of(" \t") != std::string::npos) throw ParseError(no, "missing '->'");
        for (const auto& s : split_commas(body)) {
          if (s.empty() && !mt[2].matched) continue;
          std::smatch r;
          if (!std::regex_match(s, r, cell_ref)) throw ParseError(no, "bad cell reference '" + s + "'");
          out.push_back(std::stoi(r[1].str()));
        }
        break;
      }
      case Section::Cells: {
        if (current < 0) throw ParseError(no, "vertex line before any cell header");
        if (!std::regex_match(line, mt, vertex)) throw ParseError(no, "expected '<local>[<global>]: {<roots>} --> <targets>'");
        auto& verts = cells[current];
        if (std::stoi(mt[1].str()) != static_cast<int>(verts.size()))
          throw ParseError(no, "local vertex index out of sequence");
        PendingVertex pv;
        pv.global = std::stoi(mt[2].str());
        pv.line = no;
        for (const auto& s : split_commas(mt[3].str())) {
          if (s.empty()) continue;
          int r = std::stoi(s);
          if (r < 1) throw ParseError(no, "roots are numbered from 1");
          pv.tau.insert(r);
        }
        if (mt[4].matched)
          for (const auto& s : split_commas(mt[4].str())) {
            std::smatch t;
            if (!std::regex_match(s, t, target)) throw ParseError(no, "bad edge target '" + s + "'");
            Rational w = t[2].matched ? Rational(std::stoi(t[2].str())) : Rational(1);
            pv.targets.emplace_back(std::stoi(t[1].str()), w);
          }
        verts.push_back(std::move(pv));
        break;
      }
      case Section::None:
        throw ParseError(no, "content before any section header");
    }
  }

  WCellFile out;
  int expected = 0;
  for (auto& [idx, verts] : cells) {
    if (idx != expected++) throw ParseError(no, "cells must be numbered 0, 1, 2, ...");
    WeakWGraph g;
    const int n = static_cast<int>(verts.size());
    for (const auto& v : verts) {
      g.ids.push_back(v.global);
      g.tau.push_back(v.tau);
    }
    for (int u = 0; u < n; ++u)
      for (const auto& [t, w] : verts[u].targets) {
        if (t < 0 || t >= n) throw ParseError(verts[u].line, "edge target " + std::to_string(t) + " is not a vertex of this cell");
        g.m[{u, t}] = w;
      }
    if (auto it = listed.find(idx); it != listed.end()) {
      auto want = it->second.first, got = g.ids;
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      if (want != got) throw ParseError(it->second.second, "cell #" + std::to_string(idx) + " listing disagrees with its vertex lines");
    }
    out.cells.push_back(std::move(g));
  }
  out.induced.resize(out.cells.size());
  for (const auto& [from, to] : arrows)
    if (from >= 0 && from < static_cast<int>(out.cells.size())) out.induced[from] = to;
  return out;
}

std::string label_text(const ClassicalLabel& label) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Partition>)
          return to_string(x);
        else
          return label_text(x);
      },
      label);
}

namespace {

// Coordinate blocks joined by the roots in A, for the classical numbering.
struct Blocks {
  std::vector<int> sizes;  // all blocks, including singletons
  int last = 0;            // size of the block holding the last coordinate
};

Blocks blocks(int coords, const std::vector<std::pair<int, int>>& joins) {
  std::vector<int> parent(coords);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [x, y] : joins) parent[find(x)] = find(y);
  std::map<int, int> count;
  for (int i = 0; i < coords; ++i) ++count[find(i)];
  Blocks b;
  b.last = count[find(coords - 1)];
  bool skipped = false;
  for (auto [root, c] : count) {
    if (!skipped && root == find(coords - 1)) {
      skipped = true;
      continue;
    }
    b.sizes.push_back(c);
  }
  return b;
}

Composition appended(Composition c, int x) {
  c.push_back(x);
  return c;
}

std::set<RootSet> lower_closure(const TauSignature& sig) {
  std::set<RootSet> out;
  for (const RootSet& t : sig.subsets) {
    std::vector<int> v(t.begin(), t.end());
    for (unsigned mask = 0; mask < (1u << v.size()); ++mask) {
      RootSet s;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (mask & (1u << i)) s.insert(v[i]);
      out.insert(s);
    }
  }
  return out;
}

}  // namespace

ClassicalLabel identify_special(const TauSignature& sig, const CoxeterData& cox) {
  if (!cox.classical()) throw DomainError("identify_special needs a classical type");
  if (sig.subsets.empty()) throw DomainError("empty tau-signature");
  const int r = cox.rank;
  const auto support = lower_closure(sig);
  for (const RootSet& A : support)
    if (!A.empty() && (*A.begin() < 1 || *A.rbegin() > r)) throw DomainError("tau-signature mentions a root outside 1.." + std::to_string(r));
  const auto fail = [] { return DomainError("no irreducible has this sign signature support"); };

  if (cox.family == 'A') {
    const int n = r + 1;
    SignSignatureA s;
    s.rank = n;
    for (const Partition& p : partitions_of(n)) s.mult[p] = 0;
    for (const RootSet& A : support) {
      std::vector<std::pair<int, int>> j;
      for (int i : A) j.emplace_back(i - 1, i);
      Blocks b = blocks(n, j);
      b.sizes.push_back(b.last);
      s.mult[sort_to_partition(b.sizes)] = 1;
    }
    Partition lam = recover_a(s);
    auto check = sign_signature_a(lam);
    for (const auto& [p, m] : check.mult)
      if ((m > 0) != (s.at(p) > 0)) throw fail();
    return lam;
  }
  if (cox.family == 'B') {
    SignSignatureB s;
    s.rank = r;
    for (const auto& p : enumerate_parabolics_b(r, false)) s.mult[p] = 0;
    for (const RootSet& A : support) {
      std::vector<std::pair<int, int>> j;
      for (int i : A)
        if (i < r) j.emplace_back(i - 1, i);
      Blocks b = blocks(r, j);
      if (A.count(r))
        s.mult[ParabolicB(b.sizes, {b.last})] = 1;
      else
        s.mult[ParabolicB(appended(b.sizes, b.last), {})] = 1;
    }
    try {
      return recover_b(s, Match::Support);
    } catch (const DomainError&) {
      throw fail();
    }
  }
  SignSignatureD s;
  for (const auto& p : enumerate_parabolics_d(r)) s[p] = 0;
  for (const RootSet& A : support) {
    std::vector<std::pair<int, int>> j;
    for (int i : A) j.emplace_back(i < r ? i - 1 : r - 2, i < r ? i : r - 1);
    Blocks b = blocks(r, j);
    const bool left = A.count(r - 1) > 0, right = A.count(r) > 0;
    ParabolicD p = left && right ? ParabolicD::bar(b.sizes, b.last)
                   : right       ? ParabolicD::minus(appended(b.sizes, b.last))
                                 : ParabolicD::plus(appended(b.sizes, b.last));
    s[p] = 1;
  }
  try {
    return recover_d(s, r, Match::Support);
  } catch (const DomainError&) {
    throw fail();
  }
}

std::vector<RootSet> all_subsets(int rank) {
  std::vector<RootSet> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    RootSet s;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) s.insert(i + 1);
    out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](const RootSet& x, const RootSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

std::string to_string(const RootSet& s) {
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::string to_string(const TauSignature& s) {
  std::string out = "{";
  bool first = true;
  for (const RootSet& x : s.subsets) {
    if (!first) out += ",";
    out += to_string(x);
    first = false;
  }
  return out + "}";
}

}  // namespace weylsig
