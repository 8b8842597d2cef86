#include "oracle.hpp"

#include <algorithm>
#include <mutex>

#include "labels.hpp"
#include "parallel.hpp"
#include "tableaux.hpp"
#include "type_a.hpp"

namespace weylsig {

namespace {

std::vector<int> perm_of(const SignedPerm& g) {
  std::vector<int> p(g.n());
  for (int j = 0; j < g.n(); ++j) p[j] = g.target(j);
  return p;
}

void standard_tableaux(const Partition& lam, std::vector<int>& rows, std::vector<int>& fill,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(rows.size()) == lam.size()) {
    out.push_back(rows);
    return;
  }
  for (int r = 0; r < lam.length(); ++r) {
    if (fill[r] >= lam[r]) continue;
    if (r > 0 && fill[r] >= fill[r - 1]) continue;
    ++fill[r];
    rows.push_back(r);
    standard_tableaux(lam, rows, fill, out);
    rows.pop_back();
    --fill[r];
  }
}

}  // namespace

SnIrrep::SnIrrep(const Partition& lam) : lam_(lam) {
  const int m = lam.size();
  if (m > kOracleSnCap) throw DomainError("oracle S_n cap exceeded");
  std::vector<std::vector<int>> tabs;
  std::vector<int> rows, fill(lam.length(), 0);
  standard_tableaux(lam, rows, fill, tabs);
  dim_ = static_cast<int>(tabs.size());
  std::map<std::vector<int>, int> index;
  for (int t = 0; t < dim_; ++t) index[tabs[t]] = t;

  // Column of each entry, from the row word.
  std::vector<std::vector<int>> cols(dim_, std::vector<int>(m));
  for (int t = 0; t < dim_; ++t) {
    std::vector<int> len(lam.length(), 0);
    for (int k = 0; k < m; ++k) cols[t][k] = len[tabs[t][k]]++;
  }
  for (int i = 0; i + 1 < m; ++i) {
    RatMatrix g(dim_, dim_);
    for (int t = 0; t < dim_; ++t) {
      int r1 = tabs[t][i], r2 = tabs[t][i + 1];
      int c1 = cols[t][i], c2 = cols[t][i + 1];
      if (r1 == r2) {
        g(t, t) = 1;
      } else if (c1 == c2) {
        g(t, t) = -1;
      } else {
        Rational a = Rational(1) / Rational((c2 - r2) - (c1 - r1));
        std::vector<int> sw = tabs[t];
        std::swap(sw[i], sw[i + 1]);
        int u = index.at(sw);
        g(t, t) = a;
        g(u, t) = r1 < r2 ? Rational(1) : Rational(1) - a * a;
      }
    }
    gens_.push_back(std::move(g));
  }

  // Characters on all of S_m, breadth first with only two layers of matrices alive.
  std::vector<int> id(m);
  for (int j = 0; j < m; ++j) id[j] = j;
  std::vector<std::pair<std::vector<int>, RatMatrix>> layer{{id, RatMatrix::identity(dim_)}};
  chars_[id] = dim_;
  while (!layer.empty()) {
    std::vector<std::pair<std::vector<int>, RatMatrix>> next;
    for (const auto& [p, mat] : layer)
      for (int i = 0; i + 1 < m; ++i) {
        std::vector<int> q(p);
        for (int& x : q) x = x == i ? i + 1 : (x == i + 1 ? i : x);
        if (chars_.count(q)) continue;
        RatMatrix qm = gens_[i] * mat;
        chars_[q] = qm.trace();
        next.emplace_back(std::move(q), std::move(qm));
      }
    layer.swap(next);
  }
}

RatMatrix SnIrrep::matrix(const std::vector<int>& perm) const {
  std::vector<int> p(perm);
  RatMatrix m = RatMatrix::identity(dim_);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j + 1 < static_cast<int>(p.size()); ++j)
      if (p[j] > p[j + 1]) {
        std::swap(p[j], p[j + 1]);
        m = gens_[j] * m;
        moved = true;
      }
  }
  return m;
}

const Rational& SnIrrep::character(const std::vector<int>& perm) const { return chars_.at(perm); }

const SnIrrep& sn_irrep(const Partition& lam) {
  static std::mutex mu;
  static std::map<Partition, std::unique_ptr<SnIrrep>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[lam];
  if (!slot) slot = std::make_unique<SnIrrep>(lam);
  return *slot;
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lens;
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if (seen[j]) continue;
    int len = 0;
    for (int k = static_cast<int>(j); !seen[k]; k = perm[k]) {
      seen[k] = true;
      ++len;
    }
    lens.push_back(len);
  }
  return sort_to_partition(lens);
}

Rational mn_character(const Partition& lam, const Partition& rho) {
  if (lam.size() != rho.size()) throw DomainError("character arguments have different sizes");
  if (rho.empty()) return 1;
  const int l = lam.length();
  std::vector<int> beads(l);
  for (int i = 0; i < l; ++i) beads[i] = lam[i] + (l - 1 - i);
  const int r = rho[rho.length() - 1];
  Partition rest(std::vector<int>(rho.parts().begin(), rho.parts().end() - 1));
  Rational sum = 0;
  for (int i = 0; i < l; ++i) {
    int b = beads[i], t = b - r;
    if (t < 0 || std::find(beads.begin(), beads.end(), t) != beads.end()) continue;
    int between = 0;
    for (int x : beads)
      if (x > t && x < b) ++between;
    std::vector<int> nb(beads);
    nb[i] = t;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> parts(l);
    for (int k = 0; k < l; ++k) parts[k] = nb[k] - (l - 1 - k);
    Rational c = mn_character(Partition(parts), rest);
    sum += between % 2 ? -c : c;
  }
  return sum;
}

InducedModule::InducedModule(std::vector<SignedPerm> transversal, SubgroupRep sub)
    : transversal_(std::move(transversal)), sub_(std::move(sub)) {}

RatMatrix InducedModule::matrix(const SignedPerm& g) const {
  const int k = static_cast<int>(transversal_.size()), d = sub_.dim;
  RatMatrix m(k * d, k * d);
  for (int j = 0; j < k; ++j) {
    SignedPerm gt = g * transversal_[j];
    bool found = false;
    for (int i = 0; i < k && !found; ++i) {
      SignedPerm h = transversal_[i].inverse() * gt;
      if (!sub_.contains(h)) continue;
      RatMatrix b = sub_.matrix(h);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m(i * d + r, j * d + c) = b(r, c);
      found = true;
    }
    if (!found) throw DomainError("transversal does not cover the group");
  }
  return m;
}

Rational InducedModule::character(const SignedPerm& g) const {
  Rational s = 0;
  for (const auto& t : transversal_) {
    SignedPerm h = t.inverse() * g * t;
    if (sub_.contains(h)) s += sub_.character(h);
  }
  return s;
}

std::vector<SignedPerm> coset_transversal(const std::vector<SignedPerm>& candidates,
                                          const std::function<bool(const SignedPerm&)>& contains) {
  std::vector<SignedPerm> out;
  for (const auto& c : candidates) {
    bool fresh = true;
    for (const auto& t : out)
      if (contains(t.inverse() * c)) {
        fresh = false;
        break;
      }
    if (fresh) out.push_back(c);
  }
  return out;
}

std::vector<SignedPerm> shuffles(int n, int i) {
  std::vector<SignedPerm> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + i, true);
  do {
    SignedPerm g;
    g.img.resize(n);
    int a = 0, b = i;
    for (int x = 0; x < n; ++x) {
      if (mask[x])
        g.img[a++] = x + 1;
      else
        g.img[b++] = x + 1;
    }
    out.push_back(std::move(g));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

namespace {

void fill_generators(ExplicitModule& m) {
  m.gens = coxeter_generators(m.tag, m.n);
  m.gen_matrices.clear();
  for (const auto& g : m.gens) m.gen_matrices.push_back(m.matrix(g));
}

// V_lam ⊗ V_mu ⊗ (product of signs on the second block), on block-preserving elements.
SubgroupRep block_rep(const Partition& lam, const Partition& mu) {
  const int i = lam.size();
  const SnIrrep& a = sn_irrep(lam);
  const SnIrrep& b = sn_irrep(mu);
  auto split = [i](const SignedPerm& h, std::vector<int>& p1, std::vector<int>& p2, int& sgn) {
    p1.resize(i);
    p2.resize(h.n() - i);
    sgn = 1;
    for (int j = 0; j < h.n(); ++j) {
      if (j < i)
        p1[j] = h.target(j);
      else {
        p2[j - i] = h.target(j) - i;
        sgn *= h.sign(j);
      }
    }
  };
  SubgroupRep r;
  r.dim = a.dim() * b.dim();
  r.contains = [i](const SignedPerm& h) {
    for (int j = 0; j < i; ++j)
      if (h.target(j) >= i) return false;
    return true;
  };
  r.matrix = [&a, &b, split](const SignedPerm& h) {
    std::vector<int> p1, p2;
    int s;
    split(h, p1, p2, s);
    return kron(a.matrix(p1), b.matrix(p2)).scaled(s);
  };
  r.character = [&a, &b, split](const SignedPerm& h) {
    std::vector<int> p1, p2;
    int s;
    split(h, p1, p2, s);
    return a.character(p1) * b.character(p2) * s;
  };
  return r;
}

ExplicitModule from_induced(GroupTag tag, int n, std::string label, std::shared_ptr<InducedModule> ind) {
  ExplicitModule m;
  m.tag = tag;
  m.n = n;
  m.dim = ind->dim();
  m.label = std::move(label);
  m.matrix = [ind](const SignedPerm& g) { return ind->matrix(g); };
  m.character = [ind](const SignedPerm& g) { return ind->character(g); };
  fill_generators(m);
  return memoize(std::move(m));
}

}  // namespace

ExplicitModule build_sn_irrep(const Partition& lam) {
  const SnIrrep& s = sn_irrep(lam);
  ExplicitModule m;
  m.tag = GroupTag::A;
  m.n = lam.size();
  m.dim = s.dim();
  m.label = to_string(lam);
  m.matrix = [&s](const SignedPerm& g) { return s.matrix(perm_of(g)); };
  m.character = [&s](const SignedPerm& g) { return s.character(perm_of(g)); };
  fill_generators(m);
  return m;
}

ExplicitModule build_bn_irrep(const Partition& lam, const Partition& mu) {
  const int n = lam.size() + mu.size();
  auto ind = std::make_shared<InducedModule>(shuffles(n, lam.size()), block_rep(lam, mu));
  return from_induced(GroupTag::B, n, label_text(IrrepB{lam, mu}), ind);
}

ExplicitModule build_dn_irrep(const IrrepD& label) {
  const int n = label.rank();
  if (!label.split) {
    auto ind = std::make_shared<InducedModule>(shuffles(n, label.lam.size()), block_rep(label.lam, label.mu));
    return from_induced(GroupTag::D, n, label_text(label), ind);
  }
  const int q = n / 2;
  const SnIrrep& v = sn_irrep(label.lam);
  const int f = v.dim();
  SubgroupRep inner = block_rep(label.lam, label.lam);

  SignedPerm sigma;
  sigma.img.resize(n);
  for (int j = 0; j < n; ++j) sigma.img[j] = (j + q) % n + 1;
  auto in_q = [q](const SignedPerm& h) {
    bool keep = true, swap = true;
    for (int j = 0; j < q; ++j) {
      if (h.target(j) >= q) keep = false;
      if (h.target(j) < q) swap = false;
    }
    return keep || swap;
  };
  auto m = std::make_shared<InducedModule>(std::vector<SignedPerm>{SignedPerm::identity(n), sigma}, inner);

  // phi commutes with the first-factor action: phi ρ(A) = ρ(A) phi.
  RatMatrix phi = RatMatrix::identity(f);
  if (q >= 2) {
    RatMatrix sys((q - 1) * f * f, f * f);
    for (int gi = 0; gi + 1 < q; ++gi) {
      const RatMatrix& g = v.generator(gi);
      for (int r = 0; r < f; ++r)
        for (int c = 0; c < f; ++c) {
          int row = (gi * f + r) * f + c;
          for (int k = 0; k < f; ++k) {
            sys(row, r * f + k) += g(k, c);
            sys(row, k * f + c) -= g(r, k);
          }
        }
    }
    RatMatrix ns = nullspace(sys);
    if (ns.cols() == 0) throw DomainError("no intertwiner found");
    Rational lead = 0;
    for (int x = 0; x < f * f && lead == 0; ++x) lead = ns(x, 0);
    for (int r = 0; r < f; ++r)
      for (int c = 0; c < f; ++c) phi(r, c) = ns(r * f + c, 0) / lead;
  }
  RatMatrix phi_inv = inverse(phi);

  const int sign = label.sign == Sign::Plus ? 1 : -1;
  auto basis = std::make_shared<RatMatrix>(2 * f * f, f * f);
  for (int a = 0; a < f; ++a)
    for (int b = 0; b < f; ++b) {
      int col = a * f + b;
      (*basis)(col, col) = 1;
      for (int x = 0; x < f; ++x)
        for (int y = 0; y < f; ++y) (*basis)(f * f + x * f + y, col) = sign * phi_inv(x, b) * phi(y, a);
    }
  auto restrict_u = [m, basis, f](const SignedPerm& h) {
    RatMatrix full = (*m).matrix(h) * (*basis);
    RatMatrix top(f * f, f * f);
    for (int r = 0; r < f * f; ++r)
      for (int c = 0; c < f * f; ++c) top(r, c) = full(r, c);
    return top;
  };
  // U must be stable under a generating set of the stabilizer.
  std::vector<SignedPerm> qgens{sigma};
  for (int j = 0; j + 1 < n; ++j) {
    if (j + 1 != q) qgens.push_back(SignedPerm::transposition(n, j));
    qgens.push_back(SignedPerm::sign_change(n, j) * SignedPerm::sign_change(n, j + 1));
  }
  for (const auto& h : qgens)
    if (!((*m).matrix(h) * (*basis) == (*basis) * restrict_u(h))) throw DomainError("split subspace is not stable");

  SubgroupRep urep;
  urep.dim = f * f;
  urep.contains = in_q;
  urep.matrix = restrict_u;
  urep.character = [restrict_u](const SignedPerm& h) { return restrict_u(h).trace(); };
  auto outer = std::make_shared<InducedModule>(coset_transversal(shuffles(n, q), in_q), urep);
  return from_induced(GroupTag::D, n, label_text(label), outer);
}

ExplicitModule memoize(ExplicitModule m) {
  auto cache = std::make_shared<SignedPermMap<Rational>>();
  auto inner = m.character;
  m.character = [cache, inner](const SignedPerm& g) {
    auto it = cache->find(g);
    if (it != cache->end()) return it->second;
    Rational v = inner(g);
    cache->emplace(g, v);
    return v;
  };
  return m;
}

bool validate_relations(const ExplicitModule& m, std::string* why) {
  const int k = static_cast<int>(m.gens.size());
  RatMatrix id = RatMatrix::identity(m.dim);
  for (int i = 0; i < k; ++i) {
    if (!(m.gen_matrices[i] * m.gen_matrices[i] == id)) {
      if (why) *why = "generator " + std::to_string(i) + " does not square to 1";
      return false;
    }
    for (int j = i + 1; j < k; ++j) {
      SignedPerm st = m.gens[i] * m.gens[j], p = st;
      int order = 1;
      while (!p.is_identity()) {
        p = p * st;
        ++order;
      }
      RatMatrix mm = m.gen_matrices[i] * m.gen_matrices[j], pw = mm;
      for (int e = 1; e < order; ++e) pw = pw * mm;
      if (!(pw == id)) {
        if (why) *why = "relation (s" + std::to_string(i) + " s" + std::to_string(j) + ")^" + std::to_string(order) + " fails";
        return false;
      }
    }
  }
  return true;
}

bool character_is_class_function(const ExplicitModule& m, const Group& g) {
  for (const auto& cls : g.classes) {
    Rational c = m.character(g.elements[cls[0]]);
    for (int x : cls)
      if (m.character(g.elements[x]) != c) return false;
  }
  return true;
}

namespace {

BigInt average(const ExplicitModule& m, const std::vector<SignedPerm>& gens, bool with_det) {
  auto h = generate(gens, m.n);
  Rational s = 0;
  for (const auto& x : h) {
    Rational c = m.character(x);
    s += with_det && x.det() < 0 ? -c : c;
  }
  s /= static_cast<long>(h.size());
  if (denominator(s) != 1 || s < 0) throw DomainError("non-integral multiplicity: invalid module");
  return numerator(s);
}

}  // namespace

BigInt oracle_sign_mult(const ExplicitModule& m, const std::vector<SignedPerm>& subgroup_gens) {
  return average(m, subgroup_gens, true);
}

BigInt oracle_trivial_mult(const ExplicitModule& m, const std::vector<SignedPerm>& subgroup_gens) {
  return average(m, subgroup_gens, false);
}

namespace {

SignedPerm block(const SignedPerm& g, int start, int len) {
  SignedPerm h;
  h.img.resize(len);
  for (int j = 0; j < len; ++j) {
    int t = g.target(start + j) - start;
    if (t < 0 || t >= len) throw DomainError("element does not preserve the block");
    h.img[j] = g.sign(start + j) * (t + 1);
  }
  return h;
}

SignedPerm shifted(const SignedPerm& g, int n, int start) {
  SignedPerm h = SignedPerm::identity(n);
  for (int j = 0; j < g.n(); ++j) h.img[start + j] = g.sign(j) * (g.target(j) + start + 1);
  return h;
}

}  // namespace

BigInt oracle_branch_mult(const ExplicitModule& m, int k, const ExplicitModule& left, const ExplicitModule& right) {
  const int n = m.n;
  if (k < 0 || k > n || left.n != k || right.n != n - k) throw DomainError("factor ranks do not match the split");
  if (left.tag != m.tag || right.tag != m.tag) throw DomainError("factor types do not match");
  std::vector<SignedPerm> gens;
  if (k > 0)
    for (const auto& g : coxeter_generators(m.tag, k)) gens.push_back(shifted(g, n, 0));
  if (n - k > 0)
    for (const auto& g : coxeter_generators(m.tag, n - k)) gens.push_back(shifted(g, n, k));
  Rational s = 0;
  auto h = generate(gens, n);
  for (const auto& x : h) s += m.character(x) * left.character(block(x, 0, k)) * right.character(block(x, k, n - k));
  s /= static_cast<long>(h.size());
  if (denominator(s) != 1 || s < 0) throw DomainError("non-integral multiplicity: invalid module");
  return numerator(s);
}

namespace {

void block_transpositions(int n, int start, int len, std::vector<SignedPerm>& out) {
  for (int j = start; j + 1 < start + len; ++j) out.push_back(SignedPerm::transposition(n, j));
}

}  // namespace

std::vector<SignedPerm> parabolic_generators_a(const Composition& parts) {
  const int n = total(parts);
  std::vector<SignedPerm> out;
  int start = 0;
  for (int p : parts) {
    block_transpositions(n, start, p, out);
    start += p;
  }
  return out;
}

std::vector<SignedPerm> parabolic_generators_b(const ParabolicB& p) {
  const int n = p.rank();
  std::vector<SignedPerm> out;
  int start = 0;
  for (int x : p.a) {
    block_transpositions(n, start, x, out);
    start += x;
  }
  for (int x : p.b) {
    block_transpositions(n, start, x, out);
    out.push_back(SignedPerm::sign_change(n, start + x - 1));
    start += x;
  }
  return out;
}

std::vector<SignedPerm> parabolic_generators_d(const ParabolicD& p) {
  const int n = p.rank();
  std::vector<SignedPerm> out;
  int start = 0;
  for (std::size_t k = 0; k < p.a.size(); ++k) {
    int x = p.a[k];
    bool last = k + 1 == p.a.size();
    if (p.kind == DKind::Minus && last) {
      block_transpositions(n, start, x - 1, out);
      out.push_back(SignedPerm::signed_swap(n, n - 2));
    } else {
      block_transpositions(n, start, x, out);
    }
    start += x;
  }
  if (p.kind == DKind::Bar) {
    block_transpositions(n, start, p.d, out);
    out.push_back(SignedPerm::signed_swap(n, n - 2));
  }
  return out;
}

std::vector<OracleCheckRow> oracle_check(GroupTag tag, int n, int workers) {
  std::vector<OracleCheckRow> rows;
  if (tag == GroupTag::A) {
    auto ps = partitions_of(n);
    auto irreps = partitions_of(n);
    rows.resize(irreps.size());
    parallel_for(static_cast<int>(irreps.size()), workers, [&](int i) {
      const Partition& lam = irreps[i];
      auto m = build_sn_irrep(lam);
      OracleCheckRow row{to_string(lam), {}, {}, {}};
      for (const auto& p : ps) {
        row.parabolics.push_back(to_string(p.parts()));
        row.formula.push_back(sign_mult_a(lam, p.parts()));
        row.oracle.push_back(oracle_sign_mult(m, parabolic_generators_a(p.parts())));
      }
      rows[i] = std::move(row);
    });
  } else if (tag == GroupTag::B) {
    auto ps = enumerate_parabolics_b(n, true);
    auto irreps = irreps_b(n);
    rows.resize(irreps.size());
    parallel_for(static_cast<int>(irreps.size()), workers, [&](int i) {
      const IrrepB& v = irreps[i];
      auto m = build_bn_irrep(v.lam, v.mu);
      OracleCheckRow row{label_text(v), {}, {}, {}};
      for (const auto& p : ps) {
        row.parabolics.push_back(label_text(p));
        row.formula.push_back(sign_mult_b(v, p));
        row.oracle.push_back(oracle_sign_mult(m, parabolic_generators_b(p)));
      }
      rows[i] = std::move(row);
    });
  } else {
    auto ps = enumerate_parabolics_d(n);
    auto irreps = irreps_d(n);
    rows.resize(irreps.size());
    parallel_for(static_cast<int>(irreps.size()), workers, [&](int i) {
      const IrrepD& v = irreps[i];
      auto m = build_dn_irrep(v);
      OracleCheckRow row{label_text(v), {}, {}, {}};
      for (const auto& p : ps) {
        row.parabolics.push_back(label_text(p));
        row.formula.push_back(sign_mult_d(v, p));
        row.oracle.push_back(oracle_sign_mult(m, parabolic_generators_d(p)));
      }
      rows[i] = std::move(row);
    });
  }
  return rows;
}

}  // namespace weylsig
