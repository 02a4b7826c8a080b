#include "ringforge/group.hpp"

#include <algorithm>
#include <bit>

namespace ringforge {

namespace {

std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

GroupPtr FiniteGroup::from_cayley_table(const std::vector<std::vector<std::size_t>>& table,
                                        std::size_t identity,
                                        std::vector<std::string> names,
                                        std::string group_name,
                                        std::map<std::string, std::size_t> aliases) {
  const std::size_t n = table.size();
  if (n == 0) raise(errc::no_identity, "empty table");
  if (n > kDefaultGroupBound)
    raise(errc::group_too_large,
          "order " + std::to_string(n) + " exceeds " + std::to_string(kDefaultGroupBound));
  for (std::size_t r = 0; r < n; ++r)
    if (table[r].size() != n)
      raise(errc::dimension_mismatch, "table row " + std::to_string(r) + " is not length " +
                                          std::to_string(n));

  // closure
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (table[r][c] >= n)
        raise(errc::not_closed, "entry at (" + std::to_string(r) + ", " + std::to_string(c) +
                                    ") is " + std::to_string(table[r][c]));

  // identity
  if (identity >= n) raise(errc::no_identity, "identity index out of range");
  for (std::size_t g = 0; g < n; ++g)
    if (table[identity][g] != g || table[g][identity] != g)
      raise(errc::no_identity,
            std::to_string(identity) + " does not act as identity on " + std::to_string(g));

  // associativity, all triples
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          raise(errc::not_associative, "(" + std::to_string(a) + ", " + std::to_string(b) +
                                           ", " + std::to_string(c) + ")");

  // two-sided inverses
  std::vector<std::size_t> inv(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t x = 0; x < n; ++x)
      if (table[g][x] == identity && table[x][g] == identity) {
        inv[g] = x;
        break;
      }
    if (inv[g] == n) raise(errc::no_inverse, "element " + std::to_string(g));
  }

  if (names.empty())
    for (std::size_t g = 0; g < n; ++g) names.push_back("g" + std::to_string(g));
  if (names.size() != n) raise(errc::dimension_mismatch, "names list does not match order");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->identity_ = identity;
  g->table_.resize(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) g->table_[r * n + c] = table[r][c];
  g->inverse_ = std::move(inv);
  g->names_ = std::move(names);
  g->aliases_ = std::move(aliases);
  g->group_name_ = std::move(group_name);
  return g;
}

std::size_t FiniteGroup::power(std::size_t g, long long k) const {
  if (k < 0) return power(inverse_[g], -k);
  std::size_t acc = identity_;
  std::size_t base = g;
  auto e = static_cast<unsigned long long>(k);
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::size_t FiniteGroup::element_order(std::size_t g) const {
  std::size_t x = g;
  std::size_t k = 1;
  while (x != identity_) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

std::size_t FiniteGroup::conjugate(std::size_t g, std::size_t by) const {
  return mul(mul(by, g), inverse_[by]);
}

std::optional<std::size_t> FiniteGroup::index_of(std::string_view name_or_alias) const {
  for (std::size_t g = 0; g < n_; ++g)
    if (names_[g] == name_or_alias) return g;
  auto it = aliases_.find(std::string(name_or_alias));
  if (it != aliases_.end()) return it->second;
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::same_structure(const FiniteGroup& other) const {
  return n_ == other.n_ && identity_ == other.identity_ && table_ == other.table_;
}

// --- presets -------------------------------------------------------------

GroupPtr preset_q8() {
  // elements a^i b^j at index i + 4j; b a = a^3 b and b^2 = a^2 give
  // (a^i b)(a^k b^l) = a^(i - k + 2l mod 4) b^(1 - l)
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          std::size_t exp_a, exp_b;
          if (j == 0) {
            exp_a = (i + k) % 4;
            exp_b = l;
          } else {
            exp_a = (i + 4 - k + (l == 1 ? 2 : 0)) % 4;
            exp_b = 1 - l;
          }
          t[i + 4 * j][k + 4 * l] = exp_a + 4 * exp_b;
        }
  std::vector<std::string> names = {"e", "a", "a^2", "a^3", "b", "a*b", "a^2*b", "a^3*b"};
  std::map<std::string, std::size_t> aliases = {
      {"i", 1}, {"-e", 2}, {"-i", 3}, {"j", 4}, {"k", 5}, {"-j", 6}, {"-k", 7}};
  return FiniteGroup::from_cayley_table(t, 0, std::move(names), "q8", std::move(aliases));
}

GroupPtr preset_cyclic(std::size_t n) {
  if (n == 0 || n > kDefaultGroupBound)
    raise(errc::group_too_large, "cyclic order " + std::to_string(n));
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0)
      names.push_back("e");
    else if (i == 1)
      names.push_back("g");
    else
      names.push_back("g^" + std::to_string(i));
  }
  return FiniteGroup::from_cayley_table(t, 0, std::move(names), "c_" + std::to_string(n));
}

GroupPtr preset_klein4() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return FiniteGroup::from_cayley_table(t, 0, {"e", "x", "y", "xy"}, "klein4");
}

GroupPtr preset(const std::string& name) {
  if (name == "q8") return preset_q8();
  if (name == "klein4") return preset_klein4();
  if (name == "trivial") return preset_cyclic(1);
  if (name.size() > 1 && name[0] == 'c') {
    std::size_t at = (name[1] == '_') ? 2 : 1;
    if (at < name.size() &&
        std::all_of(name.begin() + at, name.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return preset_cyclic(std::stoul(name.substr(at)));
  }
  raise(errc::unknown_preset, "'" + name + "' (known: q8, c_<n>, klein4, trivial)");
}

// --- subgroups -----------------------------------------------------------

std::vector<std::size_t> Subgroup::members() const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < parent->order(); ++g)
    if (contains(g)) out.push_back(g);
  return out;
}

std::string Subgroup::describe() const {
  std::string s = "{";
  bool first = true;
  for (std::size_t g : members()) {
    if (!first) s += ", ";
    s += parent->name(g);
    first = false;
  }
  return s + "}";
}

bool same_subgroup(const Subgroup& a, const Subgroup& b) {
  return a.mask == b.mask &&
         (a.parent == b.parent || a.parent->same_structure(*b.parent));
}

bool subgroup_subset(const Subgroup& inner, const Subgroup& outer) {
  return (inner.mask & ~outer.mask) == 0;
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  return {g, std::uint64_t{1} << g->identity(), 1};
}

Subgroup whole_group(const GroupPtr& g) {
  return {g, full_mask(g->order()), g->order()};
}

namespace {

std::uint64_t closure_mask(const FiniteGroup& g, std::uint64_t seed) {
  std::uint64_t mask = seed | (std::uint64_t{1} << g.identity());
  std::vector<std::size_t> mem;
  for (std::size_t x = 0; x < g.order(); ++x)
    if ((mask >> x) & 1) mem.push_back(x);
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t p : {g.mul(mem[i], mem[j]), g.mul(mem[j], mem[i])})
        if (!((mask >> p) & 1)) {
          mask |= std::uint64_t{1} << p;
          mem.push_back(p);
        }
  return mask;
}

Subgroup make_subgroup(const GroupPtr& g, std::uint64_t mask) {
  return {g, mask, static_cast<std::size_t>(std::popcount(mask))};
}

}  // namespace

Subgroup closure_subgroup(const GroupPtr& g, const std::vector<std::size_t>& gens) {
  std::uint64_t seed = 0;
  for (std::size_t x : gens) {
    if (x >= g->order()) raise(errc::not_a_subgroup, "generator index out of range");
    seed |= std::uint64_t{1} << x;
  }
  return make_subgroup(g, closure_mask(*g, seed));
}

Subgroup subgroup_from_mask(const GroupPtr& g, std::uint64_t mask) {
  if (mask >> g->order() || closure_mask(*g, mask) != mask || mask == 0)
    raise(errc::not_a_subgroup, "member set is not multiplicatively closed");
  return make_subgroup(g, mask);
}

std::vector<Subgroup> subgroups(const GroupPtr& g, std::size_t max_order) {
  const std::size_t n = g->order();
  if (n > max_order || n > 64)
    raise(errc::group_too_large, "order " + std::to_string(n) + " exceeds bound " +
                                     std::to_string(std::min<std::size_t>(max_order, 64)));
  std::vector<std::uint64_t> known = {closure_mask(*g, 0)};
  std::vector<std::uint64_t> work = known;
  auto seen = [&known](std::uint64_t m) {
    return std::find(known.begin(), known.end(), m) != known.end();
  };
  while (!work.empty()) {
    std::uint64_t s = work.back();
    work.pop_back();
    for (std::size_t x = 0; x < n; ++x) {
      if ((s >> x) & 1) continue;
      std::uint64_t t = closure_mask(*g, s | (std::uint64_t{1} << x));
      if (!seen(t)) {
        known.push_back(t);
        work.push_back(t);
      }
    }
  }
  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (std::uint64_t m : known) out.push_back(make_subgroup(g, m));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order != b.order ? a.order < b.order : a.mask < b.mask;
  });
  return out;
}

SubgroupProperties subgroup_properties(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  SubgroupProperties out;
  const auto mem = h.members();

  out.abelian = true;
  for (std::size_t a : mem)
    for (std::size_t b : mem)
      if (g.mul(a, b) != g.mul(b, a)) {
        out.abelian = false;
        break;
      }

  for (std::size_t a : mem) {
    std::uint64_t cyc = 0;
    std::size_t x = a;
    do {
      cyc |= std::uint64_t{1} << x;
      x = g.mul(x, a);
    } while (x != a);
    if (cyc == h.mask) {
      out.cyclic = true;
      out.cyclic_generator = a;
      break;
    }
  }

  out.normal = true;
  for (std::size_t x = 0; x < g.order() && out.normal; ++x)
    for (std::size_t a : mem)
      if (!h.contains(g.conjugate(a, x))) {
        out.normal = false;
        break;
      }

  Subgroup cur = trivial_subgroup(h.parent);
  while (cur.mask != h.mask) {
    std::size_t next = g.order();
    for (std::size_t a : mem)
      if (!cur.contains(a)) {
        next = a;
        break;
      }
    out.generators.push_back(next);
    std::vector<std::size_t> gens = out.generators;
    cur = closure_subgroup(h.parent, gens);
  }
  return out;
}

Subgroup center(const GroupPtr& g) {
  std::uint64_t mask = 0;
  for (std::size_t a = 0; a < g->order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g->order(); ++b)
      if (g->mul(a, b) != g->mul(b, a)) {
        central = false;
        break;
      }
    if (central) mask |= std::uint64_t{1} << a;
  }
  return make_subgroup(g, mask);
}

Subgroup mutual_commutator(const Subgroup& a, const Subgroup& b) {
  if (!(a.parent == b.parent || a.parent->same_structure(*b.parent)))
    raise(errc::not_a_subgroup, "subgroups of different groups");
  const FiniteGroup& g = *a.parent;
  std::uint64_t seed = 0;
  for (std::size_t x : a.members())
    for (std::size_t y : b.members()) {
      std::size_t comm = g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y));
      seed |= std::uint64_t{1} << comm;
    }
  return make_subgroup(a.parent, closure_mask(g, seed));
}

GroupPtr subgroup_as_group(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  const auto mem = h.members();
  std::vector<std::size_t> local(g.order(), 0);
  for (std::size_t i = 0; i < mem.size(); ++i) local[mem[i]] = i;
  std::vector<std::vector<std::size_t>> t(mem.size(), std::vector<std::size_t>(mem.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < mem.size(); ++i) {
    names.push_back(g.name(mem[i]));
    for (std::size_t j = 0; j < mem.size(); ++j) t[i][j] = local[g.mul(mem[i], mem[j])];
  }
  return FiniteGroup::from_cayley_table(t, local[g.identity()], std::move(names),
                                        g.group_name() + "_sub");
}

SeriesReport series_check(const std::vector<Subgroup>& chain, SeriesKind kind) {
  if (chain.empty()) raise(errc::not_a_chain, "empty chain");
  const GroupPtr g = chain.front().parent;
  const std::uint64_t whole = full_mask(g->order());
  for (const auto& h : chain)
    if (!(h.parent == g || h.parent->same_structure(*g)))
      raise(errc::not_a_chain, "terms belong to different groups");
  if (chain.front().mask != whole) raise(errc::not_a_chain, "chain must start at the whole group");
  if (chain.back().order != 1) raise(errc::not_a_chain, "chain must end at the trivial subgroup");
  for (std::size_t t = 0; t + 1 < chain.size(); ++t)
    if (!subgroup_subset(chain[t + 1], chain[t]))
      raise(errc::not_a_chain,
            "term " + std::to_string(t + 1) + " is not contained in term " + std::to_string(t));
  for (std::size_t t = 0; t < chain.size(); ++t)
    if (!subgroup_properties(chain[t]).normal)
      raise(errc::not_invariant, "term " + std::to_string(t) + " is not normal in the group");

  SeriesReport report;
  report.kind = kind;
  report.passed = true;
  const Subgroup top = whole_group(g);
  for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
    SeriesLink link;
    link.from = t;
    link.to = t + 1;
    if (kind == SeriesKind::central) {
      Subgroup comm = mutual_commutator(chain[t], top);
      link.ok = subgroup_subset(comm, chain[t + 1]);
      link.detail = "[" + chain[t].describe() + ", G] = " + comm.describe();
    } else {
      GroupPtr upper = subgroup_as_group(chain[t]);
      std::uint64_t sub = 0;
      const auto mem = chain[t].members();
      for (std::size_t i = 0; i < mem.size(); ++i)
        if (chain[t + 1].contains(mem[i])) sub |= std::uint64_t{1} << i;
      GroupPtr factor = quotient_group(upper, subgroup_from_mask(upper, sub));
      link.ok = factor->is_abelian();
      link.detail = "factor of order " + std::to_string(factor->order()) +
                    (link.ok ? " is abelian" : " is not abelian");
    }
    report.passed = report.passed && link.ok;
    report.links.push_back(std::move(link));
  }
  return report;
}

GroupClassification classify_group(const GroupPtr& g, std::size_t max_order) {
  if (g->order() > max_order)
    raise(errc::group_too_large, "order " + std::to_string(g->order()) + " exceeds bound " +
                                     std::to_string(max_order));
  GroupClassification out;
  const Subgroup top = whole_group(g);

  out.lower_central_series.push_back(top);
  while (true) {
    Subgroup next = mutual_commutator(out.lower_central_series.back(), top);
    if (same_subgroup(next, out.lower_central_series.back())) break;
    out.lower_central_series.push_back(next);
    if (next.order == 1) break;
  }
  out.nilpotent = out.lower_central_series.back().order == 1;
  if (out.nilpotent) out.nilpotency_class = out.lower_central_series.size() - 1;

  out.derived_series.push_back(top);
  while (true) {
    const Subgroup& last = out.derived_series.back();
    Subgroup next = mutual_commutator(last, last);
    if (same_subgroup(next, last)) break;
    out.derived_series.push_back(next);
    if (next.order == 1) break;
  }
  out.solvable = out.derived_series.back().order == 1;
  if (out.solvable) out.derived_length = out.derived_series.size() - 1;

  Subgroup derived = mutual_commutator(top, top);
  out.metabelian = subgroup_properties(derived).abelian;

  Subgroup z = center(g);
  out.central_quotient_abelian = quotient_group(g, z)->is_abelian();
  out.commutator_in_center = subgroup_subset(derived, z);
  out.center_criterion_agrees = out.central_quotient_abelian == out.commutator_in_center;
  return out;
}

Transversal coset_transversal(const GroupPtr& g, const Subgroup& h, Side side) {
  if (!(h.parent == g || h.parent->same_structure(*g)))
    raise(errc::not_a_subgroup, "subgroup belongs to a different group");
  const std::size_t n = g->order();
  std::vector<bool> covered(n, false);
  auto cover = [&](std::size_t rep) {
    for (std::size_t x : h.members())
      covered[side == Side::left ? g->mul(rep, x) : g->mul(x, rep)] = true;
  };
  Transversal t{g, h, side, {g->identity()}};
  cover(g->identity());
  for (std::size_t x = 0; x < n; ++x) {
    if (covered[x]) continue;
    t.representatives.push_back(x);
    cover(x);
  }
  return t;
}

GroupPtr quotient_group(const GroupPtr& g, const Subgroup& h) {
  if (!subgroup_properties(h).normal) raise(errc::not_normal, h.describe() + " is not normal");
  const Transversal t = coset_transversal(g, h, Side::left);
  const std::size_t m = t.representatives.size();
  std::vector<std::size_t> coset_of(g->order());
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t x : h.members()) coset_of[g->mul(t.representatives[k], x)] = k;
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  std::vector<std::string> names;
  for (std::size_t k = 0; k < m; ++k) {
    names.push_back("[" + g->name(t.representatives[k]) + "]");
    for (std::size_t l = 0; l < m; ++l)
      table[k][l] = coset_of[g->mul(t.representatives[k], t.representatives[l])];
  }
  return FiniteGroup::from_cayley_table(table, 0, std::move(names), g->group_name() + "_quot");
}

Q8Structure q8_structure(const GroupPtr& g) {
  if (g->order() != 8) raise(errc::not_q8, "order is " + std::to_string(g->order()));
  const std::size_t e = g->identity();
  for (std::size_t x = 0; x < 8; ++x) {
    if (g->power(x, 4) != e) continue;
    for (std::size_t y = 0; y < 8; ++y) {
      if (g->power(x, 2) != g->power(y, 2)) continue;
      if (g->mul(g->mul(x, y), x) != y) continue;
      if (closure_subgroup(g, {x, y}).order != 8) continue;
      Q8Structure s;
      s.gen_a = x;
      s.gen_b = y;
      s.normal_form.assign(8, {0, 0});
      std::vector<bool> hit(8, false);
      bool ok = true;
      for (unsigned i = 0; i < 4 && ok; ++i)
        for (unsigned j = 0; j < 2 && ok; ++j) {
          std::size_t v = g->mul(g->power(x, i), g->power(y, j));
          if (hit[v])
            ok = false;
          else {
            hit[v] = true;
            s.normal_form[v] = {i, j};
          }
        }
      if (ok) return s;
    }
  }
  raise(errc::not_q8, "no generator pair satisfies x^4 = e, x^2 = y^2, xyx = y");
}

}  // namespace ringforge
