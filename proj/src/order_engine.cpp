#include "hwcat/order_engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hwcat {

namespace {

WeightOrder order_from_multiplicities(const std::vector<std::vector<std::size_t>>& rows, const char* what) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t lam = 0; lam < rows.size(); ++lam)
    for (std::size_t mu = 0; mu < rows[lam].size(); ++mu)
      if (mu != lam && rows[lam][mu] != 0) rel.push_back({mu, lam});
  try {
    return WeightOrder::from_relations(rows.size(), rel);
  } catch (const InputError&) {
    throw InternalError(std::string(what) + ": generating relations contain a cycle");
  }
}

std::string label(const BoundQuiverAlgebra& a, std::size_t v) { return a.vertex_labels()[v]; }

}  // namespace

WeightOrder essential_order(const HwStructure& hw) {
  const std::size_t n = hw.order.size();
  std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n, 0));
  for (std::size_t lam = 0; lam < n; ++lam)
    for (std::size_t mu = 0; mu < n; ++mu) rows[lam][mu] = hw.standards[lam].dim(mu) + hw.costandards[lam].dim(mu);
  return order_from_multiplicities(rows, "essential order");
}

bool equivalent_structures(const HwStructure& a, const HwStructure& b) {
  if (a.order.size() != b.order.size()) throw InputError("structures on different weight sets");
  bool same = true;
  for (std::size_t lam = 0; lam < a.order.size(); ++lam) same = same && a.costandards[lam].dims() == b.costandards[lam].dims();
  if (same != (essential_order(a) == essential_order(b)))
    throw InternalError("costandard multiplicities and essential orders disagree on equivalence");
  return same;
}

// ---------------------------------------------------------------- enumeration

Enumeration enumerate_hw_structures(HwEngine& eng, std::size_t max_weights) {
  const std::size_t n = eng.size();
  if (n > max_weights)
    throw InputError("enumerate: " + std::to_string(n) + " weights exceed the limit of " + std::to_string(max_weights) +
                     "; check a specific order with --order instead");
  Enumeration out;
  std::vector<std::size_t> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  do {
    ++out.total_orders_checked;
    auto order = WeightOrder::total(seq);
    if (!check_dagger_axioms(eng, order).pass()) continue;
    auto ess = essential_order(make_structure(eng, order));
    auto it = std::find_if(out.classes.begin(), out.classes.end(), [&](const StructureClass& c) { return c.essential == ess; });
    if (it == out.classes.end()) {
      out.classes.push_back({ess, seq, 1});
    } else {
      ++it->passing_total_orders;
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

// ---------------------------------------------------------------- minimality

MinimalityResult minimality_test(HwEngine& eng, const HwStructure& hw, std::size_t lam, std::size_t max_degree) {
  const auto& a = *eng.algebra();
  if (!a.duality()) throw PreconditionError("minimality test: duality certificate required");
  if (lam >= eng.size()) throw InputError("minimality test: unknown weight");
  MinimalityResult r;
  r.max_degree = max_degree;
  r.trivial_standard = hw.standards[lam].total_dim() == 1 && hw.costandards[lam].total_dim() == 1;
  const ObjectKey l{ObjectKey::Kind::Simple, lam, 0};
  r.ext2 = eng.ext(l, l, 2);
  r.ext2_vanishes = r.ext2 == 0;
  r.ext_trivial = true;
  for (std::size_t d = 0; d <= max_degree && r.ext_trivial; ++d) r.ext_trivial = eng.ext(l, l, d) == (d == 0 ? 1u : 0u);
  return r;
}

// ---------------------------------------------------------------- reconstruction

namespace {

std::size_t corner_self_ext2(const AlgebraPtr& a, VertexMask remaining, std::size_t v) {
  auto c = corner_algebra(a, remaining);
  std::size_t local = 0;
  while (c->vertex_parent()[local] != v) ++local;
  auto l = simple(c, local);
  return ext_dim(l, l, 2);
}

PeelStep peel_step(const AlgebraPtr& a, VertexMask remaining) {
  PeelStep s;
  s.remaining = remaining;
  for (std::size_t v = 0; v < a->num_vertices(); ++v)
    if (in_mask(remaining, v)) s.self_ext2.push_back({v, corner_self_ext2(a, remaining, v)});
  return s;
}

std::string describe(const BoundQuiverAlgebra& a, const PeelStep& s) {
  std::string out = "over the corner on " + mask_to_string(a, s.remaining) + ":";
  for (auto [v, e] : s.self_ext2) out += " Ext^2(L(" + a.vertex_labels()[v] + "),L(" + a.vertex_labels()[v] + "))=" + std::to_string(e);
  return out;
}

}  // namespace

Reconstruction reconstruct_unique_order(const AlgebraPtr& a, std::size_t explore_limit) {
  if (!a->duality()) throw PreconditionError("reconstruct: duality certificate required");
  const std::size_t n = a->num_vertices();
  HwEngine eng(a);

  // Greedy peel with the smallest-index tie-break.
  Reconstruction out;
  VertexMask remaining = a->all_vertices();
  while (remaining) {
    auto step = peel_step(a, remaining);
    for (auto [v, e] : step.self_ext2)
      if (e == 0) {
        step.chosen = v;
        break;
      }
    out.steps.push_back(step);
    if (!step.chosen)
      throw NotHighestWeight("not a highest weight category (with this duality): no simple with vanishing self-Ext^2 " +
                                 describe(*a, step),
                             out.steps);
    out.peel.push_back(*step.chosen);
    remaining &= ~bit(*step.chosen);
  }
  auto total = WeightOrder::total(out.peel);
  auto report = check_dagger_axioms(eng, total);
  if (!report.pass()) {
    const auto f = report.failures().front();
    throw NotHighestWeight("not a highest weight category (with this duality): the peel order fails " + f.axiom + " at " +
                               label(*a, f.weight) + (f.note.empty() ? "" : " (" + f.note + ")"),
                           out.steps);
  }
  out.order = essential_order(make_structure(eng, total));
  if (n > explore_limit) return out;

  // Every admissible choice must lead to the same essential order.
  out.peels_explored = 0;
  std::vector<std::size_t> seq;
  std::function<void(VertexMask)> explore = [&](VertexMask rem) {
    if (!rem) {
      ++out.peels_explored;
      auto o = WeightOrder::total(seq);
      if (!check_dagger_axioms(eng, o).pass())
        throw InternalError("reconstruct: an alternative peel order fails the axioms");
      if (essential_order(make_structure(eng, o)) != out.order)
        throw InternalError("reconstruct: tie-breaking changed the essential order");
      return;
    }
    auto step = peel_step(a, rem);
    bool any = false;
    for (auto [v, e] : step.self_ext2) {
      if (e) continue;
      any = true;
      seq.push_back(v);
      explore(rem & ~bit(v));
      seq.pop_back();
    }
    if (!any) throw InternalError("reconstruct: an alternative peel gets stuck " + describe(*a, step));
  };
  explore(a->all_vertices());
  return out;
}

// ---------------------------------------------------------------- length strata

VertexMask LengthFunction::stratum(std::size_t d) const {
  VertexMask m = 0;
  for (std::size_t v = 0; v < length.size(); ++v)
    if (length[v] <= d) m |= bit(v);
  return m;
}

bool LengthFunction::all_match() const {
  return std::all_of(stratum_matches.begin(), stratum_matches.end(), [](bool b) { return b; });
}

LengthFunction length_strata(HwEngine& eng, const HwStructure& hw) {
  const std::size_t n = eng.size();
  auto ess = essential_order(hw);
  LengthFunction lf;
  lf.length.assign(n, 0);
  // Lengths along a linear extension: every strictly smaller weight comes first.
  for (auto v : ess.linear_extension())
    for (std::size_t u = 0; u < n; ++u)
      if (ess.less(u, v)) lf.length[v] = std::max(lf.length[v], lf.length[u] + 1);
  for (std::size_t lam = 0; lam < n; ++lam) {
    auto g = gamma(eng.injective(lam), lf.stratum(lf.length[lam])).module;
    lf.stratum_matches.push_back(g.dims() == hw.costandards[lam].dims());
  }
  return lf;
}

// ---------------------------------------------------------------- tilting

namespace {

ExactMatrix vectorize(const ModuleMap& f, const FieldCtx& ctx) {
  std::size_t len = 0;
  for (const auto& b : f.blocks) len += b.rows() * b.cols();
  ExactMatrix v(ctx, len, 1);
  std::size_t k = 0;
  for (const auto& b : f.blocks)
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j, ++k)
        if (!b.entry_is_zero(i, j)) v.set(k, 0, b.at(i, j));
  return v;
}

}  // namespace

ModuleRep universal_extension(const ModuleRep& c, const ModuleRep& s, std::size_t& k) {
  const auto& ctx = c.ctx();
  auto cover = min_proj_resolution(s, 0);
  const auto& p = cover.terms().front().module;
  auto kernel = submodule(p, kernel_of(cover.terms().front().differential, p));

  // Ext^1(s, c) = Hom(K, c) / restrictions of Hom(P, c).
  auto hom_k = hom_space(kernel.module, c);
  std::vector<ExactMatrix> cols;
  for (const auto& g : hom_space(p, c)) cols.push_back(vectorize(g.compose_after(kernel.inclusion), ctx));
  std::size_t base_rank = 0;
  const std::size_t len = hom_k.empty() ? 0 : vectorize(hom_k.front(), ctx).rows();
  if (!cols.empty() && len) base_rank = rank(ExactMatrix::hstack(cols, ctx, len));
  std::vector<ModuleMap> cocycles;
  for (const auto& f : hom_k) {
    cols.push_back(vectorize(f, ctx));
    std::size_t r = rank(ExactMatrix::hstack(cols, ctx, len));
    if (r > base_rank) {
      base_rank = r;
      cocycles.push_back(f);
    } else {
      cols.pop_back();
    }
  }
  k = cocycles.size();
  if (k == 0) return c;

  // Pushout of P^k <- K^k -> c along (f_1, ..., f_k).
  std::vector<ModuleRep> parts{c};
  for (std::size_t i = 0; i < k; ++i) parts.push_back(p);
  auto sum = direct_sum(parts);
  ModuleMap glue;
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    const std::size_t kd = kernel.module.dim(v), pd = p.dim(v), cd = c.dim(v);
    ExactMatrix blk(ctx, cd + k * pd, k * kd);
    for (std::size_t i = 0; i < k; ++i) {
      blk.set_block(0, i * kd, cocycles[i].blocks[v]);
      blk.add_block(cd + i * pd, i * kd, kernel.inclusion.blocks[v], Scalar(-1));
    }
    glue.blocks.push_back(blk);
  }
  auto kernel_power = direct_power(kernel.module, k);
  if (!is_homomorphism(kernel_power, sum, glue)) throw InternalError("universal extension: gluing map is not a homomorphism");
  return quotient(sum, image_of(glue, sum)).module;
}

TiltingModule tilting_module(HwEngine& eng, const HwStructure& hw, std::size_t lam) {
  const std::size_t n = eng.size();
  if (lam >= n) throw InputError("tilting: unknown weight");
  TiltingModule t;
  t.weight = lam;
  t.module = hw.standards[lam];
  std::size_t budget = n;
  for (std::size_t v = 0; v < n; ++v) budget += eng.projective(v).total_dim();
  auto ext = hw.order.linear_extension();
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) {
      const std::size_t e = eng.ext(hw.standard_key(*it), t.module, 1);
      if (e == 0) continue;
      std::size_t k = 0;
      t.module = universal_extension(t.module, hw.standards[*it], k);
      if (k != e) throw InternalError("tilting: cocycle count differs from dim Ext^1");
      changed = true;
      if (++t.extensions > budget) throw InternalError("tilting: universal extensions do not terminate");
    }
  }
  auto good = good_filtration(eng, hw, t.module);
  auto standard = standard_filtration(eng, hw, t.module);
  if (!good || !standard) throw InternalError("tilting: T(" + label(*eng.algebra(), lam) + ") lacks a flag");
  if (standard->multiplicities[lam] != 1) throw InternalError("tilting: (T:Delta(lam)) differs from 1");
  if (!is_indecomposable(t.module)) throw InternalError("tilting: T(" + label(*eng.algebra(), lam) + ") decomposes");
  t.costandard_multiplicities = good->multiplicities;
  t.costandard_flag = good->witness;
  t.standard_multiplicities = standard->multiplicities;
  t.standard_flag = standard->witness;
  return t;
}

WeightOrder tilting_order(const std::vector<TiltingModule>& tiltings, std::size_t n) {
  std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n, 0));
  for (const auto& t : tiltings)
    for (std::size_t mu = 0; mu < n; ++mu) rows[t.weight][mu] = t.standard_multiplicities[mu] + t.costandard_multiplicities[mu];
  return order_from_multiplicities(rows, "tilting order");
}

}  // namespace hwcat
