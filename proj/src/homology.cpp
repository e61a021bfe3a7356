#include "hwcat/homology.hpp"

#include <map>

namespace hwcat {

namespace {

struct Cover {
  std::vector<std::size_t> vertices;
  std::vector<ExactMatrix> generators;  // column in weight vertices[k] of the covered module
  ModuleRep module;
  ModuleMap map;  // cover -> covered module
};

Cover projective_cover(const ModuleRep& x, std::map<std::size_t, ModuleRep>& proj_cache) {
  const auto& alg = x.algebra();
  const auto& a = *alg;
  Cover c;
  auto rad = radical(x);
  for (std::size_t v = 0; v < x.num_vertices(); ++v) {
    if (x.dim(v) == 0) continue;
    ExactMatrix comp = complement_basis(rad.inclusion.blocks[v]);
    for (std::size_t i = 0; i < comp.cols(); ++i) {
      c.vertices.push_back(v);
      c.generators.push_back(comp.col(i));
    }
  }
  if (c.vertices.empty()) {
    c.module = ModuleRep(alg);
    c.map = ModuleMap::zero(c.module, x);
    return c;
  }
  std::vector<ModuleRep> parts;
  for (auto v : c.vertices) {
    auto it = proj_cache.find(v);
    if (it == proj_cache.end()) it = proj_cache.emplace(v, projective(alg, v)).first;
    parts.push_back(it->second);
  }
  c.module = direct_sum(parts);
  for (std::size_t t = 0; t < x.num_vertices(); ++t) {
    ExactMatrix blk(x.ctx(), x.dim(t), c.module.dim(t));
    std::size_t col = 0;
    for (std::size_t k = 0; k < c.vertices.size(); ++k)
      for (auto b : a.slice(c.vertices[k], t)) {
        if (x.dim(t)) blk.set_block(0, col, x.act(b) * c.generators[k]);
        ++col;
      }
    c.map.blocks.push_back(std::move(blk));
  }
  return c;
}

}  // namespace

std::size_t ProjResolution::multiplicity(std::size_t d, std::size_t v) const {
  if (d >= terms_.size()) {
    if (!complete_) throw InternalError("resolution degree " + std::to_string(d) + " not computed");
    return 0;
  }
  std::size_t c = 0;
  for (auto u : terms_[d].vertices) c += (u == v);
  return c;
}

ProjResolution min_proj_resolution(const ModuleRep& m, std::size_t depth, std::size_t max_term_dim) {
  ProjResolution res;
  res.target_ = m;
  std::map<std::size_t, ModuleRep> proj_cache;
  ModuleRep current = m;
  ModuleMap embed = ModuleMap::identity(m);  // current -> previous term (or M)
  for (std::size_t d = 0; d <= depth; ++d) {
    if (current.is_zero()) {
      res.complete_ = true;
      break;
    }
    Cover c = projective_cover(current, proj_cache);
    if (max_term_dim && c.module.total_dim() > max_term_dim) break;
    ResolutionTerm term;
    term.vertices = c.vertices;
    if (d > 0)
      for (std::size_t k = 0; k < c.vertices.size(); ++k)
        term.generator_images.push_back(embed.blocks[c.vertices[k]] * c.generators[k]);
    term.differential = embed.compose_after(c.map);
    auto ker = submodule(c.module, kernel_of(c.map, c.module));
    term.module = std::move(c.module);
    res.terms_.push_back(std::move(term));
    current = std::move(ker.module);
    embed = std::move(ker.inclusion);
  }
  if (!res.complete_ && current.is_zero()) res.complete_ = true;
  return res;
}

bool ProjResolution::is_minimal() const {
  for (std::size_t d = 1; d < terms_.size(); ++d) {
    const auto& prev = terms_[d - 1];
    const auto& a = *target_.algebra();
    for (std::size_t k = 0; k < terms_[d].vertices.size(); ++k) {
      std::size_t v = terms_[d].vertices[k];
      const auto& img = terms_[d].generator_images[k];
      std::size_t row = 0;
      for (std::size_t j = 0; j < prev.vertices.size(); ++j)
        for (auto b : a.slice(prev.vertices[j], v)) {
          if (a.is_idempotent(b) && !img.entry_is_zero(row, 0)) return false;
          ++row;
        }
    }
  }
  return true;
}

bool ProjResolution::is_exact() const {
  if (terms_.empty()) return target_.is_zero();
  // Augmentation onto M.
  for (std::size_t v = 0; v < target_.num_vertices(); ++v)
    if (hwcat::rank(terms_[0].differential.blocks[v]) != target_.dim(v)) return false;
  for (std::size_t d = 0; d < terms_.size(); ++d) {
    const auto& cur = terms_[d];
    for (std::size_t v = 0; v < target_.num_vertices(); ++v) {
      std::size_t kernel = cur.module.dim(v) - hwcat::rank(cur.differential.blocks[v]);
      std::size_t image = 0;
      if (d + 1 < terms_.size()) {
        const auto& next = terms_[d + 1].differential.blocks[v];
        if (!(cur.differential.blocks[v] * next).is_zero()) return false;
        image = hwcat::rank(next);
      } else if (!complete_) {
        continue;
      }
      if (kernel != image) return false;
    }
  }
  return true;
}

std::size_t ext_dim_simple(const ProjResolution& res, std::size_t v, std::size_t d) { return res.multiplicity(d, v); }

namespace {

/// Coboundary Hom(P_{d-1}, N) -> Hom(P_d, N), d >= 1.
ExactMatrix coboundary(const ProjResolution& res, const ModuleRep& n, std::size_t d) {
  const auto& a = *n.algebra();
  const auto& prev = res.terms()[d - 1];
  const auto& cur = res.terms()[d];
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (auto v : cur.vertices) row_off.push_back(row_off.back() + n.dim(v));
  for (auto v : prev.vertices) col_off.push_back(col_off.back() + n.dim(v));
  ExactMatrix delta(n.ctx(), row_off.back(), col_off.back());
  for (std::size_t k = 0; k < cur.vertices.size(); ++k) {
    const std::size_t vk = cur.vertices[k];
    if (n.dim(vk) == 0) continue;
    const auto& img = cur.generator_images[k];
    std::size_t row = 0;
    for (std::size_t j = 0; j < prev.vertices.size(); ++j)
      for (auto b : a.slice(prev.vertices[j], vk)) {
        if (!img.entry_is_zero(row, 0) && n.dim(prev.vertices[j]))
          delta.add_block(row_off[k], col_off[j], n.act(b), img.at(row, 0));
        ++row;
      }
  }
  return delta;
}

std::size_t cochain_dim(const ProjResolution& res, const ModuleRep& n, std::size_t d) {
  if (d >= res.terms().size()) return 0;
  std::size_t s = 0;
  for (auto v : res.terms()[d].vertices) s += n.dim(v);
  return s;
}

}  // namespace

std::size_t ext_dim(const ProjResolution& res, const ModuleRep& n, std::size_t d) {
  if (res.target().algebra().get() != n.algebra().get()) throw InputError("ext_dim: modules over different algebras");
  if (!res.covers(d + 1)) throw InternalError("ext_dim: resolution too short for degree " + std::to_string(d));
  std::size_t c = cochain_dim(res, n, d);
  if (c == 0) return 0;
  std::size_t in_rank = d >= 1 ? rank(coboundary(res, n, d)) : 0;
  std::size_t out_rank = d + 1 < res.terms().size() ? rank(coboundary(res, n, d + 1)) : 0;
  return c - in_rank - out_rank;
}

std::size_t ext_dim(const ModuleRep& m, const ModuleRep& n, std::size_t d) {
  return ext_dim(min_proj_resolution(m, d + 1), n, d);
}

ExactMatrix cartan_matrix(const BoundQuiverAlgebra& a) {
  const std::size_t nv = a.num_vertices();
  ExactMatrix c(a.ctx(), nv, nv);
  for (std::size_t l = 0; l < nv; ++l)
    for (std::size_t m = 0; m < nv; ++m) c.set(l, m, Scalar(static_cast<long>(a.slice(l, m).size())));
  return c;
}

bool FullnessReport::all_equal() const {
  for (const auto& r : rows)
    if (!r.equal()) return false;
  return true;
}

FullnessReport extension_fullness_report(const AlgebraPtr& a, VertexMask omega, std::optional<std::size_t> dmax) {
  FullnessReport rep;
  rep.omega = omega & a->all_vertices();
  rep.max_degree = dmax.value_or(a->dim() + 2);
  if (rep.omega == 0) return rep;
  auto q = quotient_algebra(a, rep.omega);
  for (std::size_t qs = 0; qs < q->num_vertices(); ++qs) {
    const std::size_t s = q->vertex_parent()[qs];
    auto res_a = min_proj_resolution(simple(a, s), rep.max_degree);
    auto res_q = min_proj_resolution(simple(q, qs), rep.max_degree);
    for (std::size_t qt = 0; qt < q->num_vertices(); ++qt) {
      const std::size_t t = q->vertex_parent()[qt];
      for (std::size_t d = 0; d <= rep.max_degree; ++d)
        rep.rows.push_back({s, t, d, ext_dim_simple(res_a, t, d), ext_dim_simple(res_q, qt, d)});
    }
  }
  return rep;
}

}  // namespace hwcat
