#include "hwcat/module.hpp"

#include <algorithm>
#include <random>

namespace hwcat {

namespace {

void require_same_algebra(const ModuleRep& m, const ModuleRep& n, const char* what) {
  if (m.algebra().get() != n.algebra().get()) throw InputError(std::string(what) + ": modules over different algebras");
}

ExactMatrix empty_cols(const FieldCtx& ctx, std::size_t rows) { return ExactMatrix(ctx, rows, 0); }

}  // namespace

ModuleRep::ModuleRep(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<ExactMatrix> action)
    : alg_(std::move(alg)), dims_(std::move(dims)), action_(std::move(action)) {
  if (dims_.size() != alg_->num_vertices()) throw InputError("module: one dimension per vertex expected");
  if (action_.size() != alg_->dim()) throw InputError("module: one action matrix per basis element expected");
  for (std::size_t b = 0; b < alg_->dim(); ++b) {
    const auto& e = alg_->basis()[b];
    if (action_[b].rows() != dims_[e.target] || action_[b].cols() != dims_[e.source])
      throw InputError("module: action block of " + e.label + " has the wrong shape");
  }
}

ModuleRep::ModuleRep(AlgebraPtr alg) : alg_(std::move(alg)), dims_(alg_->num_vertices(), 0) {
  action_.assign(alg_->dim(), ExactMatrix(alg_->ctx(), 0, 0));
}

std::size_t ModuleRep::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims_) s += d;
  return s;
}

VertexMask ModuleRep::support() const {
  VertexMask m = 0;
  for (std::size_t v = 0; v < dims_.size(); ++v)
    if (dims_[v]) m |= bit(v);
  return m;
}

std::size_t ModuleRep::offset(std::size_t v) const {
  std::size_t s = 0;
  for (std::size_t u = 0; u < v; ++u) s += dims_[u];
  return s;
}

bool ModuleRep::check_action() const {
  const auto& a = *alg_;
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    if (action_[a.idempotent(v)] != ExactMatrix::identity(ctx(), dims_[v])) return false;
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < a.dim(); ++y) {
      const auto& ex = a.basis()[x];
      const auto& ey = a.basis()[y];
      if (ex.target != ey.source) continue;
      ExactMatrix lhs(ctx(), dims_[ey.target], dims_[ex.source]);
      for (const auto& [k, c] : a.product(x, y)) lhs.add_block(0, 0, action_[k], c);
      if (lhs != action_[y] * action_[x]) return false;
    }
  return true;
}

ModuleMap ModuleMap::zero(const ModuleRep& m, const ModuleRep& n) {
  ModuleMap f;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) f.blocks.emplace_back(m.ctx(), n.dim(v), m.dim(v));
  return f;
}

ModuleMap ModuleMap::identity(const ModuleRep& m) {
  ModuleMap f;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) f.blocks.push_back(ExactMatrix::identity(m.ctx(), m.dim(v)));
  return f;
}

ModuleMap ModuleMap::compose_after(const ModuleMap& first) const {
  ModuleMap r;
  for (std::size_t v = 0; v < blocks.size(); ++v) r.blocks.push_back(blocks[v] * first.blocks[v]);
  return r;
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
  ModuleMap r;
  for (std::size_t v = 0; v < blocks.size(); ++v) r.blocks.push_back(blocks[v] + o.blocks[v]);
  return r;
}

ModuleMap ModuleMap::scaled(const Scalar& c) const {
  ModuleMap r;
  for (const auto& b : blocks) r.blocks.push_back(b.scaled(c));
  return r;
}

bool ModuleMap::is_zero() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.is_zero(); });
}

ExactMatrix ModuleMap::flatten(const FieldCtx& ctx) const { return ExactMatrix::block_diagonal(blocks, ctx); }

std::size_t ModuleMap::rank() const {
  std::size_t r = 0;
  for (const auto& b : blocks) r += hwcat::rank(b);
  return r;
}

bool is_homomorphism(const ModuleRep& m, const ModuleRep& n, const ModuleMap& f) {
  const auto& a = *m.algebra();
  for (std::size_t b = 0; b < a.dim(); ++b) {
    const auto& e = a.basis()[b];
    if (f.blocks[e.target] * m.act(b) != n.act(b) * f.blocks[e.source]) return false;
  }
  return true;
}

ModuleRep simple(const AlgebraPtr& a, std::size_t v) {
  if (v >= a->num_vertices()) throw InputError("simple: unknown vertex");
  std::vector<std::size_t> dims(a->num_vertices(), 0);
  dims[v] = 1;
  std::vector<ExactMatrix> act;
  for (std::size_t b = 0; b < a->dim(); ++b) {
    const auto& e = a->basis()[b];
    ExactMatrix m(a->ctx(), dims[e.target], dims[e.source]);
    if (b == a->idempotent(v)) m.set(0, 0, Scalar(1));
    act.push_back(std::move(m));
  }
  return ModuleRep(a, std::move(dims), std::move(act));
}

ModuleRep projective(const AlgebraPtr& a, std::size_t lam) {
  if (lam >= a->num_vertices()) throw InputError("projective: unknown vertex");
  const std::size_t nv = a->num_vertices();
  std::vector<std::size_t> dims(nv), pos(a->dim(), 0);
  for (std::size_t t = 0; t < nv; ++t) {
    const auto& sl = a->slice(lam, t);
    dims[t] = sl.size();
    for (std::size_t i = 0; i < sl.size(); ++i) pos[sl[i]] = i;
  }
  std::vector<ExactMatrix> act;
  for (std::size_t x = 0; x < a->dim(); ++x) {
    const auto& e = a->basis()[x];
    ExactMatrix m(a->ctx(), dims[e.target], dims[e.source]);
    for (auto b : a->slice(lam, e.source))
      for (const auto& [k, c] : a->product(b, x)) m.set(pos[k], pos[b], c);
    act.push_back(std::move(m));
  }
  return ModuleRep(a, std::move(dims), std::move(act));
}

ModuleRep injective(const AlgebraPtr& a, std::size_t lam) {
  if (lam >= a->num_vertices()) throw InputError("injective: unknown vertex");
  const std::size_t nv = a->num_vertices();
  std::vector<std::size_t> dims(nv), pos(a->dim(), 0);
  for (std::size_t s = 0; s < nv; ++s) {
    const auto& sl = a->slice(s, lam);
    dims[s] = sl.size();
    for (std::size_t i = 0; i < sl.size(); ++i) pos[sl[i]] = i;
  }
  std::vector<ExactMatrix> act;
  for (std::size_t x = 0; x < a->dim(); ++x) {
    const auto& e = a->basis()[x];
    ExactMatrix m(a->ctx(), dims[e.target], dims[e.source]);
    // (f.x)(c) = f(x c): entry [c][b] is the coefficient of b in x*c.
    for (auto c : a->slice(e.target, lam))
      for (const auto& [k, val] : a->product(x, c)) m.set(pos[c], pos[k], val);
    act.push_back(std::move(m));
  }
  return ModuleRep(a, std::move(dims), std::move(act));
}

ModuleRep direct_sum(const std::vector<ModuleRep>& parts) {
  if (parts.empty()) throw InputError("direct_sum of nothing");
  const auto& alg = parts.front().algebra();
  for (const auto& p : parts) require_same_algebra(parts.front(), p, "direct_sum");
  std::vector<std::size_t> dims(alg->num_vertices(), 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim(v);
  std::vector<ExactMatrix> act;
  for (std::size_t b = 0; b < alg->dim(); ++b) {
    std::vector<ExactMatrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.act(b));
    act.push_back(ExactMatrix::block_diagonal(blocks, alg->ctx()));
  }
  return ModuleRep(alg, std::move(dims), std::move(act));
}

ModuleRep direct_power(const ModuleRep& m, std::size_t k) {
  if (k == 0) return ModuleRep(m.algebra());
  return direct_sum(std::vector<ModuleRep>(k, m));
}

std::size_t total_dim(const GradedSubspace& s) {
  std::size_t d = 0;
  for (const auto& b : s) d += b.cols();
  return d;
}

GradedSubspace whole(const ModuleRep& m) {
  GradedSubspace s;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) s.push_back(ExactMatrix::identity(m.ctx(), m.dim(v)));
  return s;
}

GradedSubspace nothing(const ModuleRep& m) {
  GradedSubspace s;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) s.push_back(empty_cols(m.ctx(), m.dim(v)));
  return s;
}

GradedSubspace sum_of(const GradedSubspace& a, const GradedSubspace& b) {
  GradedSubspace s;
  for (std::size_t v = 0; v < a.size(); ++v)
    s.push_back(image_basis(ExactMatrix::hstack({a[v], b[v]}, a[v].ctx(), a[v].rows())));
  return s;
}

GradedSubspace image_of(const ModuleMap& f, const ModuleRep& target) {
  GradedSubspace s;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    if (f.blocks[v].cols() == 0)
      s.push_back(empty_cols(target.ctx(), target.dim(v)));
    else
      s.push_back(image_basis(f.blocks[v]));
  }
  return s;
}

GradedSubspace kernel_of(const ModuleMap& f, const ModuleRep& source) {
  GradedSubspace s;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    if (f.blocks[v].rows() == 0)
      s.push_back(ExactMatrix::identity(source.ctx(), source.dim(v)));
    else
      s.push_back(kernel_basis(f.blocks[v]));
  }
  return s;
}

Submodule submodule(const ModuleRep& m, const GradedSubspace& sub) {
  const auto& a = *m.algebra();
  GradedSubspace basis;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    basis.push_back(sub[v].cols() ? image_basis(sub[v]) : empty_cols(m.ctx(), m.dim(v)));
    dims.push_back(basis.back().cols());
  }
  std::vector<ExactMatrix> act;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    const auto& e = a.basis()[b];
    if (dims[e.source] == 0 || dims[e.target] == 0) {
      act.emplace_back(m.ctx(), dims[e.target], dims[e.source]);
      continue;
    }
    auto x = solve(basis[e.target], m.act(b) * basis[e.source]);
    if (!x) throw InternalError("subspace is not a submodule");
    act.push_back(std::move(*x));
  }
  Submodule r{ModuleRep(m.algebra(), dims, std::move(act)), ModuleMap{basis}};
  return r;
}

Submodule generated_submodule(const ModuleRep& m, const GradedSubspace& gens) {
  const auto& a = *m.algebra();
  GradedSubspace span;
  for (std::size_t t = 0; t < m.num_vertices(); ++t) {
    std::vector<ExactMatrix> parts;
    for (std::size_t s = 0; s < m.num_vertices(); ++s) {
      if (gens[s].cols() == 0) continue;
      for (auto b : a.slice(s, t)) parts.push_back(m.act(b) * gens[s]);
    }
    if (parts.empty() || m.dim(t) == 0)
      span.push_back(empty_cols(m.ctx(), m.dim(t)));
    else
      span.push_back(image_basis(ExactMatrix::hstack(parts, m.ctx(), m.dim(t))));
  }
  return submodule(m, span);
}

QuotientModule quotient(const ModuleRep& m, const GradedSubspace& sub) {
  const auto& a = *m.algebra();
  GradedSubspace lift, proj;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    ExactMatrix s = sub[v].cols() ? image_basis(sub[v]) : empty_cols(m.ctx(), m.dim(v));
    ExactMatrix c = complement_basis(s);
    auto change = ExactMatrix::hstack({s, c}, m.ctx(), m.dim(v));
    auto inv = inverse(change);
    if (!inv) throw InternalError("quotient: complement is not a complement");
    proj.push_back(inv->block(s.cols(), 0, c.cols(), m.dim(v)));
    dims.push_back(c.cols());
    lift.push_back(std::move(c));
  }
  std::vector<ExactMatrix> act;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    const auto& e = a.basis()[b];
    act.push_back(proj[e.target] * m.act(b) * lift[e.source]);
  }
  return QuotientModule{ModuleRep(m.algebra(), dims, std::move(act)), ModuleMap{proj}, lift};
}

Submodule radical(const ModuleRep& m) {
  const auto& a = *m.algebra();
  GradedSubspace span;
  for (std::size_t t = 0; t < m.num_vertices(); ++t) {
    std::vector<ExactMatrix> parts;
    for (std::size_t s = 0; s < m.num_vertices(); ++s)
      for (auto b : a.slice(s, t))
        if (!a.is_idempotent(b) && m.dim(s)) parts.push_back(m.act(b));
    if (parts.empty() || m.dim(t) == 0)
      span.push_back(empty_cols(m.ctx(), m.dim(t)));
    else
      span.push_back(image_basis(ExactMatrix::hstack(parts, m.ctx(), m.dim(t))));
  }
  return submodule(m, span);
}

Submodule socle(const ModuleRep& m) {
  const auto& a = *m.algebra();
  GradedSubspace span;
  for (std::size_t s = 0; s < m.num_vertices(); ++s) {
    std::vector<ExactMatrix> parts;
    for (auto g : a.generators())
      if (a.basis()[g].source == s && m.act(g).rows()) parts.push_back(m.act(g));
    if (parts.empty())
      span.push_back(ExactMatrix::identity(m.ctx(), m.dim(s)));
    else
      span.push_back(kernel_basis(ExactMatrix::vstack(parts, m.ctx(), m.dim(s))));
  }
  return submodule(m, span);
}

QuotientModule top(const ModuleRep& m) { return quotient(m, radical(m).inclusion.blocks); }

std::vector<std::size_t> composition_multiplicities(const ModuleRep& m) { return m.dims(); }

Submodule gamma(const ModuleRep& m, VertexMask omega) {
  GradedSubspace acc = nothing(m);
  while (true) {
    auto q = quotient(m, acc);
    auto soc = socle(q.module);
    GradedSubspace layer = nothing(m);
    bool grew = false;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
      if (!in_mask(omega, v) || soc.module.dim(v) == 0) continue;
      layer[v] = q.lift[v] * soc.inclusion.blocks[v];
      grew = true;
    }
    if (!grew) break;
    acc = sum_of(acc, layer);
  }
  return submodule(m, acc);
}

Submodule trace_of(const ModuleRep& m, VertexMask mask) {
  GradedSubspace gens = nothing(m);
  for (std::size_t v = 0; v < m.num_vertices(); ++v)
    if (in_mask(mask, v)) gens[v] = ExactMatrix::identity(m.ctx(), m.dim(v));
  return generated_submodule(m, gens);
}

QuotientModule co_gamma(const ModuleRep& m, VertexMask omega) {
  auto tr = trace_of(m, m.algebra()->all_vertices() & ~omega);
  return quotient(m, tr.inclusion.blocks);
}

std::vector<ModuleMap> hom_space(const ModuleRep& m, const ModuleRep& n) {
  require_same_algebra(m, n, "hom_space");
  const auto& a = *m.algebra();
  const FieldCtx& ctx = m.ctx();
  const std::size_t nv = a.num_vertices();
  std::vector<std::size_t> var_off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) var_off[v + 1] = var_off[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = var_off[nv];
  std::vector<ModuleMap> result;
  if (unknowns == 0) return result;

  std::size_t eqs = 0;
  for (auto g : a.generators()) eqs += n.dim(a.basis()[g].target) * m.dim(a.basis()[g].source);
  ExactMatrix sys(ctx, eqs, unknowns);
  std::size_t row = 0;
  for (auto g : a.generators()) {
    const std::size_t s = a.basis()[g].source, t = a.basis()[g].target;
    const ExactMatrix& rm = m.act(g);  // dim M_t x dim M_s
    const ExactMatrix& rn = n.act(g);  // dim N_t x dim N_s
    for (std::size_t i = 0; i < n.dim(t); ++i)
      for (std::size_t j = 0; j < m.dim(s); ++j, ++row) {
        // (f_t rm)[i][j] - (rn f_s)[i][j]
        for (std::size_t k = 0; k < m.dim(t); ++k)
          if (!rm.entry_is_zero(k, j)) sys.add_scaled(row, var_off[t] + i * m.dim(t) + k, rm.at(k, j));
        for (std::size_t k = 0; k < n.dim(s); ++k)
          if (!rn.entry_is_zero(i, k)) sys.add_scaled(row, var_off[s] + k * m.dim(s) + j, Scalar(-1), rn.at(i, k));
      }
  }
  ExactMatrix ker = kernel_basis(sys);
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    ModuleMap f;
    for (std::size_t v = 0; v < nv; ++v) {
      ExactMatrix blk(ctx, n.dim(v), m.dim(v));
      for (std::size_t i = 0; i < n.dim(v); ++i)
        for (std::size_t j = 0; j < m.dim(v); ++j) {
          std::size_t idx = var_off[v] + i * m.dim(v) + j;
          if (!ker.entry_is_zero(idx, c)) blk.set(i, j, ker.at(idx, c));
        }
      f.blocks.push_back(std::move(blk));
    }
    result.push_back(std::move(f));
  }
  return result;
}

std::size_t hom_dim(const ModuleRep& m, const ModuleRep& n) { return hom_space(m, n).size(); }

namespace {

bool invertible(const ModuleMap& f) {
  for (const auto& b : f.blocks)
    if (b.rows() != b.cols() || hwcat::rank(b) != b.rows()) return false;
  return true;
}

ModuleMap combination(const std::vector<ModuleMap>& basis, const std::vector<long>& coeffs) {
  ModuleMap f = basis.front().scaled(Scalar(coeffs[0]));
  for (std::size_t i = 1; i < basis.size(); ++i)
    if (coeffs[i]) f = f + basis[i].scaled(Scalar(coeffs[i]));
  return f;
}

}  // namespace

bool is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed) {
  require_same_algebra(m, n, "is_isomorphic");
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  auto h = hom_space(m, n);
  if (h.empty()) return false;
  const FieldCtx& ctx = m.ctx();
  if (!ctx.is_rational()) {
    const std::uint64_t p = ctx.characteristic();
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t i = 0; i < h.size(); ++i) {
      total *= p;
      if (total > 4096) {
        small = false;
        break;
      }
    }
    if (small) {
      std::vector<long> c(h.size(), 0);
      for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t x = code;
        for (auto& ci : c) {
          ci = static_cast<long>(x % p);
          x /= p;
        }
        if (invertible(combination(h, c))) return true;
      }
      return false;
    }
  }
  std::mt19937_64 rng(seed);
  const int tries = ctx.is_rational() ? 6 : 40;
  const long bound = ctx.is_rational() ? 97 : static_cast<long>(std::min<std::uint64_t>(ctx.characteristic() - 1, 1u << 30));
  std::uniform_int_distribution<long> dist(ctx.is_rational() ? -bound : 0, bound);
  for (int t = 0; t < tries; ++t) {
    std::vector<long> c(h.size());
    for (auto& ci : c) ci = dist(rng);
    ModuleMap f = combination(h, c);
    if (invertible(f)) {
      if (!is_homomorphism(m, n, f)) throw InternalError("hom_space returned a non-homomorphism");
      return true;
    }
  }
  return false;
}

namespace {

/// Scalar c with (f - c) nilpotent on the given square block, if the
/// Krylov polynomial of the first basis vector has the shape (x - c)^s.
std::optional<Scalar> single_eigenvalue(const ExactMatrix& f) {
  const FieldCtx& ctx = f.ctx();
  const std::size_t d = f.rows();
  std::vector<ExactMatrix> krylov;
  ExactMatrix v(ctx, d, 1);
  v.set(0, 0, Scalar(1));
  krylov.push_back(v);
  std::optional<ExactMatrix> coeffs;
  while (true) {
    ExactMatrix next = f * krylov.back();
    auto basis = ExactMatrix::hstack(krylov, ctx, d);
    coeffs = solve(basis, next);
    if (coeffs) break;
    krylov.push_back(next);
  }
  const std::size_t s = krylov.size();
  std::size_t pa = 1, t = s;
  if (!ctx.is_rational()) {
    const std::size_t p = ctx.characteristic();
    while (t % p == 0) {
      t /= p;
      pa *= p;
    }
  }
  // x^s - sum a_i x^i = (x^{pa} - c)^t  =>  a_{pa(t-1)} = t c.
  Scalar a = coeffs->at(pa * (t - 1), 0);
  return ctx.mul(a, ctx.inv(Scalar(static_cast<long>(t))));
}

bool nilpotent(ExactMatrix x) {
  const std::size_t d = x.rows();
  ExactMatrix p = x;
  for (std::size_t k = 1; k < d && !p.is_zero(); ++k) p = p * x;
  return p.is_zero();
}

}  // namespace

bool is_indecomposable(const ModuleRep& m) {
  if (m.is_zero()) return false;
  const FieldCtx& ctx = m.ctx();
  auto end = hom_space(m, m);
  if (end.size() == 1) return true;
  std::size_t v0 = m.num_vertices();
  for (std::size_t v = 0; v < m.num_vertices(); ++v)
    if (m.dim(v) && (v0 == m.num_vertices() || m.dim(v) < m.dim(v0))) v0 = v;
  const std::size_t n = m.total_dim();
  std::vector<ExactMatrix> rad;
  for (const auto& f : end) {
    auto c = single_eigenvalue(f.blocks[v0]);
    if (!c) return false;
    ExactMatrix x = f.flatten(ctx) - ExactMatrix::identity(ctx, n).scaled(*c);
    if (!nilpotent(x)) return false;
    rad.push_back(x);
  }
  // The nilpotent parts must span a codimension-one ideal that is nilpotent.
  auto as_column = [&](const ExactMatrix& x) {
    ExactMatrix c(ctx, n * n, 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!x.entry_is_zero(i, j)) c.set(i * n + j, 0, x.at(i, j));
    return c;
  };
  std::vector<ExactMatrix> cols;
  for (const auto& x : rad) cols.push_back(as_column(x));
  auto stacked = ExactMatrix::hstack(cols, ctx, n * n);
  auto rr0 = rref(stacked);
  if (rr0.rank() != end.size() - 1) return false;
  ExactMatrix span = stacked.select_columns(rr0.pivots);
  std::vector<ExactMatrix> radb;
  for (auto i : rr0.pivots) radb.push_back(rad[i]);
  std::vector<ExactMatrix> power = radb;
  for (std::size_t step = 0; step <= end.size(); ++step) {
    std::vector<ExactMatrix> prods, prod_cols;
    for (const auto& x : radb)
      for (const auto& y : power) {
        ExactMatrix z = x * y;
        if (step == 0 && !solve(span, as_column(z))) return false;
        if (!z.is_zero()) {
          prods.push_back(z);
          prod_cols.push_back(as_column(z));
        }
      }
    if (prods.empty()) return true;
    auto rr = rref(ExactMatrix::hstack(prod_cols, ctx, n * n));
    if (rr.rank() >= power.size()) return false;
    power.clear();
    for (auto p : rr.pivots) power.push_back(prods[p]);
  }
  return false;
}

ModuleRep apply_duality(const ModuleRep& m) {
  const auto& a = *m.algebra();
  if (!a.duality()) throw PreconditionError("apply_duality: the algebra carries no verified duality");
  const ExactMatrix& phi = *a.duality();
  std::vector<ExactMatrix> act;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    const auto& e = a.basis()[b];
    ExactMatrix img(m.ctx(), m.dim(e.source), m.dim(e.target));
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (!phi.entry_is_zero(c, b)) img.add_block(0, 0, m.act(c), phi.at(c, b));
    act.push_back(img.transpose());
  }
  return ModuleRep(m.algebra(), m.dims(), std::move(act));
}

ModuleRep restrict_to_corner(const ModuleRep& m, const AlgebraPtr& corner) {
  if (corner->parent().get() != m.algebra().get()) throw InputError("restrict_to_corner: corner of a different algebra");
  std::vector<std::size_t> dims;
  for (auto v : corner->vertex_parent()) dims.push_back(m.dim(v));
  std::vector<ExactMatrix> act;
  for (auto b : corner->parent_index()) act.push_back(m.act(b));
  return ModuleRep(corner, std::move(dims), std::move(act));
}

ModuleRep inflate_from_quotient(const ModuleRep& m, const AlgebraPtr& parent) {
  const auto& q = *m.algebra();
  if (q.parent().get() != parent.get() || !q.reduction()) throw InputError("inflate_from_quotient: not a quotient of this algebra");
  std::vector<std::size_t> dims(parent->num_vertices(), 0);
  std::vector<std::size_t> local(parent->num_vertices(), q.num_vertices());
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    dims[q.vertex_parent()[v]] = m.dim(v);
    local[q.vertex_parent()[v]] = v;
  }
  const ExactMatrix& red = *q.reduction();
  std::vector<ExactMatrix> act;
  for (std::size_t x = 0; x < parent->dim(); ++x) {
    const auto& e = parent->basis()[x];
    ExactMatrix blk(m.ctx(), dims[e.target], dims[e.source]);
    if (local[e.source] != q.num_vertices() && local[e.target] != q.num_vertices())
      for (std::size_t c = 0; c < q.dim(); ++c)
        if (!red.entry_is_zero(c, x)) blk.add_block(0, 0, m.act(c), red.at(c, x));
    act.push_back(std::move(blk));
  }
  return ModuleRep(parent, std::move(dims), std::move(act));
}

ModuleRep restrict_to_quotient(const ModuleRep& m, const AlgebraPtr& quotient_alg) {
  const auto& q = *quotient_alg;
  if (q.parent().get() != m.algebra().get() || !q.reduction()) throw InputError("restrict_to_quotient: not a quotient of this algebra");
  VertexMask omega = 0;
  for (auto v : q.vertex_parent()) omega |= bit(v);
  if ((m.support() & ~omega) != 0) throw InputError("restrict_to_quotient: module not supported on the quotient's vertices");
  std::vector<std::size_t> dims;
  for (auto v : q.vertex_parent()) dims.push_back(m.dim(v));
  std::vector<ExactMatrix> act;
  for (auto b : q.parent_index()) act.push_back(m.act(b));
  return ModuleRep(quotient_alg, std::move(dims), std::move(act));
}

}  // namespace hwcat
