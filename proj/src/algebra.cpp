#include "hwcat/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hwcat {

namespace {

constexpr std::size_t kMaxPaths = 20000;

struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> word;
};

std::string word_label(const Quiver& q, const std::vector<std::size_t>& word, std::size_t source) {
  if (word.empty()) return "e" + q.vertices[source];
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "*" : "") + q.arrows[word[i]].name;
  return s;
}

SparseVec to_sparse(const ExactMatrix& col) {
  SparseVec v;
  for (std::size_t i = 0; i < col.rows(); ++i)
    if (!col.entry_is_zero(i, 0)) v.emplace_back(i, col.at(i, 0));
  return v;
}

/// Resolves a list of arrow names into indices, checking composability.
Path resolve_path(const Quiver& q, const std::vector<std::string>& names, const char* what) {
  if (names.empty()) throw InputError(std::string(what) + ": empty path");
  Path p;
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::size_t a = q.arrow_index(names[i]);
    if (i == 0)
      p.source = q.arrows[a].source;
    else if (q.arrows[p.word.back()].target != q.arrows[a].source)
      throw InputError(std::string(what) + ": arrows '" + names[i - 1] + "' and '" + names[i] + "' do not compose");
    p.word.push_back(a);
  }
  p.target = q.arrows[p.word.back()].target;
  return p;
}

}  // namespace

std::size_t Quiver::vertex_index(const std::string& label) const {
  auto it = std::find(vertices.begin(), vertices.end(), label);
  if (it == vertices.end()) throw InputError("unknown vertex '" + label + "'");
  return static_cast<std::size_t>(it - vertices.begin());
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  throw InputError("unknown arrow '" + name + "'");
}

std::size_t BoundQuiverAlgebra::vertex_index(const std::string& label) const {
  auto it = std::find(vertex_labels_.begin(), vertex_labels_.end(), label);
  if (it == vertex_labels_.end()) throw InputError("unknown vertex '" + label + "'");
  return static_cast<std::size_t>(it - vertex_labels_.begin());
}

ExactMatrix BoundQuiverAlgebra::unit_vector(std::size_t b) const {
  ExactMatrix v(ctx_, dim(), 1);
  v.set(b, 0, Scalar(1));
  return v;
}

ExactMatrix BoundQuiverAlgebra::multiply(const ExactMatrix& x, const ExactMatrix& y) const {
  ExactMatrix r(ctx_, dim(), 1);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x.entry_is_zero(i, 0)) continue;
    Scalar xi = x.at(i, 0);
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y.entry_is_zero(j, 0)) continue;
      Scalar c = ctx_.mul(xi, y.at(j, 0));
      for (const auto& [k, v] : product(i, j)) r.add_scaled(k, 0, c, v);
    }
  }
  return r;
}

ExactMatrix BoundQuiverAlgebra::path_element(const std::vector<std::size_t>& word, std::size_t source) const {
  if (!is_compiled()) throw InternalError("path_element on a derived algebra");
  ExactMatrix r = unit_vector(idempotents_[source]);
  for (auto a : word) r = multiply(r, unit_vector(arrow_basis_[a]));
  return r;
}

bool BoundQuiverAlgebra::check_associativity() const {
  const std::size_t n = dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (basis_[x].target != basis_[y].source) {
        if (!product(x, y).empty()) return false;
        continue;
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (basis_[y].target != basis_[z].source) continue;
        ExactMatrix left(ctx_, n, 1), right(ctx_, n, 1);
        for (const auto& [k, c] : product(x, y))
          for (const auto& [m, d] : product(k, z)) left.add_scaled(m, 0, c, d);
        for (const auto& [k, c] : product(y, z))
          for (const auto& [m, d] : product(x, k)) right.add_scaled(m, 0, c, d);
        if (left != right) return false;
      }
    }
  return true;
}

void BoundQuiverAlgebra::finish() {
  const std::size_t nv = vertex_labels_.size();
  idempotents_.assign(nv, basis_.size());
  slices_.assign(nv * nv, {});
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    slices_[basis_[b].source * nv + basis_[b].target].push_back(b);
    if (basis_[b].degree == 0) idempotents_[basis_[b].source] = b;
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (idempotents_[v] == basis_.size()) throw InternalError("missing idempotent for vertex " + vertex_labels_[v]);
  if (!generators_.empty() || basis_.size() == nv) return;

  // Complement of rad^2 inside rad, chosen greedily from basis elements.
  const std::size_t n = basis_.size();
  std::vector<ExactMatrix> cols;
  for (std::size_t x = 0; x < n; ++x) {
    if (basis_[x].degree == 0) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (basis_[y].degree == 0 || product(x, y).empty()) continue;
      ExactMatrix c(ctx_, n, 1);
      for (const auto& [k, v] : product(x, y)) c.set(k, 0, v);
      cols.push_back(c);
    }
  }
  ExactMatrix span = cols.empty() ? ExactMatrix(ctx_, n, 0) : image_basis(ExactMatrix::hstack(cols, ctx_, n));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return basis_[a].degree < basis_[b].degree; });
  std::size_t r = span.cols();
  for (auto b : order) {
    if (basis_[b].degree == 0) continue;
    auto trial = ExactMatrix::hstack({span, unit_vector(b)}, ctx_, n);
    if (rank(trial) > r) {
      span = trial;
      ++r;
      generators_.push_back(b);
    }
  }
  std::sort(generators_.begin(), generators_.end());
}

AlgebraPtr compile_algebra(const Quiver& q, const std::vector<Relation>& rels, const FieldCtx& ctx, std::size_t cap) {
  if (cap < 1) throw InputError("path cap must be at least 1");
  if (q.vertices.empty()) throw InputError("quiver has no vertices");
  if (q.vertices.size() > 64) throw InputError("at most 64 vertices are supported");
  std::set<std::string> seen;
  for (const auto& v : q.vertices)
    if (!seen.insert(v).second) throw InputError("duplicate vertex '" + v + "'");
  seen.clear();
  for (const auto& a : q.arrows) {
    if (!seen.insert(a.name).second) throw InputError("duplicate arrow '" + a.name + "'");
    if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
      throw InputError("arrow '" + a.name + "' has an endpoint outside the vertex set");
  }

  // Parsed relations as (coeff, path) lists.
  struct RelPath {
    Scalar coeff;
    Path path;
  };
  std::vector<std::vector<RelPath>> relations;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    std::vector<RelPath> terms;
    for (const auto& t : rels[r].terms) {
      Path p = resolve_path(q, t.path, ("relation " + std::to_string(r)).c_str());
      if (p.word.size() < 2) throw InputError("relation " + std::to_string(r) + " has a term of length < 2");
      if (!terms.empty() && (terms.front().path.source != p.source || terms.front().path.target != p.target))
        throw InputError("relation " + std::to_string(r) + " is not parallel");
      terms.push_back({ctx.normalize(t.coeff), std::move(p)});
    }
    if (!terms.empty()) relations.push_back(std::move(terms));
  }

  // All paths up to length cap, shortest first.
  std::vector<Path> paths;
  std::map<std::vector<std::size_t>, std::size_t> path_id;
  std::vector<std::size_t> vertex_path(q.vertices.size());
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    vertex_path[v] = paths.size();
    paths.push_back({v, v, {}});
  }
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= cap; ++len) {
    std::size_t level_end = paths.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != paths[i].target) continue;
        Path p{paths[i].source, q.arrows[a].target, paths[i].word};
        p.word.push_back(a);
        path_id[p.word] = paths.size();
        paths.push_back(std::move(p));
        if (paths.size() > kMaxPaths)
          throw InputError("path enumeration exceeds " + std::to_string(kMaxPaths) + " paths; lower the cap");
      }
    level_begin = level_end;
  }
  auto lookup = [&](const Path& p) -> std::size_t {
    if (p.word.empty()) return vertex_path[p.source];
    return path_id.at(p.word);
  };

  // Columns ordered by descending length so that pivots land on long paths.
  const std::size_t np = paths.size();
  std::vector<std::size_t> col_of(np), path_of_col(np);
  {
    std::vector<std::size_t> order(np);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return paths[a].word.size() > paths[b].word.size(); });
    for (std::size_t c = 0; c < np; ++c) {
      path_of_col[c] = order[c];
      col_of[order[c]] = c;
    }
  }

  // Ideal elements u*r*v truncated above length cap.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (const auto& rel : relations) {
    std::size_t s = rel.front().path.source, t = rel.front().path.target;
    std::size_t shortest = rel.front().path.word.size();
    for (const auto& term : rel) shortest = std::min(shortest, term.path.word.size());
    for (std::size_t u = 0; u < np; ++u) {
      if (paths[u].target != s || paths[u].word.size() + shortest > cap) continue;
      for (std::size_t v = 0; v < np; ++v) {
        if (paths[v].source != t || paths[u].word.size() + shortest + paths[v].word.size() > cap) continue;
        std::map<std::size_t, Scalar> acc;
        for (const auto& term : rel) {
          Path full{paths[u].source, paths[v].target, paths[u].word};
          full.word.insert(full.word.end(), term.path.word.begin(), term.path.word.end());
          full.word.insert(full.word.end(), paths[v].word.begin(), paths[v].word.end());
          if (full.word.size() > cap) continue;
          std::size_t c = col_of[lookup(full)];
          acc[c] = ctx.add(acc.count(c) ? acc[c] : Scalar(0), term.coeff);
        }
        std::vector<std::pair<std::size_t, Scalar>> row;
        for (auto& [c, val] : acc)
          if (!val.is_zero()) row.emplace_back(c, val);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  ExactMatrix ideal(ctx, rows.size(), np);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) ideal.set(r, c, v);
  auto rr = rref(ideal);
  std::vector<std::size_t> pivot_row(np, np);
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) pivot_row[rr.pivots[r]] = r;

  auto algebra = std::make_shared<BoundQuiverAlgebra>();
  algebra->ctx_ = ctx;
  algebra->cap_ = cap;
  algebra->root_quiver_ = std::make_shared<Quiver>(q);
  algebra->vertex_labels_ = q.vertices;
  std::vector<std::size_t> basis_of_path(np, np);
  for (std::size_t p = 0; p < np; ++p) {
    if (pivot_row[col_of[p]] != np) continue;
    if (paths[p].word.size() == cap)
      throw InputError("not finite-dimensional within cap " + std::to_string(cap) + ": path " +
                       word_label(q, paths[p].word, paths[p].source) + " survives");
    basis_of_path[p] = algebra->basis_.size();
    algebra->basis_.push_back({paths[p].source, paths[p].target, paths[p].word.size(),
                               word_label(q, paths[p].word, paths[p].source), paths[p].word});
  }
  const std::size_t n = algebra->basis_.size();

  // Normal form of an arbitrary path of length <= cap.
  auto normal_form = [&](std::size_t p) {
    SparseVec v;
    if (basis_of_path[p] != np) {
      v.emplace_back(basis_of_path[p], Scalar(1));
      return v;
    }
    std::size_t r = pivot_row[col_of[p]];
    for (std::size_t c = 0; c < np; ++c) {
      if (c == col_of[p] || rr.reduced.entry_is_zero(r, c)) continue;
      std::size_t b = basis_of_path[path_of_col[c]];
      if (b == np) throw InternalError("reduced row references a pivot column");
      v.emplace_back(b, ctx.neg(rr.reduced.at(r, c)));
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  };

  algebra->table_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = algebra->basis_[i];
      const auto& y = algebra->basis_[j];
      if (x.target != y.source) continue;
      std::vector<std::size_t> w = x.word;
      w.insert(w.end(), y.word.begin(), y.word.end());
      if (w.size() > cap) continue;
      std::size_t p = w.empty() ? vertex_path[x.source] : path_id.at(w);
      algebra->table_[i * n + j] = normal_form(p);
    }

  algebra->arrow_basis_.assign(q.arrows.size(), n);
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    std::size_t b = basis_of_path[path_id.at({a})];
    if (b == np) throw InternalError("arrow lies in the ideal");
    algebra->arrow_basis_[a] = b;
    algebra->generators_.push_back(b);
  }
  std::sort(algebra->generators_.begin(), algebra->generators_.end());
  algebra->finish();
  return algebra;
}

AlgebraPtr corner_algebra(const AlgebraPtr& a, VertexMask keep) {
  keep &= a->all_vertices();
  if (keep == 0) throw InputError("corner algebra needs a nonempty vertex set");
  auto c = std::make_shared<BoundQuiverAlgebra>();
  c->ctx_ = a->ctx_;
  c->cap_ = a->cap_;
  c->root_quiver_ = a->root_quiver_;
  c->parent_ = a;
  std::vector<std::size_t> new_vertex(a->num_vertices(), a->num_vertices());
  for (std::size_t v = 0; v < a->num_vertices(); ++v)
    if (in_mask(keep, v)) {
      new_vertex[v] = c->vertex_labels_.size();
      c->vertex_labels_.push_back(a->vertex_labels_[v]);
      c->vertex_parent_.push_back(v);
    }
  std::vector<std::size_t> new_index(a->dim(), a->dim());
  for (std::size_t b = 0; b < a->dim(); ++b) {
    const auto& e = a->basis_[b];
    if (!in_mask(keep, e.source) || !in_mask(keep, e.target)) continue;
    new_index[b] = c->basis_.size();
    c->parent_index_.push_back(b);
    BasisElement ne = e;
    ne.source = new_vertex[e.source];
    ne.target = new_vertex[e.target];
    c->basis_.push_back(std::move(ne));
  }
  const std::size_t n = c->basis_.size();
  c->table_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVec v;
      for (const auto& [k, val] : a->product(c->parent_index_[i], c->parent_index_[j])) {
        if (new_index[k] == a->dim()) throw InternalError("corner product leaves the corner");
        v.emplace_back(new_index[k], val);
      }
      c->table_[i * n + j] = std::move(v);
    }
  if (keep == a->all_vertices() && a->is_compiled()) {
    c->generators_ = a->generators_;
  }
  if (a->duality_) {
    c->duality_ = a->duality_->select_rows(c->parent_index_).select_columns(c->parent_index_);
  }
  c->finish();
  return c;
}

AlgebraPtr quotient_algebra(const AlgebraPtr& a, VertexMask omega) {
  omega &= a->all_vertices();
  const std::size_t pn = a->dim();
  const FieldCtx& ctx = a->ctx();
  // Columns ordered by descending degree so short elements survive.
  std::vector<std::size_t> order(pn);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto x, auto y) { return a->basis_[x].degree > a->basis_[y].degree; });
  std::vector<std::size_t> col_of(pn);
  for (std::size_t c = 0; c < pn; ++c) col_of[order[c]] = c;

  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (std::size_t nu = 0; nu < a->num_vertices(); ++nu) {
    if (in_mask(omega, nu)) continue;
    for (std::size_t s = 0; s < a->num_vertices(); ++s)
      for (auto x : a->slice(s, nu))
        for (std::size_t t = 0; t < a->num_vertices(); ++t)
          for (auto y : a->slice(nu, t)) {
            const auto& pr = a->product(x, y);
            if (pr.empty()) continue;
            std::vector<std::pair<std::size_t, Scalar>> row;
            for (const auto& [k, v] : pr) row.emplace_back(col_of[k], v);
            rows.push_back(std::move(row));
          }
  }
  ExactMatrix ideal(ctx, rows.size(), pn);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) ideal.set(r, c, v);
  auto rr = rref(ideal);
  std::vector<std::size_t> pivot_row(pn, pn);
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) pivot_row[rr.pivots[r]] = r;

  auto q = std::make_shared<BoundQuiverAlgebra>();
  q->ctx_ = ctx;
  q->cap_ = a->cap_;
  q->root_quiver_ = a->root_quiver_;
  q->parent_ = a;
  std::vector<std::size_t> new_vertex(a->num_vertices(), a->num_vertices());
  for (std::size_t v = 0; v < a->num_vertices(); ++v)
    if (in_mask(omega, v)) {
      new_vertex[v] = q->vertex_labels_.size();
      q->vertex_labels_.push_back(a->vertex_labels_[v]);
      q->vertex_parent_.push_back(v);
    }
  std::vector<std::size_t> new_index(pn, pn);
  for (std::size_t b = 0; b < pn; ++b) {
    if (pivot_row[col_of[b]] != pn) continue;
    const auto& e = a->basis_[b];
    if (!in_mask(omega, e.source) || !in_mask(omega, e.target))
      throw InternalError("quotient basis element outside the vertex set");
    new_index[b] = q->basis_.size();
    q->parent_index_.push_back(b);
    BasisElement ne = e;
    ne.source = new_vertex[e.source];
    ne.target = new_vertex[e.target];
    q->basis_.push_back(std::move(ne));
  }
  const std::size_t n = q->basis_.size();
  ExactMatrix red(ctx, n, pn);
  for (std::size_t b = 0; b < pn; ++b) {
    if (new_index[b] != pn) {
      red.set(new_index[b], b, Scalar(1));
      continue;
    }
    std::size_t r = pivot_row[col_of[b]];
    for (std::size_t c = 0; c < pn; ++c) {
      if (c == col_of[b] || rr.reduced.entry_is_zero(r, c)) continue;
      std::size_t k = order[c];
      if (new_index[k] == pn) throw InternalError("quotient reduction references a pivot");
      red.set(new_index[k], b, ctx.neg(rr.reduced.at(r, c)));
    }
  }
  q->table_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ExactMatrix prod(ctx, pn, 1);
      for (const auto& [k, v] : a->product(q->parent_index_[i], q->parent_index_[j])) prod.set(k, 0, v);
      q->table_[i * n + j] = to_sparse(red * prod);
    }
  q->reduction_ = std::move(red);
  if (omega == a->all_vertices() && a->is_compiled()) q->generators_ = a->generators_;
  q->finish();
  return q;
}

ExactMatrix duality_matrix(const BoundQuiverAlgebra& a, const DualityCertificate& cert) {
  if (!a.is_compiled()) throw InputError("duality certificates apply to compiled algebras");
  const Quiver& q = a.root_quiver();
  const FieldCtx& ctx = a.ctx();
  for (const auto& [name, terms] : cert) (void)q.arrow_index(name);
  std::vector<ExactMatrix> image(q.arrows.size());
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const auto& arrow = q.arrows[ai];
    auto it = cert.find(arrow.name);
    if (it == cert.end()) throw InputError("duality certificate does not map arrow '" + arrow.name + "'");
    ExactMatrix img(ctx, a.dim(), 1);
    for (const auto& term : it->second) {
      ExactMatrix el(ctx, a.dim(), 1);
      if (term.path.empty()) {
        if (arrow.source != arrow.target)
          throw InputError("duality image of '" + arrow.name + "' must run from its target to its source");
        el = a.unit_vector(a.idempotent(arrow.source));
      } else {
        Path p = resolve_path(q, term.path, "duality image");
        if (p.source != arrow.target || p.target != arrow.source)
          throw InputError("duality image of '" + arrow.name + "' must run from its target to its source");
        el = a.path_element(p.word, p.source);
      }
      img += el.scaled(term.coeff);
    }
    image[ai] = img;
  }
  ExactMatrix phi(ctx, a.dim(), a.dim());
  for (std::size_t b = 0; b < a.dim(); ++b) {
    const auto& e = a.basis()[b];
    ExactMatrix v = a.unit_vector(a.idempotent(e.target));
    for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) v = a.multiply(v, image[*it]);
    phi.set_block(0, b, v);
  }
  return phi;
}

bool is_anti_involution(const BoundQuiverAlgebra& a, const ExactMatrix& phi) {
  const std::size_t n = a.dim();
  if (phi * phi != ExactMatrix::identity(a.ctx(), n)) return false;
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    if (phi.col(a.idempotent(v)) != a.unit_vector(a.idempotent(v))) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ExactMatrix xy(a.ctx(), n, 1);
      for (const auto& [k, v] : a.product(x, y)) xy.set(k, 0, v);
      if (phi * xy != a.multiply(phi.col(y), phi.col(x))) return false;
    }
  return true;
}

bool verify_duality(const AlgebraPtr& a, const DualityCertificate& cert) {
  return is_anti_involution(*a, duality_matrix(*a, cert));
}

AlgebraPtr with_duality(const AlgebraPtr& a, const DualityCertificate& cert) {
  ExactMatrix phi = duality_matrix(*a, cert);
  if (!is_anti_involution(*a, phi)) throw PreconditionError("duality certificate does not verify");
  auto copy = std::make_shared<BoundQuiverAlgebra>(*a);
  copy->duality_ = std::move(phi);
  return copy;
}

std::string mask_to_string(const BoundQuiverAlgebra& a, VertexMask m) {
  std::string s = "{";
  bool first = true;
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    if (in_mask(m, v)) {
      s += (first ? "" : ",") + a.vertex_labels()[v];
      first = false;
    }
  return s + "}";
}

}  // namespace hwcat
