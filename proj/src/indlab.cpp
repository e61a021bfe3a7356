#include "hwcat/indlab.hpp"

#include <numeric>

#include "hwcat/homology.hpp"

namespace hwcat::indlab {

namespace {

ExactMatrix power(const ExactMatrix& a, std::size_t k) {
  auto out = ExactMatrix::identity(a.ctx(), a.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * a;
  return out;
}

std::size_t total(const std::vector<std::size_t>& sizes) { return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}); }

// Column-major vectorization of a rows x cols matrix.
ExactMatrix vectorize(const ExactMatrix& x) {
  ExactMatrix v(x.ctx(), x.rows() * x.cols(), 1);
  for (std::size_t c = 0; c < x.cols(); ++c)
    for (std::size_t r = 0; r < x.rows(); ++r) v.set(c * x.rows() + r, 0, x.at(r, c));
  return v;
}

ExactMatrix unit(const FieldCtx& ctx, std::size_t rows, std::size_t cols, std::size_t r, std::size_t c) {
  ExactMatrix e(ctx, rows, cols);
  e.set(r, c, Scalar(1));
  return e;
}

// Matrix of X -> f(X) on rows x cols matrices, one column per unit matrix.
template <class F>
ExactMatrix linear_operator(const FieldCtx& ctx, std::size_t rows, std::size_t cols, F f) {
  std::vector<ExactMatrix> columns;
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) columns.push_back(vectorize(f(unit(ctx, rows, cols, r, c))));
  std::size_t out_rows = columns.empty() ? 0 : columns.front().rows();
  return ExactMatrix::hstack(columns, ctx, out_rows);
}

}  // namespace

AlgebraPtr truncated_polynomial(std::size_t t, const FieldCtx& ctx) {
  if (t < 2) throw InputError("truncation level must be at least 2");
  Quiver q{{"1"}, {{"theta", 0, 0}}};
  Relation nil{{{Scalar(1), std::vector<std::string>(t, "theta")}}};
  return compile_algebra(q, {nil}, ctx, t + 1);
}

ExactMatrix jordan_block(const FieldCtx& ctx, std::size_t i) {
  ExactMatrix j(ctx, i, i);
  for (std::size_t r = 0; r + 1 < i; ++r) j.set(r, r + 1, Scalar(1));
  return j;
}

ExactMatrix jordan_sum(const FieldCtx& ctx, const std::vector<std::size_t>& sizes) {
  std::vector<ExactMatrix> blocks;
  for (auto s : sizes) blocks.push_back(jordan_block(ctx, s));
  return ExactMatrix::block_diagonal(blocks, ctx);
}

ModuleRep jordan_module(const AlgebraPtr& trunc, const std::vector<std::size_t>& sizes) {
  const std::size_t t = trunc->dim();
  for (auto s : sizes)
    if (s > t) throw InputError("Jordan block of size " + std::to_string(s) + " exceeds the truncation level " + std::to_string(t));
  const auto theta = jordan_sum(trunc->ctx(), sizes);
  std::vector<ExactMatrix> action;
  for (const auto& b : trunc->basis()) action.push_back(power(theta, b.degree));
  return ModuleRep(trunc, {total(sizes)}, std::move(action));
}

std::size_t ext1_by_resolution(std::size_t i, const std::vector<std::size_t>& n, std::size_t t, const FieldCtx& ctx) {
  auto a = truncated_polynomial(t, ctx);
  return ext_dim(jordan_module(a, {i}), jordan_module(a, n), 1);
}

std::size_t ext1_by_extensions(std::size_t i, const std::vector<std::size_t>& n, std::size_t t, const FieldCtx& ctx) {
  const std::size_t dn = total(n);
  if (dn == 0 || i == 0) return 0;
  const auto tm = jordan_block(ctx, i), tn = jordan_sum(ctx, n);
  // theta_E^T has corner sum_{a+b=T-1} theta_N^a X theta_M^b; only terms
  // with both powers nonzero contribute.
  std::vector<std::pair<ExactMatrix, ExactMatrix>> terms;
  for (std::size_t a = 0; a < t; ++a) {
    auto pn = power(tn, a), pm = power(tm, t - 1 - a);
    if (!pn.is_zero() && !pm.is_zero()) terms.emplace_back(std::move(pn), std::move(pm));
  }
  std::size_t cocycles = dn * i;
  if (!terms.empty()) {
    auto cond = linear_operator(ctx, dn, i, [&](const ExactMatrix& x) {
      ExactMatrix s(ctx, dn, i);
      for (const auto& [pn, pm] : terms) s += pn * x * pm;
      return s;
    });
    cocycles -= rank(cond);
  }
  auto cob = linear_operator(ctx, dn, i, [&](const ExactMatrix& f) { return tn * f - f * tm; });
  return cocycles - rank(cob);
}

Ext1Result ext1_nilpotent(std::size_t i, const std::vector<std::size_t>& n, const FieldCtx& ctx, std::optional<std::size_t> t) {
  Ext1Result r;
  r.truncation = t.value_or(std::max<std::size_t>(2, i + total(n)));
  r.by_resolution = ext1_by_resolution(i, n, r.truncation, ctx);
  r.by_extensions = ext1_by_extensions(i, n, r.truncation, ctx);
  if (r.by_resolution != r.by_extensions)
    throw InternalError("ext1_nilpotent: resolution gives " + std::to_string(r.by_resolution) + ", extensions give " +
                        std::to_string(r.by_extensions));
  return r;
}

std::vector<std::size_t> first_summands(std::size_t m) {
  std::vector<std::size_t> out(m);
  std::iota(out.begin(), out.end(), std::size_t{1});
  return out;
}

namespace {

// Hom_k(M_i, V_m) as m x i matrices: row j is the functional paired with v_{j+1}.
struct RowSpaces {
  ExactMatrix first;   // image of Hom_C(M_i, N_m), columns in vectorized coordinates
  ExactMatrix second;  // image of g -> (g_j o theta^j)_j
  std::size_t hom_dim = 0;
};

RowSpaces row_maps(std::size_t i, std::size_t m, const FieldCtx& ctx) {
  RowSpaces out;
  const auto ji = jordan_block(ctx, i);
  std::vector<ExactMatrix> first;
  for (std::size_t j = 1; j <= m; ++j) {
    const auto jj = jordan_block(ctx, j);
    // Hom_C(M_i, M_j): j x i matrices X with J_j X = X J_i.
    auto comm = linear_operator(ctx, j, i, [&](const ExactMatrix& x) { return jj * x - x * ji; });
    auto homs = kernel_basis(comm);
    out.hom_dim += homs.cols();
    // Composing with M_j -> M -> k keeps the e_1 coordinate: row 0 of X.
    for (std::size_t h = 0; h < homs.cols(); ++h) {
      ExactMatrix g(ctx, m, i);
      for (std::size_t b = 0; b < i; ++b) g.set(j - 1, b, homs.at(b * j, h));
      first.push_back(vectorize(g));
    }
  }
  out.first = ExactMatrix::hstack(first, ctx, m * i);
  std::vector<ExactMatrix> powers;
  for (std::size_t j = 1; j <= m; ++j) powers.push_back(power(ji, j));
  out.second = linear_operator(ctx, m, i, [&](const ExactMatrix& g) {
    ExactMatrix h(ctx, m, i);
    for (std::size_t j = 0; j < m; ++j) h.set_block(j, 0, g.block(j, 0, 1, i) * powers[j]);
    return h;
  });
  return out;
}

// Restriction Hom_k(M_{i+1}, V_m) -> Hom_k(M_i, V_m) in vectorized coordinates.
ExactMatrix restriction(std::size_t i, std::size_t m, const FieldCtx& ctx) {
  return linear_operator(ctx, m, i + 1, [&](const ExactMatrix& g) { return g.block(0, 0, m, i); });
}

}  // namespace

CokernelData cokernel_data(std::size_t i, std::size_t m, const FieldCtx& ctx) {
  if (i == 0 || m == 0) throw InputError("k_cokernel_dim needs i, m >= 1");
  auto rs = row_maps(i, m, ctx);
  CokernelData d{i, m, rs.hom_dim, i * m, 0, 0};
  const std::size_t r1 = rank(rs.first), r2 = rank(rs.second);
  if (r1 != rs.hom_dim) throw InternalError("cokernel_data: Hom_C(M_i, N) does not embed in Hom_k(M_i, V)");
  if (!(rs.second * rs.first).is_zero() || r1 + r2 != d.hom_k_dim)
    throw InternalError("cokernel_data: the row is not exact at Hom_k(M_i, V)");
  d.k_dim = d.hom_k_dim - r1;
  d.ext_dim = d.hom_k_dim - d.k_dim;
  return d;
}

std::size_t k_cokernel_dim(std::size_t i, std::size_t m, const FieldCtx& ctx) { return cokernel_data(i, m, ctx).k_dim; }

bool InverseSystemReport::all_surjective() const {
  for (const auto& r : rows)
    if (!r.k_surjective() || !r.ext_surjective()) return false;
  return true;
}

std::string InverseSystemReport::scope_note() {
  return "Finite truncations only: K_i and Ext^1(M_i, N_m) with V cut to m coordinates. "
         "The statement about the injective hull k[x] of the trivial module is not computed.";
}

InverseSystemReport inverse_system_report(std::size_t i_max, std::size_t m, const FieldCtx& ctx) {
  if (i_max == 0 || m == 0) throw InputError("inverse_system_report needs i_max, m >= 1");
  InverseSystemReport rep;
  rep.i_max = i_max;
  rep.m = m;
  std::vector<ExactMatrix> k_spaces;
  for (std::size_t i = 1; i <= i_max; ++i) {
    auto d = cokernel_data(i, m, ctx);
    rep.k_dims.push_back(d.k_dim);
    rep.ext_dims.push_back(d.ext_dim);
    k_spaces.push_back(image_basis(row_maps(i, m, ctx).second));
  }
  for (std::size_t i = 1; i < i_max; ++i) {
    const auto res = restriction(i, m, ctx);
    const auto& ks = k_spaces[i];      // K_{i+1}
    const auto& kt = k_spaces[i - 1];  // K_i
    RestrictionRow row;
    row.i = i;
    row.k_source = rep.k_dims[i];
    row.k_target = rep.k_dims[i - 1];
    auto image = ks.cols() ? res * ks : ExactMatrix(ctx, m * i, 0);
    row.k_rank = rank(image);
    if (rank(ExactMatrix::hstack({kt, image}, ctx, m * i)) != row.k_target)
      throw InternalError("inverse_system_report: restriction leaves K_i");
    row.ext_source = rep.ext_dims[i];
    row.ext_target = rep.ext_dims[i - 1];
    row.ext_rank = rank(ExactMatrix::hstack({kt, res}, ctx, m * i)) - row.k_target;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace hwcat::indlab
