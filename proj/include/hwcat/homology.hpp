#pragma once

#include <optional>
#include <vector>

#include "hwcat/module.hpp"

namespace hwcat {

/// One projective term P_d = sum_k P(v_k) of a resolution.
struct ResolutionTerm {
  std::vector<std::size_t> vertices;  // top of P_d, one entry per summand
  ModuleRep module;
  /// For d >= 1: image of the k-th generator of P_d, as a column in weight
  /// vertices[k] of P_{d-1}. Entries are indexed by (summand j of P_{d-1},
  /// basis element of e_{v_j} A e_{v_k}).
  std::vector<ExactMatrix> generator_images;
  /// P_d -> P_{d-1}, or the augmentation P_0 -> M for d = 0.
  ModuleMap differential;
};

/// Minimal projective resolution computed up to a fixed degree.
class ProjResolution {
 public:
  const ModuleRep& target() const { return target_; }
  const std::vector<ResolutionTerm>& terms() const { return terms_; }
  /// True when the kernel became zero: terms beyond the last are zero.
  bool complete() const { return complete_; }
  std::size_t computed_depth() const { return terms_.empty() ? 0 : terms_.size() - 1; }
  /// Number of summands P(v) in degree d (zero beyond a complete resolution).
  std::size_t multiplicity(std::size_t d, std::size_t v) const;
  /// Whether degree d is available (computed or known to vanish).
  bool covers(std::size_t d) const { return complete_ || d < terms_.size(); }

  /// Every generator image lies in the radical of the previous term.
  bool is_minimal() const;
  /// d_{i} d_{i+1} = 0 and rank bookkeeping im = ker at every junction,
  /// including surjectivity of the augmentation.
  bool is_exact() const;

 private:
  friend ProjResolution min_proj_resolution(const ModuleRep&, std::size_t, std::size_t);
  ModuleRep target_;
  std::vector<ResolutionTerm> terms_;
  bool complete_ = false;
};

/// Terms P_0..P_depth (fewer if the resolution ends earlier). A nonzero
/// max_term_dim stops the computation before any term larger than that.
ProjResolution min_proj_resolution(const ModuleRep& m, std::size_t depth, std::size_t max_term_dim = 0);

/// dim Ext^d(M, N) from the cohomology of Hom(P_., N). Needs degrees d and d+1.
std::size_t ext_dim(const ProjResolution& res, const ModuleRep& n, std::size_t d);
std::size_t ext_dim(const ModuleRep& m, const ModuleRep& n, std::size_t d);
/// dim Ext^d(M, L(v)) read off the minimal resolution.
std::size_t ext_dim_simple(const ProjResolution& res, std::size_t v, std::size_t d);

/// Cartan matrix C[l][m] = dim e_l A e_m = [P(l):L(m)].
ExactMatrix cartan_matrix(const BoundQuiverAlgebra& a);

struct FullnessRow {
  std::size_t source = 0;  // vertex labels in the ambient algebra
  std::size_t target = 0;
  std::size_t degree = 0;
  std::size_t dim_ambient = 0;
  std::size_t dim_sub = 0;
  bool equal() const { return dim_ambient == dim_sub; }
};

struct FullnessReport {
  VertexMask omega = 0;
  std::size_t max_degree = 0;
  std::optional<bool> omega_is_ideal;
  std::vector<FullnessRow> rows;
  bool all_equal() const;
};

/// Compares Ext^d(L(m), L(n)) over A and over A/AeA for m, n in omega and
/// d <= dmax (default dim A + 2).
FullnessReport extension_fullness_report(const AlgebraPtr& a, VertexMask omega, std::optional<std::size_t> dmax = {});

}  // namespace hwcat
