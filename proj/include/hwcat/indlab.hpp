#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hwcat/module.hpp"

namespace hwcat::indlab {

/// k[theta]/theta^T as a one-vertex bound quiver algebra.
AlgebraPtr truncated_polynomial(std::size_t t, const FieldCtx& ctx = FieldCtx::rationals());

/// Nilpotent Jordan block of size i: theta e_b = e_{b-1}, theta e_1 = 0.
ExactMatrix jordan_block(const FieldCtx& ctx, std::size_t i);
/// Block diagonal sum of Jordan blocks of the given sizes.
ExactMatrix jordan_sum(const FieldCtx& ctx, const std::vector<std::size_t>& sizes);

/// M_{sizes[0]} + M_{sizes[1]} + ... as a module over a truncation.
/// Throws InputError if some size exceeds the truncation level.
ModuleRep jordan_module(const AlgebraPtr& trunc, const std::vector<std::size_t>& sizes);

/// Ext^1 over k[theta]/theta^T from a minimal projective resolution.
std::size_t ext1_by_resolution(std::size_t i, const std::vector<std::size_t>& n, std::size_t t, const FieldCtx& ctx);

/// Ext^1 by classifying extensions 0 -> N -> E -> M_i -> 0: theta_E is
/// block upper triangular with corner X, subject to theta_E^T = 0, modulo
/// the coboundaries theta_N F - F theta_M.
std::size_t ext1_by_extensions(std::size_t i, const std::vector<std::size_t>& n, std::size_t t, const FieldCtx& ctx);

struct Ext1Result {
  std::size_t truncation = 0;
  std::size_t by_resolution = 0;
  std::size_t by_extensions = 0;
  std::size_t value() const { return by_resolution; }
};

/// Ext^1(M_i, sum of M_j for j in n) in nilpotent k[theta]-modules, computed
/// over the truncation T (default: i + sum(n), the stability threshold).
/// Throws InternalError if the two computations disagree.
Ext1Result ext1_nilpotent(std::size_t i, const std::vector<std::size_t>& n, const FieldCtx& ctx = FieldCtx::rationals(),
                          std::optional<std::size_t> t = {});

/// N_m = M_1 + ... + M_m.
std::vector<std::size_t> first_summands(std::size_t m);

/// The exact row 0 -> Hom(M_i, N_m) -> Hom_k(M_i, V_m) -> Hom_k(M_i, V_m)
/// -> Ext^1(M_i, N_m) -> 0 coming from 0 -> N -> M (x) V -> M (x) V -> 0,
/// with M = k[x] and V_m spanned by the first m basis vectors.
struct CokernelData {
  std::size_t i = 0;
  std::size_t m = 0;
  std::size_t hom_dim = 0;      // Hom_C(M_i, N_m)
  std::size_t hom_k_dim = 0;    // Hom_k(M_i, V_m) = i m
  std::size_t k_dim = 0;        // cokernel of the first map, equal to the image of the second
  std::size_t ext_dim = 0;      // hom_k_dim - k_dim
};

/// Computes K_i both as a cokernel and as an image, checking exactness in
/// the middle (InternalError otherwise). Requires i, m >= 1.
CokernelData cokernel_data(std::size_t i, std::size_t m, const FieldCtx& ctx = FieldCtx::rationals());
std::size_t k_cokernel_dim(std::size_t i, std::size_t m, const FieldCtx& ctx = FieldCtx::rationals());

struct RestrictionRow {
  std::size_t i = 0;  // the map goes from level i + 1 to level i
  std::size_t k_source = 0;
  std::size_t k_target = 0;
  std::size_t k_rank = 0;
  std::size_t ext_source = 0;
  std::size_t ext_target = 0;
  std::size_t ext_rank = 0;
  bool k_surjective() const { return k_rank == k_target; }
  bool ext_surjective() const { return ext_rank == ext_target; }
  std::size_t ext_kernel() const { return ext_source - ext_rank; }
};

struct InverseSystemReport {
  std::size_t i_max = 0;
  std::size_t m = 0;
  std::vector<std::size_t> k_dims;    // K_1 .. K_{i_max}
  std::vector<std::size_t> ext_dims;  // Ext^1(M_i, N_m) for i = 1 .. i_max
  std::vector<RestrictionRow> rows;   // i = 1 .. i_max - 1
  bool all_surjective() const;
  static std::string scope_note();
};

/// Restrictions along M_i -> M_{i+1} on K and on Ext^1, with exact ranks.
InverseSystemReport inverse_system_report(std::size_t i_max, std::size_t m, const FieldCtx& ctx = FieldCtx::rationals());

}  // namespace hwcat::indlab
