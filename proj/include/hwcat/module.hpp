#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hwcat/algebra.hpp"

namespace hwcat {

/// A finite-dimensional right module as a representation: one vector space
/// per vertex and, for every basis element b from s to t, the matrix of
/// right multiplication by b from weight s to weight t.
class ModuleRep {
 public:
  ModuleRep() = default;
  ModuleRep(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<ExactMatrix> action);
  /// Zero module.
  explicit ModuleRep(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  const FieldCtx& ctx() const { return alg_->ctx(); }
  std::size_t num_vertices() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  VertexMask support() const;
  /// Offset of weight v in the flattened coordinates.
  std::size_t offset(std::size_t v) const;

  const ExactMatrix& act(std::size_t b) const { return action_[b]; }
  const std::vector<ExactMatrix>& actions() const { return action_; }

  /// rho(xy) = rho(y) rho(x) on all basis pairs and idempotents act as
  /// identities on their weight.
  bool check_action() const;

 private:
  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<ExactMatrix> action_;
};

/// A graded linear map: one block (dim N_v x dim M_v) per vertex.
struct ModuleMap {
  std::vector<ExactMatrix> blocks;

  static ModuleMap zero(const ModuleRep& m, const ModuleRep& n);
  static ModuleMap identity(const ModuleRep& m);
  ModuleMap compose_after(const ModuleMap& first) const;  // (*this) o first
  ModuleMap operator+(const ModuleMap& o) const;
  ModuleMap scaled(const Scalar& c) const;
  bool is_zero() const;
  /// Block diagonal matrix on flattened coordinates.
  ExactMatrix flatten(const FieldCtx& ctx) const;
  std::size_t rank() const;
};

bool is_homomorphism(const ModuleRep& m, const ModuleRep& n, const ModuleMap& f);

/// Per-vertex subspace of a module, columns spanning each weight.
using GradedSubspace = std::vector<ExactMatrix>;

/// A submodule presented as a module together with its inclusion.
struct Submodule {
  ModuleRep module;
  ModuleMap inclusion;
};

/// A quotient presented as a module together with its projection.
struct QuotientModule {
  ModuleRep module;
  ModuleMap projection;
  /// Per-vertex complement basis in the ambient weight spaces; quotient
  /// coordinates are coefficients along these columns.
  GradedSubspace lift;
};

ModuleRep simple(const AlgebraPtr& a, std::size_t v);
ModuleRep projective(const AlgebraPtr& a, std::size_t v);
ModuleRep injective(const AlgebraPtr& a, std::size_t v);
ModuleRep direct_sum(const std::vector<ModuleRep>& parts);
ModuleRep direct_power(const ModuleRep& m, std::size_t k);

/// The submodule generated by the given vectors (closure under the action).
Submodule generated_submodule(const ModuleRep& m, const GradedSubspace& gens);
/// The subspace must already be a submodule.
Submodule submodule(const ModuleRep& m, const GradedSubspace& sub);
QuotientModule quotient(const ModuleRep& m, const GradedSubspace& sub);
GradedSubspace image_of(const ModuleMap& f, const ModuleRep& target);
GradedSubspace kernel_of(const ModuleMap& f, const ModuleRep& source);
GradedSubspace whole(const ModuleRep& m);
GradedSubspace nothing(const ModuleRep& m);
GradedSubspace sum_of(const GradedSubspace& a, const GradedSubspace& b);
std::size_t total_dim(const GradedSubspace& s);

Submodule radical(const ModuleRep& m);
Submodule socle(const ModuleRep& m);
QuotientModule top(const ModuleRep& m);

/// Composition multiplicities [M:L(v)], read off weight dimensions.
std::vector<std::size_t> composition_multiplicities(const ModuleRep& m);

/// Largest submodule with all composition factors in omega, built by
/// accumulating the omega-part of successive socle layers.
Submodule gamma(const ModuleRep& m, VertexMask omega);
/// Largest quotient with all composition factors in omega: kill the trace
/// of the projectives outside omega.
QuotientModule co_gamma(const ModuleRep& m, VertexMask omega);
/// Trace of the projectives P(v), v in mask, i.e. the submodule generated
/// by those weight spaces.
Submodule trace_of(const ModuleRep& m, VertexMask mask);

/// Basis of Hom_A(M,N) as the kernel of the commutation system over the
/// generators.
std::vector<ModuleMap> hom_space(const ModuleRep& m, const ModuleRep& n);
std::size_t hom_dim(const ModuleRep& m, const ModuleRep& n);

/// Isomorphism by searching for an invertible combination of a Hom basis.
/// A positive answer is certified exactly; a negative one is decided
/// exhaustively over small prime fields and probabilistically otherwise.
bool is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed = 0x5eed);

/// End(M) is k plus a nilpotent ideal.
bool is_indecomposable(const ModuleRep& m);

/// The phi-twisted linear dual; requires a verified duality on the algebra.
ModuleRep apply_duality(const ModuleRep& m);

/// Restriction of an A-module to a corner algebra fAf.
ModuleRep restrict_to_corner(const ModuleRep& m, const AlgebraPtr& corner);
/// An A/AeA-module viewed as an A-module.
ModuleRep inflate_from_quotient(const ModuleRep& m, const AlgebraPtr& parent);
/// An A-module supported on omega viewed as an A/AeA-module.
ModuleRep restrict_to_quotient(const ModuleRep& m, const AlgebraPtr& quotient);

}  // namespace hwcat
