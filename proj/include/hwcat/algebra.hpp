#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hwcat/exact_matrix.hpp"

namespace hwcat {

/// Subsets of the vertex set. Algebras are limited to 64 vertices.
using VertexMask = std::uint64_t;
inline bool in_mask(VertexMask m, std::size_t v) { return (m >> v) & 1u; }
inline VertexMask bit(std::size_t v) { return VertexMask(1) << v; }
inline VertexMask full_mask(std::size_t n) { return n >= 64 ? ~VertexMask(0) : (bit(n) - 1); }

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t vertex_index(const std::string& label) const;
  std::size_t arrow_index(const std::string& name) const;
};

/// One summand coeff * path of a relation or a duality image. Paths are
/// lists of arrow names read left to right (first arrow first).
struct PathTerm {
  Scalar coeff;
  std::vector<std::string> path;
};

struct Relation {
  std::vector<PathTerm> terms;
};

/// Arrow name -> image under the proposed anti-automorphism.
using DualityCertificate = std::map<std::string, std::vector<PathTerm>>;

struct BasisElement {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t degree = 0;  // path length of the representative
  std::string label;
  std::vector<std::size_t> word;  // arrow indices in the root quiver
};

/// Sparse coordinate vector over the algebra basis: sorted, nonzero entries.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/// A basic finite-dimensional algebra kQ/I with an explicit basis of path
/// classes. Paths compose left to right and modules are right modules, so
/// a basis element from s to t sends weight s of a module to weight t.
class BoundQuiverAlgebra {
 public:
  const FieldCtx& ctx() const { return ctx_; }
  /// The quiver of the compiled ancestor; basis words index its arrows.
  const Quiver& root_quiver() const { return *root_quiver_; }
  std::size_t num_vertices() const { return vertex_labels_.size(); }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  std::size_t vertex_index(const std::string& label) const;
  VertexMask all_vertices() const { return full_mask(num_vertices()); }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t idempotent(std::size_t v) const { return idempotents_[v]; }
  bool is_idempotent(std::size_t b) const { return basis_[b].degree == 0; }
  /// Basis elements generating the radical: arrows for compiled algebras, a
  /// complement of rad^2 in rad for derived ones.
  const std::vector<std::size_t>& generators() const { return generators_; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * basis_.size() + j]; }
  /// Basis indices spanning e_s A e_t, in basis order.
  const std::vector<std::size_t>& slice(std::size_t s, std::size_t t) const { return slices_[s * num_vertices() + t]; }

  /// Coordinates of x*y for elements given as dense columns.
  ExactMatrix multiply(const ExactMatrix& x, const ExactMatrix& y) const;
  ExactMatrix unit_vector(std::size_t b) const;
  /// Image in the algebra of a path of root-quiver arrows (compiled algebras only).
  ExactMatrix path_element(const std::vector<std::size_t>& word, std::size_t source) const;

  /// Ancestor bookkeeping for corner and quotient algebras.
  const AlgebraPtr& parent() const { return parent_; }
  const std::vector<std::size_t>& parent_index() const { return parent_index_; }
  const std::vector<std::size_t>& vertex_parent() const { return vertex_parent_; }
  /// For quotient algebras: rows = this basis, columns = parent basis.
  const std::optional<ExactMatrix>& reduction() const { return reduction_; }
  bool is_compiled() const { return !parent_; }

  /// Verified anti-automorphism as a matrix on the basis (column j = image of b_j).
  const std::optional<ExactMatrix>& duality() const { return duality_; }

  bool check_associativity() const;
  std::size_t path_cap() const { return cap_; }

 private:
  friend AlgebraPtr compile_algebra(const Quiver&, const std::vector<Relation>&, const FieldCtx&, std::size_t);
  friend AlgebraPtr corner_algebra(const AlgebraPtr&, VertexMask);
  friend AlgebraPtr quotient_algebra(const AlgebraPtr&, VertexMask);
  friend AlgebraPtr with_duality(const AlgebraPtr&, const DualityCertificate&);
  friend ExactMatrix duality_matrix(const BoundQuiverAlgebra&, const DualityCertificate&);

  void finish();

  FieldCtx ctx_ = FieldCtx::rationals();
  std::shared_ptr<const Quiver> root_quiver_;
  std::vector<std::string> vertex_labels_;
  std::vector<BasisElement> basis_;
  std::vector<SparseVec> table_;
  std::vector<std::size_t> idempotents_;
  std::vector<std::size_t> generators_;
  std::vector<std::vector<std::size_t>> slices_;
  std::vector<std::size_t> arrow_basis_;  // root arrow -> basis index (compiled only)
  AlgebraPtr parent_;
  std::vector<std::size_t> parent_index_;
  std::vector<std::size_t> vertex_parent_;
  std::optional<ExactMatrix> reduction_;
  std::optional<ExactMatrix> duality_;
  std::size_t cap_ = 0;
};

inline constexpr std::size_t kDefaultPathCap = 12;

/// Basis of kQ/<rels> by closing the relations under arrow multiplication
/// and reducing path spaces. Fails with InputError when nonzero classes
/// survive at length `cap`.
AlgebraPtr compile_algebra(const Quiver& q, const std::vector<Relation>& rels, const FieldCtx& ctx,
                           std::size_t cap = kDefaultPathCap);
/// The corner algebra fAf, f the sum of the idempotents in `keep`.
AlgebraPtr corner_algebra(const AlgebraPtr& a, VertexMask keep);
/// A/AeA with e the sum of the idempotents outside `omega`.
AlgebraPtr quotient_algebra(const AlgebraPtr& a, VertexMask omega);

/// Basis-level matrix of the anti-homomorphism determined by the arrow
/// images (compiled algebras only). No axioms are checked here.
ExactMatrix duality_matrix(const BoundQuiverAlgebra& a, const DualityCertificate& cert);
/// Checks phi(e_v) = e_v, phi(xy) = phi(y)phi(x) on basis pairs and phi^2 = 1.
bool is_anti_involution(const BoundQuiverAlgebra& a, const ExactMatrix& phi);

/// True iff the certificate induces an involutive anti-automorphism fixing
/// every vertex idempotent. Throws InputError for malformed certificates.
bool verify_duality(const AlgebraPtr& a, const DualityCertificate& cert);
/// Copy of `a` carrying the verified duality. Throws PreconditionError when
/// verification fails.
AlgebraPtr with_duality(const AlgebraPtr& a, const DualityCertificate& cert);

std::string mask_to_string(const BoundQuiverAlgebra& a, VertexMask m);

}  // namespace hwcat
