#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hwcat/algebra.hpp"

namespace hwcat::corpus {

/// The ground field itself: one vertex, no arrows.
AlgebraPtr field_algebra(const FieldCtx& ctx = FieldCtx::rationals());
/// Path algebra of 1 -> 2 (arrow a).
AlgebraPtr a2_path_algebra(const FieldCtx& ctx = FieldCtx::rationals());
/// Vertices 1, 2 with alpha: 1 -> 2, beta: 2 -> 1 and alpha*beta = 0,
/// carrying the duality alpha <-> beta.
AlgebraPtr zigzag_algebra(const FieldCtx& ctx = FieldCtx::rationals());
/// k[x]/x^2 with the identity duality x -> x.
AlgebraPtr dual_numbers(const FieldCtx& ctx = FieldCtx::rationals());

struct NamedAlgebra {
  std::string name;
  AlgebraPtr algebra;
};
/// The four fixtures above, in the order listed.
std::vector<NamedAlgebra> canonical(const FieldCtx& ctx = FieldCtx::rationals());

struct RandomSpec {
  std::size_t max_vertices = 4;
  std::size_t max_dim = 30;
  std::size_t max_arrows = 6;
};

/// Quiver and relations drawn from a seed: arrows with random endpoints,
/// every path of length 3 set to zero, random zero relations and
/// commutativity relations in length 2. Seeds whose algebra exceeds
/// max_dim are redrawn deterministically.
struct RandomAlgebra {
  std::uint64_t seed = 0;
  Quiver quiver;
  std::vector<Relation> relations;
  AlgebraPtr algebra;
};
RandomAlgebra random_algebra(std::uint64_t seed, const FieldCtx& ctx = FieldCtx::rationals(), const RandomSpec& spec = {});

/// Like random_algebra, but arrows come in opposite pairs and the relations
/// are closed under swapping them, so the algebra carries that duality.
RandomAlgebra random_dual_algebra(std::uint64_t seed, const FieldCtx& ctx = FieldCtx::rationals(), const RandomSpec& spec = {});

}  // namespace hwcat::corpus
