#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hwcat/highest_weight.hpp"

namespace hwcat {

/// Order generated by [Delta(lam):L(mu)] != 0 or [nabla(lam):L(mu)] != 0
/// giving mu <= lam. hw must be a verified structure.
WeightOrder essential_order(const HwStructure& hw);

/// Same costandard composition multiplicities at every weight. Throws
/// InternalError if this disagrees with comparing essential orders.
bool equivalent_structures(const HwStructure& a, const HwStructure& b);

struct StructureClass {
  WeightOrder essential;
  std::vector<std::size_t> representative;  // first passing total order, smallest first
  std::size_t passing_total_orders = 0;
};

struct Enumeration {
  std::size_t total_orders_checked = 0;
  std::vector<StructureClass> classes;
};

/// Checks every total order on the weights and groups the passing ones by
/// essential order. Refuses more than `max_weights` weights.
Enumeration enumerate_hw_structures(HwEngine& eng, std::size_t max_weights = 8);

struct MinimalityResult {
  bool trivial_standard = false;  // Delta(lam) = L(lam) = nabla(lam)
  bool ext2_vanishes = false;     // Ext^2(L(lam), L(lam)) = 0
  bool ext_trivial = false;       // Ext^d(L(lam), L(lam)) = k for d = 0, else 0, up to max_degree
  std::size_t ext2 = 0;
  std::size_t max_degree = 0;
  bool agree() const { return trivial_standard == ext2_vanishes && ext2_vanishes == ext_trivial; }
};

/// Requires a verified duality on the algebra (PreconditionError otherwise).
MinimalityResult minimality_test(HwEngine& eng, const HwStructure& hw, std::size_t lam, std::size_t max_degree);

/// One step of the reconstruction: the remaining weights, the self-Ext^2
/// of each remaining simple over the corner algebra on them, and the pick.
struct PeelStep {
  VertexMask remaining = 0;
  std::vector<std::pair<std::size_t, std::size_t>> self_ext2;  // (weight, dim)
  std::optional<std::size_t> chosen;
};

/// Raised when the data rule out every highest weight structure
/// compatible with the duality. The CLI maps this to exit code 1.
class NotHighestWeight : public std::runtime_error {
 public:
  NotHighestWeight(const std::string& what, std::vector<PeelStep> steps)
      : std::runtime_error(what), steps_(std::move(steps)) {}
  const std::vector<PeelStep>& steps() const { return steps_; }

 private:
  std::vector<PeelStep> steps_;
};

struct Reconstruction {
  WeightOrder order;                // essential order of the verified peel order
  std::vector<std::size_t> peel;    // smallest weight first
  std::vector<PeelStep> steps;
  std::size_t peels_explored = 1;   // complete peel sequences checked
};

/// Peels weights with vanishing self-Ext^2 over the corner algebra of the
/// remaining weights, smallest index first. With at most `explore_limit`
/// weights every admissible choice is followed and all must produce the
/// same essential order (InternalError otherwise). Requires a duality.
Reconstruction reconstruct_unique_order(const AlgebraPtr& a, std::size_t explore_limit = 5);

struct LengthFunction {
  std::vector<std::size_t> length;  // longest strictly decreasing essential chain below each weight
  std::vector<bool> stratum_matches;  // gamma of I(lam) on the stratum is nabla(lam)
  VertexMask stratum(std::size_t d) const;
  bool all_match() const;
};

LengthFunction length_strata(HwEngine& eng, const HwStructure& hw);

struct TiltingModule {
  std::size_t weight = 0;
  ModuleRep module;
  std::vector<std::size_t> standard_multiplicities;    // (T : Delta(mu))
  std::vector<std::size_t> costandard_multiplicities;  // (T : nabla(mu))
  Flag standard_flag;
  Flag costandard_flag;
  std::size_t extensions = 0;  // universal extension steps taken
};

/// Builds T(lam) from Delta(lam) by repeated universal extensions by the
/// standard modules. Checks both flags and indecomposability, throwing
/// InternalError on a breach. hw must be verified.
TiltingModule tilting_module(HwEngine& eng, const HwStructure& hw, std::size_t lam);

/// Order generated by (T(lam):Delta(mu)) != 0 or (T(lam):nabla(mu)) != 0.
WeightOrder tilting_order(const std::vector<TiltingModule>& tiltings, std::size_t n);

/// Universal extension 0 -> c -> e -> s^k -> 0 with k = dim Ext^1(s, c),
/// built as a pushout along the kernel of the projective cover of s.
/// Returns c itself when the Ext group vanishes.
ModuleRep universal_extension(const ModuleRep& c, const ModuleRep& s, std::size_t& k);

}  // namespace hwcat
