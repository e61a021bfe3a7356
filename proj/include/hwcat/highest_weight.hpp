#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hwcat/homology.hpp"

namespace hwcat {

/// A partial order on the vertex set, stored as down-sets.
class WeightOrder {
 public:
  WeightOrder() = default;
  /// The discrete order on n weights.
  explicit WeightOrder(std::size_t n);

  /// Reflexive-transitive closure of the strict relations (lower, upper).
  /// Throws InputError when the closure has a cycle.
  static WeightOrder from_relations(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& less);
  /// seq[0] < seq[1] < ... ; every weight must appear once.
  static WeightOrder total(const std::vector<std::size_t>& seq);
  /// "2<1, 3<1" or chains "3<2<1", using vertex labels of the algebra.
  static WeightOrder parse(const BoundQuiverAlgebra& a, const std::string& text);

  std::size_t size() const { return down_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return in_mask(down_[b], a); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }
  /// {mu : mu <= lam}
  VertexMask down(std::size_t lam) const { return down_[lam]; }
  /// {mu : mu >= lam}
  VertexMask up(std::size_t lam) const;
  bool is_ideal(VertexMask m) const;
  bool is_total() const;
  /// Every relation of `coarser` also holds here.
  bool extends(const WeightOrder& coarser) const;

  /// Pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;
  /// Linear extensions listed smallest-first, at most `limit` of them, in
  /// lexicographic order of the weight indices.
  std::vector<std::vector<std::size_t>> linear_extensions(std::size_t limit = 5040) const;
  std::vector<std::size_t> linear_extension() const { return linear_extensions(1).front(); }

  std::string to_string(const std::vector<std::string>& labels) const;

  friend bool operator==(const WeightOrder&, const WeightOrder&) = default;

 private:
  std::vector<VertexMask> down_;
};

/// Enumerates every partial order on n weights (n <= 5).
std::vector<WeightOrder> all_partial_orders(std::size_t n);

/// Names the objects the engine knows how to build and cache.
struct ObjectKey {
  enum class Kind { Simple, Projective, Injective, Standard, Costandard };
  Kind kind = Kind::Simple;
  std::size_t vertex = 0;
  VertexMask mask = 0;  // the down-set for Standard/Costandard
  auto operator<=>(const ObjectKey&) const = default;
};

/// Memoizes the modules and resolutions that the axiom checks and order
/// computations request repeatedly. Not safe for concurrent use.
class HwEngine {
 public:
  explicit HwEngine(AlgebraPtr a);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t size() const { return alg_->num_vertices(); }

  const ModuleRep& object(const ObjectKey& key);
  const ModuleRep& simple(std::size_t v) { return object({ObjectKey::Kind::Simple, v, 0}); }
  const ModuleRep& projective(std::size_t v) { return object({ObjectKey::Kind::Projective, v, 0}); }
  const ModuleRep& injective(std::size_t v) { return object({ObjectKey::Kind::Injective, v, 0}); }
  /// Largest quotient of P(v) with factors in `down`.
  const ModuleRep& standard(std::size_t v, VertexMask down) { return object({ObjectKey::Kind::Standard, v, down}); }
  /// Largest submodule of I(v) with factors in `down`.
  const ModuleRep& costandard(std::size_t v, VertexMask down) { return object({ObjectKey::Kind::Costandard, v, down}); }

  /// Minimal resolution of a cached object, at least `depth` deep.
  const ProjResolution& resolution(const ObjectKey& key, std::size_t depth);
  std::size_t ext(const ObjectKey& m, const ModuleRep& n, std::size_t d);
  std::size_t ext(const ObjectKey& m, const ObjectKey& n, std::size_t d);
  std::size_t hom(const ObjectKey& m, const ObjectKey& n);

 private:
  AlgebraPtr alg_;
  std::map<ObjectKey, ModuleRep> objects_;
  std::map<ObjectKey, ProjResolution> resolutions_;
  std::map<std::tuple<ObjectKey, ObjectKey, std::size_t>, std::size_t> ext_cache_;
};

/// Standard and costandard modules of an order, indexed by weight.
struct HwStructure {
  WeightOrder order;
  std::vector<ModuleRep> standards;
  std::vector<ModuleRep> costandards;

  ObjectKey standard_key(std::size_t v) const { return {ObjectKey::Kind::Standard, v, order.down(v)}; }
  ObjectKey costandard_key(std::size_t v) const { return {ObjectKey::Kind::Costandard, v, order.down(v)}; }
};

HwStructure make_structure(HwEngine& eng, const WeightOrder& order);

/// One axiom evaluated at one weight, with the data needed to reproduce a
/// failure by hand.
struct Verdict {
  std::string axiom;
  std::size_t weight = 0;
  bool pass = true;
  std::optional<std::size_t> other;
  std::optional<std::size_t> degree;
  std::optional<std::size_t> found;
  std::optional<std::size_t> expected;
  std::string note;
};

struct AxiomReport {
  std::string suite;
  WeightOrder order;
  std::vector<Verdict> verdicts;
  bool pass() const;
  std::vector<Verdict> failures() const;
};

AxiomReport check_star_axioms(HwEngine& eng, const WeightOrder& order);
/// With all_ideals set (only allowed for at most 4 weights), injectivity of
/// the costandard modules is additionally tested on every ideal directly.
AxiomReport check_dagger_axioms(HwEngine& eng, const WeightOrder& order, bool all_ideals = false);

/// Runs the dagger suite and returns the structure when it passes.
std::optional<HwStructure> verified_structure(HwEngine& eng, const WeightOrder& order);

struct FlagSection {
  std::size_t weight = 0;
  std::size_t multiplicity = 0;
};

/// A filtration whose subquotients are powers of (co)standard modules,
/// listed bottom to top, read along one linear extension of the order.
struct Flag {
  std::vector<std::size_t> extension;
  std::vector<FlagSection> sections;
};

/// Searches the Gamma-filtrations along linear extensions of the order for
/// one whose layers are costandard powers.
std::optional<Flag> costandard_flag(HwEngine& eng, const HwStructure& hw, const ModuleRep& m);
/// Dual search along trace filtrations for standard powers.
std::optional<Flag> standard_flag(HwEngine& eng, const HwStructure& hw, const ModuleRep& m);

struct FiltrationRecord {
  std::vector<std::size_t> multiplicities;  // indexed by weight
  Flag witness;
};

/// Costandard filtration decided by vanishing of Ext^1(Delta(lam), M), with
/// multiplicities dim Hom(Delta(mu), M). The explicit flag is recomputed and
/// must agree. hw must be a verified structure.
std::optional<FiltrationRecord> good_filtration(HwEngine& eng, const HwStructure& hw, const ModuleRep& m);
/// Standard filtration via Ext^1(M, nabla(lam)) and dim Hom(M, nabla(mu)).
std::optional<FiltrationRecord> standard_filtration(HwEngine& eng, const HwStructure& hw, const ModuleRep& m);

struct BggRow {
  std::size_t lambda = 0;
  std::size_t mu = 0;
  std::optional<std::size_t> flag_multiplicity;  // (I(lam) : nabla(mu))
  std::size_t decomposition = 0;                 // [Delta(mu) : L(lam)]
  bool equal() const { return flag_multiplicity && *flag_multiplicity == decomposition; }
};
std::vector<BggRow> bgg_check(HwEngine& eng, const HwStructure& hw);

struct SigmaRow {
  std::size_t lambda = 0;
  std::size_t standard_side = 0;  // [Delta(mu) : L(lam)]
  std::size_t gamma_side = 0;     // [Gamma_Sigma I(lam) : L(mu)]
  bool equal() const { return standard_side == gamma_side; }
};
/// Throws PreconditionError naming the failed hypothesis when sigma does
/// not contain the down-set of mu, or meets another weight whose
/// costandard module has L(mu) as a factor.
std::vector<SigmaRow> sigma_multiplicity_check(HwEngine& eng, const HwStructure& hw, std::size_t mu, VertexMask sigma);

}  // namespace hwcat
