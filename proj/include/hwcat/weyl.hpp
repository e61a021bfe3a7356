#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hwcat::weyl {

/// Integer vector in fundamental-weight coordinates.
using Weight = std::vector<long>;

enum class RootType { A1, A2 };

struct Root {
  std::vector<long> simple_coeffs;  // in terms of the simple roots
  Weight omega;                     // in fundamental-weight coordinates
};

/// Simply laced root data: coroot pairings use the simple-root coefficients.
class RootData {
 public:
  static RootData make(RootType t);
  static RootData parse(const std::string& name);  // "A1" or "A2"

  RootType type() const { return type_; }
  std::string name() const;
  std::size_t rank() const { return rank_; }
  std::size_t coxeter_number() const { return rank_ + 1; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& simple_root(std::size_t i) const { return positive_[i]; }
  const Root& highest_root() const { return positive_.back(); }
  Weight rho() const { return Weight(rank_, 1); }

  /// <x, beta^vee>
  long pairing(const Weight& x, const Root& beta) const;
  /// mu - lam is a sum of simple roots with nonnegative integer coefficients.
  bool dominance_leq(const Weight& lam, const Weight& mu) const;
  bool is_dominant(const Weight& lam) const;

 private:
  RootType type_ = RootType::A1;
  std::size_t rank_ = 1;
  std::vector<Root> positive_;
};

/// x -> A x + b on rho-shifted weight coordinates.
struct AffineMap {
  std::vector<std::vector<long>> linear;
  Weight translation;

  static AffineMap identity(std::size_t r);
  Weight apply(const Weight& x) const;
  AffineMap then(const AffineMap& g) const;  // this o g
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
  auto operator<=>(const AffineMap&) const = default;
};

/// Affine Weyl group W_p with simple reflections s_0 = s_{theta,p} and
/// s_i = s_{alpha_i} (i = 1..rank), acting on rho-shifted coordinates.
class AffineWeylGroup {
 public:
  AffineWeylGroup(RootData rd, long p);

  const RootData& roots() const { return rd_; }
  long p() const { return p_; }
  std::size_t num_generators() const { return rd_.rank() + 1; }
  const AffineMap& generator(std::size_t i) const { return gens_[i]; }
  AffineMap reflection(const Root& beta, long shift) const;  // s_{beta, shift}
  AffineMap word_element(const std::vector<std::size_t>& word) const;

  /// Hyperplanes H_{beta, n p} separating the fundamental alcove from its
  /// image under w.
  std::size_t length(const AffineMap& w) const;
  /// The image of the fundamental alcove lies in the dominant chamber.
  bool is_minimal_coset_rep(const AffineMap& w) const;
  /// w . 0 = w(rho) - rho.
  Weight dot_zero(const AffineMap& w) const;
  /// Greedy descent: strip a length-decreasing generator from the right,
  /// preferring the smallest (or largest) index.
  std::vector<std::size_t> reduced_word(const AffineMap& w, bool prefer_largest = false) const;

 private:
  RootData rd_;
  long p_;
  std::vector<AffineMap> gens_;
};

struct CosetRep {
  AffineMap element;
  std::size_t length = 0;
  std::vector<std::size_t> word;      // reduced, found by the search
  std::vector<std::size_t> alt_word;  // reduced, found by descent
  Weight weight;                      // w . 0
};

/// Minimal coset representatives of W \ W_p up to a length bound, ordered
/// by length and then by discovery.
struct CosetWindow {
  AffineWeylGroup group;
  std::size_t max_length = 0;
  std::vector<CosetRep> reps;
  /// Index of the representative whose weight is lam.
  std::optional<std::size_t> find_weight(const Weight& lam) const;
};

/// Throws InputError for p < 2 or max_length > 12.
CosetWindow generate_coset_reps(const RootData& rd, long p, std::size_t max_length);

/// Subword criterion on the recorded reduced word of y. Checks that the
/// alternative reduced word of y gives the same answer (InternalError
/// otherwise). Throws InputError for indices outside the window.
bool bruhat_leq(const CosetWindow& w, std::size_t x, std::size_t y);

/// lam up mu: a chain of raising reflections s_{beta, n p} . from lam to mu,
/// searched inside the dominance interval [lam, mu].
bool up_arrow_leq(const RootData& rd, long p, const Weight& lam, const Weight& mu);

struct PairVerdict {
  std::size_t x = 0;
  std::size_t y = 0;
  bool bruhat = false;
  bool up = false;
};

struct LinkageReport {
  std::string type;
  long p = 0;
  std::size_t coxeter_number = 0;
  std::size_t max_length = 0;
  std::vector<CosetRep> reps;
  std::vector<PairVerdict> pairs;  // every ordered pair x != y
  bool weights_distinct_dominant = false;
  std::vector<PairVerdict> implication_failures;  // bruhat without up
  std::vector<PairVerdict> mismatches;            // bruhat != up
  bool p_exceeds_h() const { return p > static_cast<long>(coxeter_number); }
  /// Outer implication always, coincidence when p > h.
  bool pass() const { return implication_failures.empty() && (!p_exceeds_h() || mismatches.empty()); }
};

LinkageReport linkage_report(const RootData& rd, long p, std::size_t max_length);

std::string weight_to_string(const Weight& w);

}  // namespace hwcat::weyl
