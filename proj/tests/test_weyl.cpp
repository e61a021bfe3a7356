#include <map>
#include <set>

#include "doctest.h"
#include "hwcat/field.hpp"
#include "hwcat/weyl.hpp"

using namespace hwcat;
using namespace hwcat::weyl;

namespace {

// Dominant weights of the dot orbit of 0 with their lengths, found from the
// weights alone: lam + rho = w(rho) + p * (root lattice element), strictly
// dominant, and the length is the number of walls <x, beta> = n p crossed
// between the fundamental alcove and x. Valid when p >= h.
std::map<Weight, std::size_t> orbit_oracle(const RootData& rd, long p, std::size_t max_length) {
  std::set<Weight> finite_orbit{rd.rho()}, todo{rd.rho()};
  while (!todo.empty()) {
    auto x = *todo.begin();
    todo.erase(todo.begin());
    for (std::size_t i = 0; i < rd.rank(); ++i) {
      const auto& a = rd.simple_root(i);
      Weight y = x;
      const long c = rd.pairing(x, a);
      for (std::size_t j = 0; j < y.size(); ++j) y[j] -= c * a.omega[j];
      if (finite_orbit.insert(y).second) todo.insert(y);
    }
  }
  std::map<Weight, std::size_t> out;
  const long range = static_cast<long>(max_length) + 3;
  for (const auto& wr : finite_orbit)
    for (long a = -range; a <= range; ++a)
      for (long b = (rd.rank() == 2 ? -range : 0); b <= (rd.rank() == 2 ? range : 0); ++b) {
        Weight x = wr;
        for (std::size_t j = 0; j < x.size(); ++j) {
          x[j] += p * a * rd.simple_root(0).omega[j];
          if (rd.rank() == 2) x[j] += p * b * rd.simple_root(1).omega[j];
        }
        bool interior = true;
        std::size_t len = 0;
        for (const auto& beta : rd.positive_roots()) {
          const long v = rd.pairing(x, beta);
          if (v <= 0 || v % p == 0) interior = false;
          else len += static_cast<std::size_t>(v / p);
        }
        if (!interior || len > max_length) continue;
        Weight lam = x;
        for (auto& c : lam) c -= 1;
        out[lam] = len;
      }
  return out;
}

// Bruhat by listing all 2^len subwords of y's recorded word.
bool subword_oracle(const CosetWindow& w, std::size_t x, std::size_t y) {
  const auto& word = w.reps[y].word;
  for (std::size_t mask = 0; mask < (std::size_t{1} << word.size()); ++mask) {
    std::vector<std::size_t> sub;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (mask >> i & 1) sub.push_back(word[i]);
    if (w.group.word_element(sub) == w.reps[x].element) return true;
  }
  return false;
}

std::vector<long> first_coords(const CosetWindow& w) {
  std::vector<long> out;
  for (const auto& r : w.reps) out.push_back(r.weight[0]);
  return out;
}

const RootData A1 = RootData::make(RootType::A1);
const RootData A2 = RootData::make(RootType::A2);

}  // namespace

TEST_CASE("root data") {
  CHECK(A1.coxeter_number() == 2);
  CHECK(A2.coxeter_number() == 3);
  for (const auto* rd : {&A1, &A2})
    for (std::size_t i = 0; i < rd->rank(); ++i) CHECK(rd->pairing(rd->rho(), rd->simple_root(i)) == 1);
  CHECK(A2.pairing(A2.rho(), A2.highest_root()) == 2);
  CHECK(RootData::parse("A2").name() == "A2");
  CHECK_THROWS_AS(RootData::parse("B2"), InputError);
  CHECK(A2.dominance_leq({0, 0}, {1, 1}));
  CHECK(A2.dominance_leq({0, 0}, {3, 0}));
  CHECK_FALSE(A2.dominance_leq({0, 0}, {1, 0}));
  CHECK_FALSE(A2.dominance_leq({1, 1}, {0, 0}));
  CHECK(A1.dominance_leq({0}, {4}));
  CHECK_FALSE(A1.dominance_leq({0}, {3}));
}

TEST_CASE("coset representatives: examples") {
  auto a1 = generate_coset_reps(A1, 3, 8);
  REQUIRE(a1.reps.size() == 9);
  CHECK(a1.reps[0].length == 0);
  CHECK(a1.reps[0].weight == Weight{0});
  CHECK(a1.reps[0].element == AffineMap::identity(1));
  auto coords = first_coords(a1);
  coords.resize(5);
  CHECK(coords == std::vector<long>{0, 4, 6, 10, 12});
  for (std::size_t i = 0; i < a1.reps.size(); ++i) CHECK(a1.reps[i].length == i);

  auto a2 = generate_coset_reps(A2, 5, 2);
  std::vector<std::size_t> per_length(3, 0);
  for (const auto& r : a2.reps) ++per_length[r.length];
  CHECK(per_length == std::vector<std::size_t>{1, 1, 2});
  CHECK(a2.reps[1].word == std::vector<std::size_t>{0});

  CHECK_THROWS_AS(generate_coset_reps(A1, 1, 3), InputError);
  CHECK_THROWS_AS(generate_coset_reps(A2, 5, 13), InputError);
}

TEST_CASE("coset representatives against the weight oracle") {
  for (auto [rd, p] : std::vector<std::pair<RootData, long>>{{A1, 2}, {A1, 3}, {A1, 5}, {A1, 7}, {A2, 3}, {A2, 4}, {A2, 5}, {A2, 7}}) {
    CAPTURE(rd.name());
    CAPTURE(p);
    const std::size_t maxlen = rd.rank() == 1 ? 12 : 8;
    auto win = generate_coset_reps(rd, p, maxlen);
    std::map<Weight, std::size_t> got;
    for (const auto& r : win.reps) {
      CHECK(rd.is_dominant(r.weight));
      CHECK(got.emplace(r.weight, r.length).second);
    }
    CHECK(got == orbit_oracle(rd, p, maxlen));
  }
  auto a2 = generate_coset_reps(A2, 5, 3);
  CHECK(a2.reps.size() == orbit_oracle(A2, 5, 3).size());
  CHECK(a2.reps.size() == 6);
}

TEST_CASE("group laws and lengths") {
  for (auto [rd, p] : std::vector<std::pair<RootData, long>>{{A1, 3}, {A2, 2}, {A2, 5}}) {
    auto win = generate_coset_reps(rd, p, 7);
    const auto& g = win.group;
    const auto id = AffineMap::identity(rd.rank());
    for (std::size_t s = 0; s < g.num_generators(); ++s) {
      CHECK(g.generator(s).then(g.generator(s)) == id);
      CHECK(g.length(g.generator(s)) == 1);
    }
    for (const auto& r : win.reps) {
      CHECK(g.word_element(r.word) == r.element);
      CHECK(g.word_element(r.alt_word) == r.element);
      CHECK(r.word.size() == r.length);
      CHECK(r.alt_word.size() == r.length);
      CHECK(g.length(r.element) == r.length);
      CHECK(g.is_minimal_coset_rep(r.element));
      for (std::size_t s = 0; s < g.num_generators(); ++s) {
        const long a = static_cast<long>(g.length(r.element.then(g.generator(s))));
        CHECK(std::labs(a - static_cast<long>(r.length)) == 1);
        const long b = static_cast<long>(g.length(g.generator(s).then(r.element)));
        CHECK(std::labs(b - static_cast<long>(r.length)) == 1);
      }
      // Left factors of minimal representatives are minimal representatives.
      for (std::size_t k = 0; k <= r.word.size(); ++k) {
        std::vector<std::size_t> prefix(r.word.begin(), r.word.begin() + static_cast<long>(k));
        CHECK(g.is_minimal_coset_rep(g.word_element(prefix)));
      }
    }
    // The finite Weyl group fixes the fundamental alcove's chamber only at the identity.
    for (std::size_t s = 1; s < g.num_generators(); ++s) CHECK_FALSE(g.is_minimal_coset_rep(g.generator(s)));
  }
}

TEST_CASE("Bruhat order examples") {
  auto a1 = generate_coset_reps(A1, 3, 8);
  for (std::size_t y = 0; y < a1.reps.size(); ++y) CHECK(bruhat_leq(a1, 0, y));
  auto i4 = *a1.find_weight({4}), i6 = *a1.find_weight({6});
  CHECK(bruhat_leq(a1, i4, i6));
  CHECK_FALSE(bruhat_leq(a1, i6, i4));
  CHECK_THROWS_AS(bruhat_leq(a1, 0, 99), InputError);

  auto a2 = generate_coset_reps(A2, 5, 6);
  std::vector<std::size_t> len2;
  for (std::size_t i = 0; i < a2.reps.size(); ++i)
    if (a2.reps[i].length == 2) len2.push_back(i);
  REQUIRE(len2.size() == 2);
  CHECK_FALSE(bruhat_leq(a2, len2[0], len2[1]));
  CHECK_FALSE(bruhat_leq(a2, len2[1], len2[0]));
}

TEST_CASE("Bruhat order against subword enumeration") {
  for (auto [rd, p] : std::vector<std::pair<RootData, long>>{{A1, 3}, {A2, 2}, {A2, 5}}) {
    auto win = generate_coset_reps(rd, p, 6);
    for (std::size_t x = 0; x < win.reps.size(); ++x)
      for (std::size_t y = 0; y < win.reps.size(); ++y) {
        CAPTURE(x);
        CAPTURE(y);
        const bool b = bruhat_leq(win, x, y);
        CHECK(b == subword_oracle(win, x, y));
        if (b) CHECK(win.reps[x].length <= win.reps[y].length);
      }
  }
}

TEST_CASE("up-arrow order") {
  CHECK(up_arrow_leq(A1, 3, {0}, {0}));
  CHECK(up_arrow_leq(A1, 3, {0}, {4}));
  CHECK(up_arrow_leq(A1, 3, {4}, {6}));
  CHECK(up_arrow_leq(A1, 3, {0}, {12}));
  CHECK_FALSE(up_arrow_leq(A1, 3, {6}, {4}));
  CHECK_FALSE(up_arrow_leq(A1, 3, {0}, {2}));

  for (auto [rd, p] : std::vector<std::pair<RootData, long>>{{A1, 3}, {A2, 2}, {A2, 5}}) {
    auto win = generate_coset_reps(rd, p, 6);
    const std::size_t n = win.reps.size();
    std::vector<std::vector<bool>> up(n, std::vector<bool>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) up[x][y] = up_arrow_leq(rd, p, win.reps[x].weight, win.reps[y].weight);
    for (std::size_t x = 0; x < n; ++x) {
      CHECK(up[x][x]);
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && win.reps[x].weight != win.reps[y].weight) CHECK_FALSE((up[x][y] && up[y][x]));
        if (up[x][y]) CHECK(rd.dominance_leq(win.reps[x].weight, win.reps[y].weight));
        for (std::size_t z = 0; z < n; ++z)
          if (up[x][y] && up[y][z]) CHECK(up[x][z]);
      }
    }
  }
}

TEST_CASE("linkage reports") {
  auto a1 = linkage_report(A1, 3, 8);
  CHECK(a1.p_exceeds_h());
  CHECK(a1.weights_distinct_dominant);
  CHECK(a1.implication_failures.empty());
  CHECK(a1.mismatches.empty());
  CHECK(a1.pass());
  CHECK(a1.pairs.size() == 9 * 8);
  for (const auto& v : a1.pairs) CHECK(v.bruhat == (v.x < v.y));

  auto a2 = linkage_report(A2, 5, 6);
  CHECK(a2.p_exceeds_h());
  CHECK(a2.weights_distinct_dominant);
  CHECK(a2.implication_failures.empty());
  CHECK(a2.mismatches.empty());
  CHECK(a2.pass());
  std::size_t comparable = 0;
  for (const auto& v : a2.pairs) comparable += v.bruhat;
  CHECK(comparable < a2.pairs.size() / 2);

  auto a2_7 = linkage_report(A2, 7, 6);
  CHECK(a2_7.pass());
  CHECK(a2_7.mismatches.empty());

  // Below the Coxeter number the coincidence hypothesis fails: report only.
  auto small = linkage_report(A2, 2, 6);
  CHECK_FALSE(small.p_exceeds_h());
  CHECK(small.pairs.size() == small.reps.size() * (small.reps.size() - 1));
}
