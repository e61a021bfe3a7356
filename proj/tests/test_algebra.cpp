#include <algorithm>
#include <set>

#include "doctest.h"
#include "hwcat/algebra.hpp"
#include "hwcat/corpus.hpp"

using namespace hwcat;

namespace {

std::set<std::string> labels(const AlgebraPtr& a) {
  std::set<std::string> s;
  for (const auto& b : a->basis()) s.insert(b.label);
  return s;
}

bool contains_subword(const std::vector<std::size_t>& w, const std::vector<std::size_t>& sub) {
  return std::search(w.begin(), w.end(), sub.begin(), sub.end()) != w.end();
}

// Monomial algebras: the basis is the set of paths avoiding every zero
// relation as a subword. Enumerated directly from the quiver.
struct MonomialOracle {
  std::size_t dim = 0;
  std::vector<std::vector<std::size_t>> words;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
};

MonomialOracle monomial_basis(const Quiver& q, const std::vector<std::vector<std::size_t>>& zeros, std::size_t maxlen) {
  MonomialOracle o;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    o.words.push_back({});
    o.ends.push_back({v, v});
  }
  std::vector<std::size_t> frontier;
  for (std::size_t i = 0; i < o.words.size(); ++i) frontier.push_back(i);
  for (std::size_t len = 1; len <= maxlen; ++len) {
    std::vector<std::size_t> next;
    for (auto i : frontier)
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != o.ends[i].second) continue;
        auto w = o.words[i];
        w.push_back(a);
        bool bad = false;
        for (const auto& z : zeros) bad = bad || contains_subword(w, z);
        if (bad) continue;
        o.words.push_back(w);
        o.ends.push_back({o.ends[i].first, q.arrows[a].target});
        next.push_back(o.words.size() - 1);
      }
    frontier = next;
  }
  o.dim = o.words.size();
  return o;
}

bool is_monomial(const corpus::RandomAlgebra& r) {
  for (const auto& rel : r.relations)
    if (rel.terms.size() != 1) return false;
  return true;
}

std::vector<std::vector<std::size_t>> zero_words(const corpus::RandomAlgebra& r) {
  std::vector<std::vector<std::size_t>> z;
  for (const auto& rel : r.relations) {
    std::vector<std::size_t> w;
    for (const auto& n : rel.terms[0].path) w.push_back(r.quiver.arrow_index(n));
    z.push_back(w);
  }
  return z;
}

}  // namespace

TEST_CASE("compile: the field") {
  auto a = corpus::field_algebra();
  CHECK(a->dim() == 1);
  CHECK(labels(a) == std::set<std::string>{"e1"});
}

TEST_CASE("compile: A2 path algebra has dim 3") {
  auto a = corpus::a2_path_algebra();
  CHECK(a->dim() == 3);
  CHECK(labels(a) == std::set<std::string>{"e1", "e2", "a"});
  Quiver q{{"1", "2"}, {{"a", 0, 1}}};
  CHECK(monomial_basis(q, {}, 4).dim == 3);
}

TEST_CASE("compile: zigzag algebra has basis e1 e2 alpha beta beta*alpha") {
  auto a = corpus::zigzag_algebra();
  CHECK(a->dim() == 5);
  CHECK(labels(a) == std::set<std::string>{"e1", "e2", "alpha", "beta", "beta*alpha"});
  Quiver q{{"1", "2"}, {{"alpha", 0, 1}, {"beta", 1, 0}}};
  CHECK(monomial_basis(q, {{0, 1}}, 8).dim == 5);
  CHECK(a->check_associativity());
}

TEST_CASE("compile: errors") {
  Quiver loop{{"1"}, {{"x", 0, 0}}};
  CHECK_THROWS_WITH_AS(compile_algebra(loop, {}, FieldCtx::rationals(), 5), doctest::Contains("not finite-dimensional"),
                       InputError);
  Quiver two{{"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}, {"c", 0, 1}}};
  std::vector<Relation> bad{{{{Scalar(1), {"a", "b"}}, {Scalar(1), {"b", "a"}}}}};
  CHECK_THROWS_WITH_AS(compile_algebra(two, bad, FieldCtx::rationals()), doctest::Contains("not parallel"), InputError);
  std::vector<Relation> broken{{{{Scalar(1), {"a", "c"}}}}};
  CHECK_THROWS_WITH_AS(compile_algebra(two, broken, FieldCtx::rationals()), doctest::Contains("do not compose"), InputError);
  std::vector<Relation> short_rel{{{{Scalar(1), {"a"}}}}};
  CHECK_THROWS_AS(compile_algebra(two, short_rel, FieldCtx::rationals()), InputError);
}

TEST_CASE("commutativity relations identify parallel paths") {
  Quiver sq{{"1", "2", "3", "4"}, {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}}};
  std::vector<Relation> comm{{{{Scalar(1), {"a", "b"}}, {Scalar(-2), {"c", "d"}}}}};
  auto a = compile_algebra(sq, comm, FieldCtx::rationals());
  CHECK(a->dim() == 9);
  CHECK(a->check_associativity());
  auto ab = a->path_element({0, 1}, 0);
  auto cd = a->path_element({2, 3}, 0);
  CHECK(ab == cd.scaled(Scalar(2)));
}

TEST_CASE("corner algebras of the zigzag algebra") {
  auto z = corpus::zigzag_algebra();
  auto c1 = corner_algebra(z, bit(0));
  CHECK(c1->dim() == 1);
  auto c2 = corner_algebra(z, bit(1));
  CHECK(c2->dim() == 2);
  CHECK(labels(c2) == std::set<std::string>{"e2", "beta*alpha"});
  // k[x]/x^2: the nonidempotent element squares to zero.
  REQUIRE(c2->generators().size() == 1);
  auto x = c2->unit_vector(c2->generators()[0]);
  CHECK(c2->multiply(x, x).is_zero());
  CHECK(c2->check_associativity());
  CHECK_THROWS_AS(corner_algebra(z, 0), InputError);
  // Duality descends to the corner.
  REQUIRE(c2->duality());
  CHECK(is_anti_involution(*c2, *c2->duality()));
}

TEST_CASE("corner and quotient on all vertices reproduce the algebra") {
  for (const auto& [name, a] : corpus::canonical()) {
    CAPTURE(name);
    for (auto derived : {corner_algebra(a, a->all_vertices()), quotient_algebra(a, a->all_vertices())}) {
      REQUIRE(derived->dim() == a->dim());
      for (std::size_t i = 0; i < a->dim(); ++i) {
        CHECK(derived->basis()[i].label == a->basis()[i].label);
        for (std::size_t j = 0; j < a->dim(); ++j) CHECK(derived->product(i, j) == a->product(i, j));
      }
    }
  }
}

TEST_CASE("quotient algebras") {
  auto z = corpus::zigzag_algebra();
  auto q2 = quotient_algebra(z, bit(1));
  CHECK(labels(q2) == std::set<std::string>{"e2"});
  auto a2 = corpus::a2_path_algebra();
  auto q1 = quotient_algebra(a2, bit(0));
  CHECK(labels(q1) == std::set<std::string>{"e1"});
  auto q_kx = quotient_algebra(corpus::dual_numbers(), 0);
  CHECK(q_kx->dim() == 0);
}

TEST_CASE("duality certificates") {
  auto k = corpus::field_algebra();
  CHECK(verify_duality(k, {}));
  Quiver q{{"1", "2"}, {{"alpha", 0, 1}, {"beta", 1, 0}}};
  auto z = compile_algebra(q, {{{{Scalar(1), {"alpha", "beta"}}}}}, FieldCtx::rationals());
  CHECK(verify_duality(z, {{"alpha", {{Scalar(1), {"beta"}}}}, {"beta", {{Scalar(1), {"alpha"}}}}}));
  // Scaling one arrow breaks involutivity.
  CHECK_FALSE(verify_duality(z, {{"alpha", {{Scalar(2), {"beta"}}}}, {"beta", {{Scalar(1), {"alpha"}}}}}));
  auto a2 = corpus::a2_path_algebra();
  CHECK_FALSE(verify_duality(a2, {{"a", {}}}));
  CHECK_THROWS_AS(verify_duality(a2, {{"a", {{Scalar(1), {"a"}}}}}), InputError);
  CHECK_THROWS_AS(verify_duality(a2, {}), InputError);
  // An identity duality on a commutative local algebra.
  auto kx = corpus::dual_numbers();
  CHECK(verify_duality(kx, {{"x", {{Scalar(1), {"x"}}}}}));
  CHECK(verify_duality(kx, {{"x", {{Scalar(-1), {"x"}}}}}));
}

TEST_CASE("with_duality rejects a failing certificate") {
  Quiver q{{"1", "2"}, {{"alpha", 0, 1}, {"beta", 1, 0}}};
  auto z = compile_algebra(q, {{{{Scalar(1), {"alpha", "beta"}}}}}, FieldCtx::rationals());
  CHECK_THROWS_AS(with_duality(z, {{"alpha", {{Scalar(3), {"beta"}}}}, {"beta", {{Scalar(1), {"alpha"}}}}}),
                  PreconditionError);
}

TEST_CASE("random algebras: associativity, slices, monomial oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto field = seed % 3 == 0 ? FieldCtx::prime(101) : FieldCtx::rationals();
    auto r = corpus::random_algebra(seed, field);
    const auto& a = r.algebra;
    CAPTURE(seed);
    CHECK(a->dim() <= 30);
    CHECK(a->num_vertices() <= 4);
    CHECK(a->check_associativity());
    std::size_t total = 0;
    for (std::size_t s = 0; s < a->num_vertices(); ++s)
      for (std::size_t t = 0; t < a->num_vertices(); ++t) total += a->slice(s, t).size();
    CHECK(total == a->dim());
    if (is_monomial(r)) {
      auto o = monomial_basis(r.quiver, zero_words(r), 4);
      CHECK(o.dim == a->dim());
      // A/AeA for monomial algebras: paths avoiding the removed vertices.
      for (VertexMask omega = 0; omega <= a->all_vertices(); ++omega) {
        std::size_t expect = 0;
        for (std::size_t i = 0; i < o.words.size(); ++i) {
          bool ok = in_mask(omega, o.ends[i].first);
          for (auto arr : o.words[i]) ok = ok && in_mask(omega, r.quiver.arrows[arr].target);
          expect += ok;
        }
        CHECK(quotient_algebra(a, omega)->dim() == expect);
      }
    }
    for (VertexMask keep = 1; keep <= a->all_vertices(); ++keep) {
      auto c = corner_algebra(a, keep);
      CHECK(c->check_associativity());
    }
  }
}
