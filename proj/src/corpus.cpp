#include "hwcat/corpus.hpp"

#include <algorithm>
#include <random>

namespace hwcat::corpus {

AlgebraPtr field_algebra(const FieldCtx& ctx) {
  Quiver q{{"1"}, {}};
  return compile_algebra(q, {}, ctx);
}

AlgebraPtr a2_path_algebra(const FieldCtx& ctx) {
  Quiver q{{"1", "2"}, {{"a", 0, 1}}};
  return compile_algebra(q, {}, ctx);
}

AlgebraPtr zigzag_algebra(const FieldCtx& ctx) {
  Quiver q{{"1", "2"}, {{"alpha", 0, 1}, {"beta", 1, 0}}};
  std::vector<Relation> rels{{{{Scalar(1), {"alpha", "beta"}}}}};
  auto a = compile_algebra(q, rels, ctx);
  DualityCertificate cert{{"alpha", {{Scalar(1), {"beta"}}}}, {"beta", {{Scalar(1), {"alpha"}}}}};
  return with_duality(a, cert);
}

AlgebraPtr dual_numbers(const FieldCtx& ctx) {
  Quiver q{{"1"}, {{"x", 0, 0}}};
  std::vector<Relation> rels{{{{Scalar(1), {"x", "x"}}}}};
  auto a = compile_algebra(q, rels, ctx);
  DualityCertificate cert{{"x", {{Scalar(1), {"x"}}}}};
  return with_duality(a, cert);
}

std::vector<NamedAlgebra> canonical(const FieldCtx& ctx) {
  return {{"k", field_algebra(ctx)}, {"kA2", a2_path_algebra(ctx)}, {"zigzag", zigzag_algebra(ctx)}, {"dual_numbers", dual_numbers(ctx)}};
}

namespace {

std::vector<std::vector<std::size_t>> paths_of_length(const Quiver& q, std::size_t len) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t at) -> void {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      if (!cur.empty() && q.arrows[a].source != at) continue;
      cur.push_back(a);
      self(self, q.arrows[a].target);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::string> names(const Quiver& q, const std::vector<std::size_t>& w) {
  std::vector<std::string> n;
  for (auto a : w) n.push_back(q.arrows[a].name);
  return n;
}

}  // namespace

RandomAlgebra random_algebra(std::uint64_t seed, const FieldCtx& ctx, const RandomSpec& spec) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 17);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RandomAlgebra r;
    r.seed = seed;
    std::uniform_int_distribution<std::size_t> nvd(1, spec.max_vertices);
    const std::size_t nv = nvd(rng);
    for (std::size_t v = 0; v < nv; ++v) r.quiver.vertices.push_back(std::to_string(v + 1));
    std::uniform_int_distribution<std::size_t> nad(0, spec.max_arrows);
    std::uniform_int_distribution<std::size_t> vd(0, nv - 1);
    std::uniform_int_distribution<int> pct(0, 99);
    const std::size_t na = nad(rng);
    for (std::size_t i = 0; i < na; ++i) {
      std::size_t s = vd(rng), t = vd(rng);
      if (s == t && pct(rng) < 70) continue;  // loops kept rare
      r.quiver.arrows.push_back({"a" + std::to_string(r.quiver.arrows.size()), s, t});
    }
    for (const auto& w : paths_of_length(r.quiver, 3)) r.relations.push_back({{{Scalar(1), names(r.quiver, w)}}});
    auto len2 = paths_of_length(r.quiver, 2);
    std::vector<bool> used(len2.size(), false);
    for (std::size_t i = 0; i < len2.size(); ++i) {
      if (pct(rng) < 30) {
        r.relations.push_back({{{Scalar(1), names(r.quiver, len2[i])}}});
        used[i] = true;
      }
    }
    for (std::size_t i = 0; i < len2.size(); ++i)
      for (std::size_t j = i + 1; j < len2.size(); ++j) {
        if (used[i] || used[j]) continue;
        const auto& a = r.quiver.arrows;
        if (a[len2[i].front()].source != a[len2[j].front()].source || a[len2[i].back()].target != a[len2[j].back()].target)
          continue;
        if (pct(rng) < 50) {
          std::uniform_int_distribution<long> cd(1, 3);
          r.relations.push_back({{{Scalar(1), names(r.quiver, len2[i])}, {Scalar(-cd(rng)), names(r.quiver, len2[j])}}});
          used[i] = used[j] = true;
        }
      }
    r.algebra = compile_algebra(r.quiver, r.relations, ctx, 3);
    if (r.algebra->dim() <= spec.max_dim) return r;
  }
  throw InternalError("random_algebra: no admissible draw for seed " + std::to_string(seed));
}

RandomAlgebra random_dual_algebra(std::uint64_t seed, const FieldCtx& ctx, const RandomSpec& spec) {
  std::mt19937_64 rng(seed * 0xD1B54A32D192ED03ull + 5);
  std::uniform_int_distribution<int> pct(0, 99);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RandomAlgebra r;
    r.seed = seed;
    std::uniform_int_distribution<std::size_t> nvd(1, spec.max_vertices);
    const std::size_t nv = nvd(rng);
    for (std::size_t v = 0; v < nv; ++v) r.quiver.vertices.push_back(std::to_string(v + 1));
    // Arrows come in pairs a_k: i -> j, b_k: j -> i swapped by the duality.
    std::vector<std::size_t> partner;
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = i + 1; j < nv; ++j) {
        if (partner.size() + 2 > spec.max_arrows || pct(rng) >= 60) continue;
        const std::string k = std::to_string(partner.size() / 2);
        r.quiver.arrows.push_back({"a" + k, i, j});
        r.quiver.arrows.push_back({"b" + k, j, i});
        partner.push_back(r.quiver.arrows.size() - 1);
        partner.push_back(r.quiver.arrows.size() - 2);
      }
    auto dual_path = [&](const std::vector<std::size_t>& w) {
      std::vector<std::size_t> d;
      for (auto it = w.rbegin(); it != w.rend(); ++it) d.push_back(partner[*it]);
      return d;
    };
    for (const auto& w : paths_of_length(r.quiver, 3)) r.relations.push_back({{{Scalar(1), names(r.quiver, w)}}});
    auto len2 = paths_of_length(r.quiver, 2);
    std::vector<bool> used(len2.size(), false);
    auto index_of = [&](const std::vector<std::size_t>& w) {
      return static_cast<std::size_t>(std::find(len2.begin(), len2.end(), w) - len2.begin());
    };
    for (std::size_t i = 0; i < len2.size(); ++i) {
      if (used[i] || pct(rng) >= 35) continue;
      const std::size_t j = index_of(dual_path(len2[i]));
      r.relations.push_back({{{Scalar(1), names(r.quiver, len2[i])}}});
      used[i] = true;
      if (j != i) {
        r.relations.push_back({{{Scalar(1), names(r.quiver, len2[j])}}});
        used[j] = true;
      }
    }
    for (std::size_t i = 0; i < len2.size(); ++i)
      for (std::size_t j = i + 1; j < len2.size(); ++j) {
        if (used[i] || used[j]) continue;
        const auto& a = r.quiver.arrows;
        if (a[len2[i].front()].source != a[len2[j].front()].source || a[len2[i].back()].target != a[len2[j].back()].target)
          continue;
        if (pct(rng) >= 40) continue;
        const std::size_t di = index_of(dual_path(len2[i])), dj = index_of(dual_path(len2[j]));
        r.relations.push_back({{{Scalar(1), names(r.quiver, len2[i])}, {Scalar(-1), names(r.quiver, len2[j])}}});
        r.relations.push_back({{{Scalar(1), names(r.quiver, len2[di])}, {Scalar(-1), names(r.quiver, len2[dj])}}});
        used[i] = used[j] = used[di] = used[dj] = true;
      }
    auto alg = compile_algebra(r.quiver, r.relations, ctx, 3);
    if (alg->dim() > spec.max_dim) continue;
    DualityCertificate cert;
    for (std::size_t k = 0; k < r.quiver.arrows.size(); ++k)
      cert[r.quiver.arrows[k].name] = {{Scalar(1), {r.quiver.arrows[partner[k]].name}}};
    r.algebra = with_duality(alg, cert);
    return r;
  }
  throw InternalError("random_dual_algebra: no admissible draw for seed " + std::to_string(seed));
}

}  // namespace hwcat::corpus
