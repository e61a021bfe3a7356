#pragma once

// Independent reference computations used only by the tests. None of these
// call the library's row reduction; they are deliberately naive.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hwcat/exact_matrix.hpp"
#include "hwcat/module.hpp"

namespace oracle {

using hwcat::ExactMatrix;
using hwcat::FieldCtx;
using hwcat::Scalar;

/// Determinant by cofactor expansion over the matrix's own field.
inline Scalar cofactor_det(const ExactMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  const FieldCtx& ctx = m.ctx();
  if (rows.empty()) return Scalar(1);
  Scalar acc(0);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (m.entry_is_zero(rows[0], cols[j])) continue;
    std::vector<std::size_t> r(rows.begin() + 1, rows.end()), c;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j) c.push_back(cols[k]);
    Scalar term = ctx.mul(m.at(rows[0], cols[j]), cofactor_det(m, r, c));
    acc = j % 2 ? ctx.sub(acc, term) : ctx.add(acc, term);
  }
  return acc;
}

/// Rank as the size of the largest nonvanishing minor.
inline std::size_t minor_rank(const ExactMatrix& m) {
  std::size_t best = 0;
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = std::min(r, c); k >= 1; --k) {
    bool found = false;
    std::vector<std::size_t> rs, cs;
    std::function<bool(std::size_t)> choose_cols;
    std::function<bool(std::size_t)> choose_rows = [&](std::size_t start) -> bool {
      if (rs.size() == k) return choose_cols(0);
      for (std::size_t i = start; i < r; ++i) {
        rs.push_back(i);
        if (choose_rows(i + 1)) return true;
        rs.pop_back();
      }
      return false;
    };
    choose_cols = [&](std::size_t start) -> bool {
      if (cs.size() == k) return !cofactor_det(m, rs, cs).is_zero();
      for (std::size_t j = start; j < c; ++j) {
        cs.push_back(j);
        if (choose_cols(j + 1)) return true;
        cs.pop_back();
      }
      return false;
    };
    found = choose_rows(0);
    if (found) {
      best = k;
      break;
    }
  }
  return best;
}

/// All vectors of F_2^n killed by m (m over F_2).
inline std::vector<ExactMatrix> f2_null_vectors(const ExactMatrix& m) {
  std::vector<ExactMatrix> out;
  const std::size_t n = m.cols();
  for (std::uint64_t code = 0; code < (std::uint64_t(1) << n); ++code) {
    ExactMatrix v(m.ctx(), n, 1);
    for (std::size_t i = 0; i < n; ++i)
      if ((code >> i) & 1) v.set(i, 0, Scalar(1));
    if ((m * v).is_zero()) out.push_back(v);
  }
  return out;
}

/// Bit-vector model of a module over F_2 with total dimension at most 64.
/// Each action matrix is flattened to act on the full coordinate space.
struct F2Module {
  std::size_t n = 0;
  std::vector<std::vector<std::uint64_t>> action;  // action[b][i] = image of basis vector i
  std::vector<std::uint64_t> weight_mask;           // coordinates belonging to each vertex
};

inline F2Module to_f2(const hwcat::ModuleRep& m) {
  F2Module o;
  o.n = m.total_dim();
  const auto& a = *m.algebra();
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < m.dim(v); ++i) mask |= std::uint64_t(1) << (m.offset(v) + i);
    o.weight_mask.push_back(mask);
  }
  for (std::size_t b = 0; b < a.dim(); ++b) {
    const auto& e = a.basis()[b];
    std::vector<std::uint64_t> img(o.n, 0);
    for (std::size_t j = 0; j < m.dim(e.source); ++j)
      for (std::size_t i = 0; i < m.dim(e.target); ++i)
        if (!m.act(b).entry_is_zero(i, j)) img[m.offset(e.source) + j] |= std::uint64_t(1) << (m.offset(e.target) + i);
    o.action.push_back(img);
  }
  return o;
}

inline std::uint64_t apply(const std::vector<std::uint64_t>& img, std::uint64_t v) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; v; ++i, v >>= 1)
    if (v & 1) r ^= img[i];
  return r;
}

/// Rank over F_2 of a set of bit vectors (xor basis).
inline std::size_t f2_rank(const std::vector<std::uint64_t>& vs) {
  std::vector<std::uint64_t> basis;
  for (auto v : vs) {
    for (auto b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
  }
  return basis.size();
}

/// Vectors spanning the cyclic submodule v*A.
inline std::vector<std::uint64_t> cyclic(const F2Module& m, std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (const auto& img : m.action) out.push_back(apply(img, v));
  return out;
}

/// Largest submodule with composition factors in omega: the sum of every
/// cyclic submodule killed by the idempotents outside omega, found by
/// enumerating all 2^n vectors.
inline std::size_t gamma_dim_bruteforce(const F2Module& m, std::uint64_t omega, const std::vector<std::size_t>& idempotents) {
  std::vector<std::uint64_t> acc;
  for (std::uint64_t v = 1; v < (std::uint64_t(1) << m.n); ++v) {
    auto span = cyclic(m, v);
    bool inside = true;
    for (std::size_t w = 0; w < idempotents.size() && inside; ++w) {
      if ((omega >> w) & 1) continue;
      for (auto u : span) inside = inside && apply(m.action[idempotents[w]], u) == 0;
    }
    if (inside) acc.insert(acc.end(), span.begin(), span.end());
  }
  return f2_rank(acc);
}

/// Smallest submodule whose quotient has factors in omega: generated by
/// the weight spaces outside omega.
inline std::size_t co_gamma_dim_bruteforce(const F2Module& m, std::uint64_t omega) {
  std::vector<std::uint64_t> acc;
  for (std::size_t w = 0; w < m.weight_mask.size(); ++w) {
    if ((omega >> w) & 1) continue;
    for (std::size_t i = 0; i < m.n; ++i)
      if ((m.weight_mask[w] >> i) & 1) {
        auto span = cyclic(m, std::uint64_t(1) << i);
        acc.insert(acc.end(), span.begin(), span.end());
      }
  }
  return m.n - f2_rank(acc);
}

/// Reduced xor basis, used as a canonical key for a subspace.
inline std::vector<std::uint64_t> f2_reduced(std::vector<std::uint64_t> vs) {
  std::vector<std::uint64_t> basis;
  for (auto v : vs) {
    for (auto b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
  }
  std::sort(basis.begin(), basis.end(), std::greater<>());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (i != j) basis[j] = std::min(basis[j], basis[j] ^ basis[i]);
  std::sort(basis.begin(), basis.end());
  return basis;
}

inline std::vector<std::uint64_t> f2_elements(const std::vector<std::uint64_t>& basis) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t code = 0; code < (std::uint64_t(1) << basis.size()); ++code) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if ((code >> i) & 1) v ^= basis[i];
    out.push_back(v);
  }
  return out;
}

inline bool f2_contains(const std::vector<std::uint64_t>& basis, std::uint64_t v) {
  for (auto b : basis) v = std::min(v, v ^ b);
  return v == 0;
}

/// Every submodule, as reduced bases, found by closing under sums of
/// cyclic submodules.
inline std::vector<std::vector<std::uint64_t>> all_submodules(const F2Module& m) {
  std::set<std::vector<std::uint64_t>> seen{{}};
  std::vector<std::vector<std::uint64_t>> todo{{}};
  while (!todo.empty()) {
    auto cur = todo.back();
    todo.pop_back();
    for (std::uint64_t v = 1; v < (std::uint64_t(1) << m.n); ++v) {
      if (f2_contains(cur, v)) continue;
      auto gens = cur;
      auto span = cyclic(m, v);
      gens.insert(gens.end(), span.begin(), span.end());
      auto next = f2_reduced(gens);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

/// Shape of one costandard module: dimension vector and socle weight.
struct CostandardShape {
  std::vector<std::size_t> dims;
  std::size_t weight = 0;
};

/// Searches every chain of submodules, in any order of layers, for one
/// whose layers T/S have simple socle L(mu) and the dimension vector of
/// nabla(mu). Returns the layer counts of the first chain found.
inline std::optional<std::vector<std::size_t>> f2_costandard_flag(const F2Module& m, const std::vector<CostandardShape>& shapes,
                                                              const std::vector<std::size_t>& idempotents,
                                                              const std::vector<std::size_t>& radical) {
  auto subs = all_submodules(m);
  auto layer_weight = [&](const std::vector<std::uint64_t>& s, const std::vector<std::uint64_t>& t) -> std::optional<std::size_t> {
    if (t.size() <= s.size()) return std::nullopt;
    for (auto v : s)
      if (!f2_contains(t, v)) return std::nullopt;
    std::vector<std::size_t> dims;
    for (auto mask : m.weight_mask) {
      std::vector<std::uint64_t> ts, ss;
      for (auto v : t) ts.push_back(v & mask);
      for (auto v : s) ss.push_back(v & mask);
      dims.push_back(f2_rank(ts) - f2_rank(ss));
    }
    std::vector<std::uint64_t> soc = s;
    for (auto x : f2_elements(t)) {
      bool in_soc = true;
      for (auto r : radical) in_soc = in_soc && f2_contains(s, apply(m.action[r], x));
      if (in_soc) soc.push_back(x);
    }
    if (f2_rank(soc) != s.size() + 1) return std::nullopt;
    for (const auto& sh : shapes) {
      if (sh.dims != dims) continue;
      for (auto x : f2_elements(f2_reduced(soc)))
        if (!f2_contains(s, apply(m.action[idempotents[sh.weight]], x))) return sh.weight;
    }
    return std::nullopt;
  };
  std::map<std::vector<std::uint64_t>, std::optional<std::vector<std::size_t>>> memo;
  const std::size_t full = m.n;
  std::function<std::optional<std::vector<std::size_t>>(const std::vector<std::uint64_t>&)> rec =
      [&](const std::vector<std::uint64_t>& s) -> std::optional<std::vector<std::size_t>> {
    if (s.size() == full) return std::vector<std::size_t>(shapes.size(), 0);
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    std::optional<std::vector<std::size_t>> found;
    for (const auto& t : subs) {
      auto w = layer_weight(s, t);
      if (!w) continue;
      auto rest = rec(t);
      if (!rest) continue;
      (*rest)[*w] += 1;
      found = rest;
      break;
    }
    memo[s] = found;
    return found;
  };
  return rec({});
}

}  // namespace oracle
