#include "hwcat/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hwcat/field.hpp"

namespace hwcat::weyl {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Weight add(Weight a, const Weight& b, long scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

}  // namespace

// ---------------------------------------------------------------- roots

RootData RootData::make(RootType t) {
  RootData rd;
  rd.type_ = t;
  if (t == RootType::A1) {
    rd.rank_ = 1;
    rd.positive_ = {{{1}, {2}}};
  } else {
    rd.rank_ = 2;
    rd.positive_ = {{{1, 0}, {2, -1}}, {{0, 1}, {-1, 2}}, {{1, 1}, {1, 1}}};
  }
  return rd;
}

RootData RootData::parse(const std::string& name) {
  if (name == "A1") return make(RootType::A1);
  if (name == "A2") return make(RootType::A2);
  throw InputError("unknown root system \"" + name + "\" (expected A1 or A2)");
}

std::string RootData::name() const { return type_ == RootType::A1 ? "A1" : "A2"; }

long RootData::pairing(const Weight& x, const Root& beta) const {
  long s = 0;
  for (std::size_t i = 0; i < rank_; ++i) s += beta.simple_coeffs[i] * x[i];
  return s;
}

bool RootData::dominance_leq(const Weight& lam, const Weight& mu) const {
  // Coefficients of mu - lam in simple roots via the inverse Cartan matrix
  // of type A_r: min(i,j)(r+1-max(i,j))/(r+1).
  const long r = static_cast<long>(rank_);
  for (long i = 1; i <= r; ++i) {
    long num = 0;
    for (long j = 1; j <= r; ++j) num += std::min(i, j) * (r + 1 - std::max(i, j)) * (mu[j - 1] - lam[j - 1]);
    if (num < 0 || num % (r + 1) != 0) return false;
  }
  return true;
}

bool RootData::is_dominant(const Weight& lam) const {
  return std::all_of(lam.begin(), lam.end(), [](long c) { return c >= 0; });
}

// ---------------------------------------------------------------- affine maps

AffineMap AffineMap::identity(std::size_t r) {
  AffineMap m;
  m.linear.assign(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) m.linear[i][i] = 1;
  m.translation.assign(r, 0);
  return m;
}

Weight AffineMap::apply(const Weight& x) const {
  Weight y = translation;
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += linear[i][j] * x[j];
  return y;
}

AffineMap AffineMap::then(const AffineMap& g) const {
  const std::size_t r = translation.size();
  AffineMap out;
  out.linear.assign(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < r; ++j) out.linear[i][j] += linear[i][k] * g.linear[k][j];
  out.translation = apply(g.translation);
  return out;
}

// ---------------------------------------------------------------- group

AffineWeylGroup::AffineWeylGroup(RootData rd, long p) : rd_(std::move(rd)), p_(p) {
  if (p < 2) throw InputError("p must be at least 2");
  gens_.push_back(reflection(rd_.highest_root(), p_));
  for (std::size_t i = 0; i < rd_.rank(); ++i) gens_.push_back(reflection(rd_.simple_root(i), 0));
}

AffineMap AffineWeylGroup::reflection(const Root& beta, long shift) const {
  const std::size_t r = rd_.rank();
  auto m = AffineMap::identity(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m.linear[i][j] -= beta.omega[i] * beta.simple_coeffs[j];
    m.translation[i] = shift * beta.omega[i];
  }
  return m;
}

AffineMap AffineWeylGroup::word_element(const std::vector<std::size_t>& word) const {
  auto w = AffineMap::identity(rd_.rank());
  for (auto s : word) w = w.then(gens_.at(s));
  return w;
}

namespace {

// A point of the fundamental alcove scaled by h, so that it is integral:
// h * (p/h) rho = p rho. Its image under w, in the same scaling.
Weight scaled_alcove_point(const AffineWeylGroup& g, const AffineMap& w) {
  const auto& rd = g.roots();
  const long h = static_cast<long>(rd.coxeter_number());
  Weight x0(rd.rank(), g.p());
  Weight y = w.translation;
  for (auto& c : y) c *= h;
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < x0.size(); ++j) y[i] += w.linear[i][j] * x0[j];
  return y;
}

}  // namespace

std::size_t AffineWeylGroup::length(const AffineMap& w) const {
  const long h = static_cast<long>(rd_.coxeter_number());
  const long wall = p_ * h;
  Weight x0(rd_.rank(), p_);
  auto y = scaled_alcove_point(*this, w);
  std::size_t count = 0;
  for (const auto& beta : rd_.positive_roots()) {
    long a = rd_.pairing(x0, beta), b = rd_.pairing(y, beta);
    count += static_cast<std::size_t>(std::labs(floor_div(a, wall) - floor_div(b, wall)));
  }
  return count;
}

bool AffineWeylGroup::is_minimal_coset_rep(const AffineMap& w) const {
  auto y = scaled_alcove_point(*this, w);
  for (std::size_t i = 0; i < rd_.rank(); ++i)
    if (rd_.pairing(y, rd_.simple_root(i)) <= 0) return false;
  return true;
}

Weight AffineWeylGroup::dot_zero(const AffineMap& w) const { return add(w.apply(rd_.rho()), rd_.rho(), -1); }

std::vector<std::size_t> AffineWeylGroup::reduced_word(const AffineMap& w, bool prefer_largest) const {
  std::vector<std::size_t> word;
  AffineMap cur = w;
  for (std::size_t len = length(cur); len > 0; --len) {
    std::optional<std::size_t> pick;
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      const std::size_t s = prefer_largest ? gens_.size() - 1 - k : k;
      if (length(cur.then(gens_[s])) < len) {
        pick = s;
        break;
      }
    }
    if (!pick) throw InternalError("reduced_word: no descent at positive length");
    word.push_back(*pick);
    cur = cur.then(gens_[*pick]);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

// ---------------------------------------------------------------- windows

std::optional<std::size_t> CosetWindow::find_weight(const Weight& lam) const {
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (reps[i].weight == lam) return i;
  return std::nullopt;
}

CosetWindow generate_coset_reps(const RootData& rd, long p, std::size_t max_length) {
  if (max_length > 12) throw InputError("max length is limited to 12");
  CosetWindow win{AffineWeylGroup(rd, p), max_length, {}};
  const auto& g = win.group;
  std::set<AffineMap> seen;
  auto id = AffineMap::identity(rd.rank());
  win.reps.push_back({id, 0, {}, {}, g.dot_zero(id)});
  seen.insert(id);
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t level_end = win.reps.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (std::size_t s = 0; s < g.num_generators(); ++s) {
        auto u = win.reps[i].element.then(g.generator(s));
        if (seen.count(u) || g.length(u) != len || !g.is_minimal_coset_rep(u)) continue;
        seen.insert(u);
        auto word = win.reps[i].word;
        word.push_back(s);
        win.reps.push_back({u, len, word, g.reduced_word(u, true), g.dot_zero(u)});
      }
    level_begin = level_end;
  }
  return win;
}

namespace {

std::set<AffineMap> subword_products(const AffineWeylGroup& g, const std::vector<std::size_t>& word) {
  std::set<AffineMap> s{AffineMap::identity(g.roots().rank())};
  for (auto letter : word) {
    std::vector<AffineMap> next;
    for (const auto& z : s) next.push_back(z.then(g.generator(letter)));
    s.insert(next.begin(), next.end());
  }
  return s;
}

}  // namespace

bool bruhat_leq(const CosetWindow& w, std::size_t x, std::size_t y) {
  if (x >= w.reps.size() || y >= w.reps.size()) throw InputError("bruhat_leq: representative outside the window");
  const auto& target = w.reps[x].element;
  bool a = subword_products(w.group, w.reps[y].word).count(target) > 0;
  bool b = subword_products(w.group, w.reps[y].alt_word).count(target) > 0;
  if (a != b) throw InternalError("bruhat_leq: two reduced words disagree");
  return a;
}

bool up_arrow_leq(const RootData& rd, long p, const Weight& lam, const Weight& mu) {
  if (lam == mu) return true;
  if (!rd.dominance_leq(lam, mu)) return false;
  const auto rho = rd.rho();
  std::set<Weight> seen{lam};
  std::deque<Weight> todo{lam};
  while (!todo.empty()) {
    auto nu = todo.front();
    todo.pop_front();
    for (const auto& beta : rd.positive_roots()) {
      const long k = rd.pairing(add(nu, rho), beta);
      // s_{beta, np} . nu = nu + (np - k) beta; raising needs np > k.
      for (long n = floor_div(k, p) + 1;; ++n) {
        auto next = add(nu, beta.omega, n * p - k);
        if (!rd.dominance_leq(next, mu)) break;
        if (next == mu) return true;
        if (seen.insert(next).second) todo.push_back(next);
      }
    }
  }
  return false;
}

LinkageReport linkage_report(const RootData& rd, long p, std::size_t max_length) {
  auto win = generate_coset_reps(rd, p, max_length);
  LinkageReport rep;
  rep.type = rd.name();
  rep.p = p;
  rep.coxeter_number = rd.coxeter_number();
  rep.max_length = max_length;
  rep.reps = win.reps;
  std::set<Weight> weights;
  rep.weights_distinct_dominant = true;
  for (const auto& r : win.reps) {
    rep.weights_distinct_dominant = rep.weights_distinct_dominant && rd.is_dominant(r.weight) && weights.insert(r.weight).second;
  }
  std::vector<std::set<AffineMap>> below, below_alt;
  for (const auto& r : win.reps) {
    below.push_back(subword_products(win.group, r.word));
    below_alt.push_back(subword_products(win.group, r.alt_word));
  }
  for (std::size_t y = 0; y < win.reps.size(); ++y)
    for (std::size_t x = 0; x < win.reps.size(); ++x) {
      if (x == y) continue;
      PairVerdict v{x, y, below[y].count(win.reps[x].element) > 0, false};
      if (v.bruhat != (below_alt[y].count(win.reps[x].element) > 0))
        throw InternalError("linkage_report: two reduced words disagree");
      v.up = up_arrow_leq(rd, p, win.reps[x].weight, win.reps[y].weight);
      rep.pairs.push_back(v);
      if (v.bruhat && !v.up) rep.implication_failures.push_back(v);
      if (v.bruhat != v.up) rep.mismatches.push_back(v);
    }
  return rep;
}

std::string weight_to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

}  // namespace hwcat::weyl
