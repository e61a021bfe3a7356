#include "hwcat/exact_matrix.hpp"

#include <sstream>

namespace hwcat {

namespace {

struct QOps {
  using T = mpq_class;
  static bool zero(const T& x) { return sgn(x) == 0; }
  static T inv(const T& x) { return T(1) / x; }
  // a -= f * b
  static void axpy_neg(T& a, const T& f, const T& b) {
    if (!zero(b)) a -= f * b;
  }
  static void mul_into(T& a, const T& f) { a *= f; }
};

struct FpOps {
  using T = std::uint32_t;
  std::uint64_t p;
  bool zero(T x) const { return x == 0; }
  T inv(T x) const {
    std::uint64_t r = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<T>(r);
  }
  void axpy_neg(T& a, T f, T b) const {
    if (b == 0) return;
    std::uint64_t prod = static_cast<std::uint64_t>(f) * b % p;
    a = static_cast<T>((a + p - prod) % p);
  }
  void mul_into(T& a, T f) const { a = static_cast<T>(static_cast<std::uint64_t>(a) * f % p); }
};

template <class Ops, class T>
std::vector<std::size_t> rref_inplace(const Ops& ops, std::vector<T>& a, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!ops.zero(a[i * cols + c])) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    T inv = ops.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) ops.mul_into(a[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ops.zero(a[i * cols + c])) continue;
      T f = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) ops.axpy_neg(a[i * cols + j], f, a[r * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

ExactMatrix::ExactMatrix(FieldCtx ctx, std::size_t rows, std::size_t cols) : ctx_(ctx), rows_(rows), cols_(cols) {
  if (ctx_.is_rational())
    q_.assign(rows * cols, mpq_class(0));
  else
    f_.assign(rows * cols, 0u);
}

ExactMatrix ExactMatrix::identity(FieldCtx ctx, std::size_t n) {
  ExactMatrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

ExactMatrix ExactMatrix::from_rows(FieldCtx ctx, const std::vector<std::vector<long>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(ctx, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, Scalar(rows[i][j]));
  }
  return m;
}

ExactMatrix ExactMatrix::column(FieldCtx ctx, const std::vector<long>& entries) {
  ExactMatrix m(ctx, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, Scalar(entries[i]));
  return m;
}

Scalar ExactMatrix::at(std::size_t i, std::size_t j) const {
  if (ctx_.is_rational()) return Scalar(q_[i * cols_ + j]);
  return Scalar(static_cast<long>(f_[i * cols_ + j]));
}

void ExactMatrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (ctx_.is_rational())
    q_[i * cols_ + j] = v.value();
  else
    f_[i * cols_ + j] = ctx_.residue(v.value());
}

void ExactMatrix::add_scaled(std::size_t i, std::size_t j, const Scalar& c, const Scalar& v) {
  if (ctx_.is_rational()) {
    q_[i * cols_ + j] += c.value() * v.value();
  } else {
    std::uint64_t p = ctx_.characteristic();
    std::uint64_t prod = static_cast<std::uint64_t>(ctx_.residue(c.value())) * ctx_.residue(v.value()) % p;
    f_[i * cols_ + j] = static_cast<std::uint32_t>((f_[i * cols_ + j] + prod) % p);
  }
}

bool ExactMatrix::entry_is_zero(std::size_t i, std::size_t j) const {
  return ctx_.is_rational() ? sgn(q_[i * cols_ + j]) == 0 : f_[i * cols_ + j] == 0;
}

bool ExactMatrix::is_zero() const {
  if (ctx_.is_rational()) {
    for (const auto& x : q_)
      if (sgn(x) != 0) return false;
    return true;
  }
  for (auto x : f_)
    if (x != 0) return false;
  return true;
}

void ExactMatrix::check_same_shape(const ExactMatrix& o, const char* what) const {
  if (ctx_ != o.ctx_) throw InputError(std::string(what) + ": field mismatch");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError(std::string(what) + ": shape mismatch");
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (ctx_ != o.ctx_) throw InputError("matrix product: field mismatch");
  if (cols_ != o.rows_) throw InputError("matrix product: shape mismatch");
  ExactMatrix r(ctx_, rows_, o.cols_);
  if (ctx_.is_rational()) {
    mpq_class t;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& a = q_[i * cols_ + k];
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const mpq_class& b = o.q_[k * o.cols_ + j];
          if (sgn(b) == 0) continue;
          mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
          r.q_[i * o.cols_ + j] += t;
        }
      }
  } else {
    std::uint64_t p = ctx_.characteristic();
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t a = f_[i * cols_ + k];
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          std::uint64_t b = o.f_[k * o.cols_ + j];
          if (b == 0) continue;
          auto& dst = r.f_[i * o.cols_ + j];
          dst = static_cast<std::uint32_t>((dst + a * b) % p);
        }
      }
  }
  return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  ExactMatrix r = *this;
  r += o;
  return r;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  check_same_shape(o, "matrix sum");
  if (ctx_.is_rational()) {
    for (std::size_t i = 0; i < q_.size(); ++i) q_[i] += o.q_[i];
  } else {
    std::uint64_t p = ctx_.characteristic();
    for (std::size_t i = 0; i < f_.size(); ++i) f_[i] = static_cast<std::uint32_t>((f_[i] + std::uint64_t(o.f_[i])) % p);
  }
  return *this;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + o.scaled(Scalar(-1)); }

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
  ExactMatrix r = *this;
  if (ctx_.is_rational()) {
    for (auto& x : r.q_) x *= c.value();
  } else {
    std::uint64_t p = ctx_.characteristic(), cc = ctx_.residue(c.value());
    for (auto& x : r.f_) x = static_cast<std::uint32_t>(x * cc % p);
  }
  return r;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (ctx_.is_rational())
        r.q_[j * rows_ + i] = q_[i * cols_ + j];
      else
        r.f_[j * rows_ + i] = f_[i * cols_ + j];
    }
  return r;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InputError("block out of range");
  ExactMatrix r(ctx_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      if (ctx_.is_rational())
        r.q_[i * nc + j] = q_[(r0 + i) * cols_ + c0 + j];
      else
        r.f_[i * nc + j] = f_[(r0 + i) * cols_ + c0 + j];
    }
  return r;
}

void ExactMatrix::set_block(std::size_t r0, std::size_t c0, const ExactMatrix& b) {
  if (b.ctx_ != ctx_) throw InputError("set_block: field mismatch");
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw InputError("set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      if (ctx_.is_rational())
        q_[(r0 + i) * cols_ + c0 + j] = b.q_[i * b.cols_ + j];
      else
        f_[(r0 + i) * cols_ + c0 + j] = b.f_[i * b.cols_ + j];
    }
}

void ExactMatrix::add_block(std::size_t r0, std::size_t c0, const ExactMatrix& b, const Scalar& c) {
  if (b.ctx_ != ctx_) throw InputError("add_block: field mismatch");
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw InputError("add_block out of range");
  if (ctx_.is_rational()) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const mpq_class& v = b.q_[i * b.cols_ + j];
        if (sgn(v) != 0) q_[(r0 + i) * cols_ + c0 + j] += c.value() * v;
      }
  } else {
    std::uint64_t p = ctx_.characteristic(), cc = ctx_.residue(c.value());
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        std::uint64_t v = b.f_[i * b.cols_ + j];
        if (v == 0) continue;
        auto& dst = f_[(r0 + i) * cols_ + c0 + j];
        dst = static_cast<std::uint32_t>((dst + v * cc) % p);
      }
  }
}

ExactMatrix ExactMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  ExactMatrix r(ctx_, rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) r.set_block(0, k, col(idx[k]));
  return r;
}

ExactMatrix ExactMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  ExactMatrix r(ctx_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k) r.set_block(k, 0, block(idx[k], 0, 1, cols_));
  return r;
}

ExactMatrix ExactMatrix::hstack(const std::vector<ExactMatrix>& parts, FieldCtx ctx, std::size_t rows) {
  std::size_t nc = 0;
  for (const auto& p : parts) {
    if (p.rows_ != rows) throw InputError("hstack: row mismatch");
    nc += p.cols_;
  }
  ExactMatrix r(ctx, rows, nc);
  std::size_t c = 0;
  for (const auto& p : parts) {
    r.set_block(0, c, p);
    c += p.cols_;
  }
  return r;
}

ExactMatrix ExactMatrix::vstack(const std::vector<ExactMatrix>& parts, FieldCtx ctx, std::size_t cols) {
  std::size_t nr = 0;
  for (const auto& p : parts) {
    if (p.cols_ != cols) throw InputError("vstack: column mismatch");
    nr += p.rows_;
  }
  ExactMatrix r(ctx, nr, cols);
  std::size_t k = 0;
  for (const auto& p : parts) {
    r.set_block(k, 0, p);
    k += p.rows_;
  }
  return r;
}

ExactMatrix ExactMatrix::block_diagonal(const std::vector<ExactMatrix>& parts, FieldCtx ctx) {
  std::size_t nr = 0, nc = 0;
  for (const auto& p : parts) {
    nr += p.rows_;
    nc += p.cols_;
  }
  ExactMatrix r(ctx, nr, nc);
  std::size_t i = 0, j = 0;
  for (const auto& p : parts) {
    r.set_block(i, j, p);
    i += p.rows_;
    j += p.cols_;
  }
  return r;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.ctx_ == b.ctx_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.q_ == b.q_ && a.f_ == b.f_;
}

RrefResult rref(const ExactMatrix& m) {
  RrefResult res{m, {}};
  auto& r = res.reduced;
  if (m.ctx().is_rational())
    res.pivots = rref_inplace(QOps{}, r.rational_data(), r.rows(), r.cols());
  else
    res.pivots = rref_inplace(FpOps{m.ctx().characteristic()}, r.residue_data(), r.rows(), r.cols());
  return res;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank(); }

ExactMatrix kernel_basis(const ExactMatrix& m) {
  auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  ExactMatrix k(m.ctx(), m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k.set(free[f], f, Scalar(1));
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
      if (rr.reduced.entry_is_zero(r, free[f])) continue;
      k.set(rr.pivots[r], f, m.ctx().neg(rr.reduced.at(r, free[f])));
    }
  }
  return k;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.ctx() != b.ctx()) throw InputError("solve: field mismatch");
  if (a.rows() != b.rows()) throw InputError("solve: shape mismatch");
  auto aug = ExactMatrix::hstack({a, b}, a.ctx(), a.rows());
  auto rr = rref(aug);
  ExactMatrix x(a.ctx(), a.cols(), b.cols());
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    if (rr.pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(rr.pivots[r], j, rr.reduced.at(r, a.cols() + j));
  }
  return x;
}

ExactMatrix image_basis(const ExactMatrix& m) { return m.select_columns(rref(m).pivots); }

ExactMatrix complement_basis(const ExactMatrix& m) {
  auto aug = ExactMatrix::hstack({m, ExactMatrix::identity(m.ctx(), m.rows())}, m.ctx(), m.rows());
  auto rr = rref(aug);
  std::vector<std::size_t> extra;
  for (auto c : rr.pivots)
    if (c >= m.cols()) extra.push_back(c - m.cols());
  return ExactMatrix::identity(m.ctx(), m.rows()).select_columns(extra);
}

ExactMatrix intersect_spans(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("intersect_spans: shape mismatch");
  auto ia = image_basis(a);
  auto ib = image_basis(b);
  auto k = kernel_basis(ExactMatrix::hstack({ia, ib.scaled(Scalar(-1))}, a.ctx(), a.rows()));
  auto coeffs = k.block(0, 0, ia.cols(), k.cols());
  return image_basis(ia * coeffs);
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, ExactMatrix::identity(m.ctx(), m.rows()));
}

}  // namespace hwcat
