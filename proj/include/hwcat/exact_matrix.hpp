#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hwcat/field.hpp"

namespace hwcat {

/// Dense matrix over Q (GMP rationals) or F_p (32-bit residues).
/// Exactly one of the two storage vectors is populated, chosen by the
/// field; every kernel dispatches on it once per call.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(FieldCtx ctx, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(FieldCtx ctx, std::size_t n);
  static ExactMatrix from_rows(FieldCtx ctx, const std::vector<std::vector<long>>& rows);
  /// Column vector from integer entries.
  static ExactMatrix column(FieldCtx ctx, const std::vector<long>& entries);

  const FieldCtx& ctx() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  /// entry(i,j) += c * v
  void add_scaled(std::size_t i, std::size_t j, const Scalar& c, const Scalar& v);
  void add_scaled(std::size_t i, std::size_t j, const Scalar& v) { add_scaled(i, j, Scalar(1), v); }
  bool entry_is_zero(std::size_t i, std::size_t j) const;
  bool is_zero() const;

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix scaled(const Scalar& c) const;
  ExactMatrix transpose() const;

  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ExactMatrix& b);
  /// dst block += c * b
  void add_block(std::size_t r0, std::size_t c0, const ExactMatrix& b, const Scalar& c);
  ExactMatrix select_columns(const std::vector<std::size_t>& idx) const;
  ExactMatrix select_rows(const std::vector<std::size_t>& idx) const;
  ExactMatrix col(std::size_t j) const { return block(0, j, rows_, 1); }

  static ExactMatrix hstack(const std::vector<ExactMatrix>& parts, FieldCtx ctx, std::size_t rows);
  static ExactMatrix vstack(const std::vector<ExactMatrix>& parts, FieldCtx ctx, std::size_t cols);
  static ExactMatrix block_diagonal(const std::vector<ExactMatrix>& parts, FieldCtx ctx);

  std::string to_string() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  std::vector<mpq_class>& rational_data() { return q_; }
  const std::vector<mpq_class>& rational_data() const { return q_; }
  std::vector<std::uint32_t>& residue_data() { return f_; }
  const std::vector<std::uint32_t>& residue_data() const { return f_; }

 private:
  void check_same_shape(const ExactMatrix& o, const char* what) const;

  FieldCtx ctx_ = FieldCtx::rationals();
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> q_;
  std::vector<std::uint32_t> f_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
/// Columns form a basis of the null space, one per free column, in the
/// standard RREF parametrisation.
ExactMatrix kernel_basis(const ExactMatrix& m);
/// x with a*x = b (b may have several columns), or nothing when some
/// column of b lies outside the column space of a.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);
/// A subset of the columns of m forming a basis of its column space.
ExactMatrix image_basis(const ExactMatrix& m);
/// Standard basis vectors completing the columns of m to a basis of the
/// ambient space (greedy in index order).
ExactMatrix complement_basis(const ExactMatrix& m);
/// Intersection of the column spaces of a and b, as a basis.
ExactMatrix intersect_spans(const ExactMatrix& a, const ExactMatrix& b);
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

}  // namespace hwcat
