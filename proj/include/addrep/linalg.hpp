#pragma once

#include <optional>

#include "addrep/rational.hpp"

namespace addrep {

QVector vec_mat(const QVector& row, const QMatrix& m);
QVector mat_vec(const QMatrix& m, const QVector& col);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QMatrix mat_transpose(const QMatrix& m);
QMatrix identity_matrix(int n);
bool is_zero_vector(const QVector& v);

/// Incremental row space in reduced echelon form, pivot = lowest-index
/// nonzero coordinate. Tracks coordinates relative to the originally added
/// (independent) vectors so members can be re-expressed in that basis.
class SpanSolver {
 public:
  explicit SpanSolver(int width);

  /// Adds the vector if independent of the current span; returns whether it
  /// was added. Added originals form the basis used by coords().
  bool add(const QVector& v);

  /// Coordinates of v in the basis of added originals, or nullopt when v is
  /// outside the span.
  std::optional<QVector> coords(const QVector& v) const;

  bool contains(const QVector& v) const;
  int size() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }

 private:
  struct Row {
    QVector reduced;
    QVector combo;  // reduced = sum combo[j] * original[j]
    int pivot;
  };
  int width_;
  std::vector<Row> rows_;  // sorted by pivot
};

/// Solves M X = B exactly for square invertible M.
/// Throws std::domain_error when M is singular.
QMatrix solve_linear(const QMatrix& m, const QMatrix& b);
QVector solve_linear(const QMatrix& m, const QVector& b);

}  // namespace addrep
