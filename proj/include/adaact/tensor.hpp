#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "adaact/errors.hpp"

namespace adaact {

using Index = Eigen::Index;

// Row-major double matrices are the working currency of the whole kit.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using MatrixMap = Eigen::Map<Matrix>;
using ConstMatrixMap = Eigen::Map<const Matrix>;
using VectorMap = Eigen::Map<Vector>;
using ConstVectorMap = Eigen::Map<const Vector>;

// Dense n-dimensional array of doubles, row-major, with Eigen map views
// for the 1-D/2-D cases where all the arithmetic happens.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<Index> shape);

  static Tensor zeros(std::vector<Index> shape) { return Tensor(std::move(shape)); }
  static Tensor full(std::vector<Index> shape, double value);
  static Tensor identity(Index n);
  // 2-D tensor from nested braces: Tensor::from_rows({{1,2},{3,4}}).
  static Tensor from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Tensor from_vector(std::initializer_list<double> values);
  static Tensor from_matrix(const Matrix& m);
  static Tensor from_eigen_vector(const Vector& v);

  const std::vector<Index>& shape() const { return shape_; }
  Index ndim() const { return static_cast<Index>(shape_.size()); }
  Index size() const { return static_cast<Index>(data_.size()); }
  Index extent(Index axis) const { return shape_.at(static_cast<size_t>(axis)); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double& operator[](Index i) { return data_[static_cast<size_t>(i)]; }
  double operator[](Index i) const { return data_[static_cast<size_t>(i)]; }

  // 2-D accessors; these require ndim() == 2.
  Index rows() const;
  Index cols() const;
  double& at(Index r, Index c);
  double at(Index r, Index c) const;

  MatrixMap mat();
  ConstMatrixMap mat() const;
  VectorMap vec();
  ConstVectorMap vec() const;

  // Same flat data, new shape (sizes must agree).
  Tensor reshaped(std::vector<Index> shape) const;

  bool all_finite() const;

 private:
  std::vector<Index> shape_;
  std::vector<double> data_;
};

std::string shape_string(const std::vector<Index>& shape);

// ---- kernels ---------------------------------------------------------

Tensor matmul(const Tensor& a, const Tensor& b);

enum class MapOp { AddScalar, MulScalar, Sqrt, Pow, Reciprocal, Square };

// Elementwise map; `arg` is the scalar for AddScalar/MulScalar and the
// exponent for Pow. Domain violations report the offending flat index.
Tensor map(const Tensor& t, MapOp op, double arg = 0.0);

enum class Axis { Rows, Cols };

// Mean along `axis` of a 2-D tensor: Axis::Rows collapses the rows
// (one value per column), Axis::Cols collapses the columns.
Tensor reduce_mean(const Tensor& t, Axis axis);

struct ConvGeometry {
  Index channels = 0;
  Index in_h = 0;
  Index in_w = 0;
  Index kernel_h = 0;
  Index kernel_w = 0;
  Index stride = 1;
  Index padding = 0;

  Index out_h() const;  // throws GeometryError when not a positive integer
  Index out_w() const;
  Index patch_len() const { return channels * kernel_h * kernel_w; }
};

// Unfolds a B x C x H x W tensor into one row per (batch, out_row, out_col)
// location, lexicographic; each row is the patch flattened channel-major,
// then kernel-row, then kernel-col. Padded positions contribute 0.
Tensor im2col(const Tensor& input, const ConvGeometry& g);

// Scatter-add adjoint of im2col: <im2col(x), c> == <x, col2im(c)>.
Tensor col2im(const Tensor& cols, Index batch, const ConvGeometry& g);

}  // namespace adaact
