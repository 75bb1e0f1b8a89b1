#include "adaact/tensor.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace adaact {

namespace {

Index checked_product(const std::vector<Index>& shape) {
  Index n = 1;
  for (Index e : shape) {
    if (e < 0) throw DimensionError("negative extent in shape " + shape_string(shape));
    n *= e;
  }
  return n;
}

}  // namespace

Tensor::Tensor(std::vector<Index> shape) : shape_(std::move(shape)) {
  data_.assign(static_cast<size_t>(checked_product(shape_)), 0.0);
}

Tensor Tensor::full(std::vector<Index> shape, double value) {
  Tensor t(std::move(shape));
  std::fill(t.data_.begin(), t.data_.end(), value);
  return t;
}

Tensor Tensor::identity(Index n) {
  Tensor t({n, n});
  for (Index i = 0; i < n; ++i) t.at(i, i) = 1.0;
  return t;
}

Tensor Tensor::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r > 0 ? static_cast<Index>(rows.begin()->size()) : 0;
  Tensor t({r, c});
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c)
      throw DimensionError("ragged initializer rows");
    Index j = 0;
    for (double v : row) t.at(i, j++) = v;
    ++i;
  }
  return t;
}

Tensor Tensor::from_vector(std::initializer_list<double> values) {
  Tensor t({static_cast<Index>(values.size())});
  Index i = 0;
  for (double v : values) t[i++] = v;
  return t;
}

Tensor Tensor::from_matrix(const Matrix& m) {
  Tensor t({m.rows(), m.cols()});
  t.mat() = m;
  return t;
}

Tensor Tensor::from_eigen_vector(const Vector& v) {
  Tensor t({v.size()});
  t.vec() = v;
  return t;
}

Index Tensor::rows() const {
  if (ndim() != 2) throw DimensionError("rows() on tensor of shape " + shape_string(shape_));
  return shape_[0];
}

Index Tensor::cols() const {
  if (ndim() != 2) throw DimensionError("cols() on tensor of shape " + shape_string(shape_));
  return shape_[1];
}

double& Tensor::at(Index r, Index c) { return data_[static_cast<size_t>(r * cols() + c)]; }
double Tensor::at(Index r, Index c) const { return data_[static_cast<size_t>(r * cols() + c)]; }

MatrixMap Tensor::mat() { return MatrixMap(data(), rows(), cols()); }
ConstMatrixMap Tensor::mat() const { return ConstMatrixMap(data(), rows(), cols()); }

VectorMap Tensor::vec() {
  if (ndim() != 1) throw DimensionError("vec() on tensor of shape " + shape_string(shape_));
  return VectorMap(data(), size());
}

ConstVectorMap Tensor::vec() const {
  if (ndim() != 1) throw DimensionError("vec() on tensor of shape " + shape_string(shape_));
  return ConstVectorMap(data(), size());
}

Tensor Tensor::reshaped(std::vector<Index> shape) const {
  if (checked_product(shape) != size())
    throw DimensionError("reshape " + shape_string(shape_) + " -> " + shape_string(shape) +
                         ": element counts differ");
  Tensor t = *this;
  t.shape_ = std::move(shape);
  return t;
}

bool Tensor::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

std::string shape_string(const std::vector<Index>& shape) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << "x";
    os << shape[i];
  }
  os << "]";
  return os.str();
}

Tensor matmul(const Tensor& a, const Tensor& b) {
  if (a.ndim() != 2 || b.ndim() != 2 || a.cols() != b.rows())
    throw DimensionError("matmul: incompatible shapes " + shape_string(a.shape()) + " and " +
                         shape_string(b.shape()));
  Tensor out({a.rows(), b.cols()});
  out.mat().noalias() = a.mat() * b.mat();
  return out;
}

Tensor map(const Tensor& t, MapOp op, double arg) {
  Tensor out = t;
  const Index n = out.size();
  double* d = out.data();
  switch (op) {
    case MapOp::AddScalar:
      for (Index i = 0; i < n; ++i) d[i] += arg;
      break;
    case MapOp::MulScalar:
      for (Index i = 0; i < n; ++i) d[i] *= arg;
      break;
    case MapOp::Sqrt:
      for (Index i = 0; i < n; ++i) {
        if (d[i] < 0.0)
          throw NumericError("map(sqrt): negative element at index " + std::to_string(i));
        d[i] = std::sqrt(d[i]);
      }
      break;
    case MapOp::Pow: {
      const bool integer_exp = std::floor(arg) == arg;
      for (Index i = 0; i < n; ++i) {
        if (!integer_exp && d[i] < 0.0)
          throw NumericError("map(pow): negative element at index " + std::to_string(i) +
                             " with non-integer exponent");
        d[i] = std::pow(d[i], arg);
      }
      break;
    }
    case MapOp::Reciprocal:
      for (Index i = 0; i < n; ++i) {
        if (d[i] <= 0.0)
          throw NumericError("map(reciprocal): non-positive element at index " +
                             std::to_string(i));
        d[i] = 1.0 / d[i];
      }
      break;
    case MapOp::Square:
      for (Index i = 0; i < n; ++i) d[i] *= d[i];
      break;
  }
  return out;
}

Tensor reduce_mean(const Tensor& t, Axis axis) {
  const Index r = t.rows();
  const Index c = t.cols();
  if (axis == Axis::Rows) {
    if (r == 0) throw EmptyReductionError("reduce_mean over zero rows");
    Tensor out({c});
    for (Index j = 0; j < c; ++j) {
      double s = 0.0;
      for (Index i = 0; i < r; ++i) s += t.at(i, j);
      out[j] = s / static_cast<double>(r);
    }
    return out;
  }
  if (c == 0) throw EmptyReductionError("reduce_mean over zero columns");
  Tensor out({r});
  for (Index i = 0; i < r; ++i) {
    double s = 0.0;
    for (Index j = 0; j < c; ++j) s += t.at(i, j);
    out[i] = s / static_cast<double>(c);
  }
  return out;
}

namespace {

Index out_extent(Index in, Index pad, Index k, Index stride, const char* which) {
  const Index span = in + 2 * pad - k;
  if (stride <= 0) throw GeometryError("stride must be positive");
  if (span < 0 || span % stride != 0)
    throw GeometryError(std::string("conv geometry: (") + which + " + 2*pad - kernel) = " +
                        std::to_string(span) + " is not a non-negative multiple of stride " +
                        std::to_string(stride));
  return span / stride + 1;
}

}  // namespace

Index ConvGeometry::out_h() const { return out_extent(in_h, padding, kernel_h, stride, "H"); }
Index ConvGeometry::out_w() const { return out_extent(in_w, padding, kernel_w, stride, "W"); }

Tensor im2col(const Tensor& input, const ConvGeometry& g) {
  if (input.ndim() != 4)
    throw GeometryError("im2col expects a 4-D tensor, got " + shape_string(input.shape()));
  const Index batch = input.extent(0);
  if (input.extent(1) != g.channels || input.extent(2) != g.in_h || input.extent(3) != g.in_w)
    throw GeometryError("im2col: input " + shape_string(input.shape()) +
                        " does not match geometry " +
                        shape_string({g.channels, g.in_h, g.in_w}));
  const Index oh = g.out_h();
  const Index ow = g.out_w();
  Tensor cols({batch * oh * ow, g.patch_len()});
  const double* src = input.data();
  const Index chw = g.channels * g.in_h * g.in_w;
  const Index hw = g.in_h * g.in_w;
  Index row = 0;
  for (Index b = 0; b < batch; ++b) {
    for (Index oy = 0; oy < oh; ++oy) {
      for (Index ox = 0; ox < ow; ++ox, ++row) {
        double* dst = cols.data() + row * g.patch_len();
        for (Index c = 0; c < g.channels; ++c) {
          for (Index ky = 0; ky < g.kernel_h; ++ky) {
            const Index iy = oy * g.stride + ky - g.padding;
            for (Index kx = 0; kx < g.kernel_w; ++kx, ++dst) {
              const Index ix = ox * g.stride + kx - g.padding;
              if (iy >= 0 && iy < g.in_h && ix >= 0 && ix < g.in_w)
                *dst = src[b * chw + c * hw + iy * g.in_w + ix];
              else
                *dst = 0.0;
            }
          }
        }
      }
    }
  }
  return cols;
}

Tensor col2im(const Tensor& cols, Index batch, const ConvGeometry& g) {
  const Index oh = g.out_h();
  const Index ow = g.out_w();
  if (cols.ndim() != 2 || cols.rows() != batch * oh * ow || cols.cols() != g.patch_len())
    throw GeometryError("col2im: columns " + shape_string(cols.shape()) +
                        " inconsistent with geometry (expected " +
                        shape_string({batch * oh * ow, g.patch_len()}) + ")");
  Tensor image({batch, g.channels, g.in_h, g.in_w});
  double* dst = image.data();
  const Index chw = g.channels * g.in_h * g.in_w;
  const Index hw = g.in_h * g.in_w;
  Index row = 0;
  for (Index b = 0; b < batch; ++b) {
    for (Index oy = 0; oy < oh; ++oy) {
      for (Index ox = 0; ox < ow; ++ox, ++row) {
        const double* src = cols.data() + row * g.patch_len();
        for (Index c = 0; c < g.channels; ++c) {
          for (Index ky = 0; ky < g.kernel_h; ++ky) {
            const Index iy = oy * g.stride + ky - g.padding;
            for (Index kx = 0; kx < g.kernel_w; ++kx, ++src) {
              const Index ix = ox * g.stride + kx - g.padding;
              if (iy >= 0 && iy < g.in_h && ix >= 0 && ix < g.in_w)
                dst[b * chw + c * hw + iy * g.in_w + ix] += *src;
            }
          }
        }
      }
    }
  }
  return image;
}

}  // namespace adaact
