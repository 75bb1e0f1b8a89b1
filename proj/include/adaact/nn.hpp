#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "adaact/tensor.hpp"

namespace adaact {

enum class LayerKind : uint8_t { Dense = 0, Conv = 1, Relu = 2, Flatten = 3 };

const char* layer_kind_name(LayerKind k);

// Shape of the activations flowing between layers: either a flat vector
// per sample or a C x H x W image per sample (stored row-major per row).
struct DataShape {
  static DataShape flat(Index dims) { return {false, dims, 0, 0, 0}; }
  static DataShape image(Index c, Index h, Index w) { return {true, c * h * w, c, h, w}; }

  bool is_image = false;
  Index dims = 0;  // flattened length per sample
  Index c = 0, h = 0, w = 0;
};

struct LayerSpec {
  static LayerSpec dense(Index units);
  static LayerSpec conv(Index out_channels, Index kernel_h, Index kernel_w, Index stride,
                        Index padding);
  static LayerSpec relu();
  static LayerSpec flatten();

  LayerKind kind = LayerKind::Dense;
  Index units = 0;
  Index out_channels = 0, kernel_h = 0, kernel_w = 0, stride = 1, padding = 0;
};

// Parameters of one layer. theta packs [W b] with the bias as the last
// column; relu/flatten carry no parameters.
struct LayerParams {
  LayerKind kind = LayerKind::Dense;
  Tensor theta;        // dense/conv only
  ConvGeometry geom;   // conv only
  Index out_channels = 0;
  DataShape in_shape, out_shape;

  bool has_params() const { return kind == LayerKind::Dense || kind == LayerKind::Conv; }
  Index fan_in() const;
};

// Forward-pass capture for one layer: the augmented inputs (one row per
// effective sample, last column all ones) and the pre-activations.
struct LayerCache {
  Tensor a_tilde;
  Tensor z;
  bool populated = false;
};

struct GradientBundle {
  std::vector<Tensor> layer_grads;  // parallel to layers; empty for relu/flatten
};

class Network {
 public:
  Network() = default;
  Network(DataShape input, std::vector<LayerParams> layers);

  // Runs the forward pass on a B x input_dims batch, returns logits and
  // populates every layer cache.
  Tensor forward(const Tensor& x);

  // Softmax cross-entropy loss plus exact gradients for every theta.
  // Requires the caches of a matching forward pass.
  std::pair<double, GradientBundle> backward(const Tensor& logits,
                                             const std::vector<int>& labels) const;

  const DataShape& input_shape() const { return input_; }
  Index output_dims() const { return layers_.empty() ? input_.dims : layers_.back().out_shape.dims; }
  Index layer_count() const { return static_cast<Index>(layers_.size()); }
  const std::vector<LayerParams>& layers() const { return layers_; }
  std::vector<LayerParams>& layers() { return layers_; }
  const std::vector<LayerCache>& caches() const { return caches_; }
  bool caches_valid() const { return caches_valid_; }
  void invalidate_caches();

 private:
  DataShape input_;
  std::vector<LayerParams> layers_;
  std::vector<LayerCache> caches_;
  bool caches_valid_ = false;
  Index cached_batch_ = 0;
};

// Builds the layer chain, validating adjacent shapes, and initializes
// weights with the fan-in scaled uniform rule (bound = sqrt(6/fan_in),
// biases zero), fully determined by `seed`.
Network init_network(const DataShape& input, const std::vector<LayerSpec>& specs, uint64_t seed);

// Centered per-coordinate sample variance of the cached augmented inputs
// across rows (population denominator). Distinct from the uncentered
// second moment the optimizer uses.
Tensor activation_variance(const LayerCache& cache);

// Softmax cross-entropy evaluated alone (no gradients); used by eval and
// by finite-difference checks.
double softmax_cross_entropy(const Tensor& logits, const std::vector<int>& labels);

}  // namespace adaact
