#pragma once

#include <utility>

#include "srnet/tensor.hpp"

namespace srnet {

/// Full parameterization of one convolution layer. Covers the standard,
/// grouped, depth-wise and dilated cases with one set of fields.
struct ConvSpec {
    int in_channels = 1;
    int out_channels = 1;
    int kh = 3;
    int kw = 3;
    int stride = 1;
    int padding = 0;  // symmetric zero padding
    int dilation = 1;
    int groups = 1;
    bool has_bias = false;

    void validate() const;  // throws Error on divisibility/positivity violations
    bool depthwise() const { return groups == in_channels && groups == out_channels; }

    /// Output spatial size; throws if non-positive.
    std::pair<int, int> out_hw(int h, int w) const;

    long long weight_count() const {
        return 1LL * out_channels * (in_channels / groups) * kh * kw;
    }
    long long param_count() const { return weight_count() + (has_bias ? out_channels : 0); }
};

enum class ConvImpl { kAuto, kDirect, kIm2col };

/// weights shape (out_channels, in_channels/groups, kh, kw); bias (1,out_channels,1,1) or null.
Tensor conv2d(const Tensor& x, const ConvSpec& spec, const Tensor& weights, const Tensor* bias,
              ConvImpl impl = ConvImpl::kAuto);

/// Accumulates into gx/gw/gb; any of them may be null to skip.
void conv2d_backward(const Tensor& x, const ConvSpec& spec, const Tensor& weights,
                     const Tensor& grad_out, Tensor* gx, Tensor* gw, Tensor* gb,
                     ConvImpl impl = ConvImpl::kAuto);

/// Channel k of the input lands at output index (k % groups)*(C/groups) + k/groups.
/// The inverse permutation is channel_shuffle(., C/groups).
Tensor channel_shuffle(const Tensor& x, int groups);

/// Integer-factor bilinear interpolation, align-corners=false sampling:
/// source = (target + 0.5)/factor - 0.5, clamped to the valid range.
Tensor bilinear_upsample(const Tensor& x, int factor);
void bilinear_upsample_backward(const Tensor& grad_out, int factor, Tensor& gx);

Tensor concat_channels(const Tensor& a, const Tensor& b);
Tensor slice_channels(const Tensor& x, int c_begin, int c_end);

Tensor relu(const Tensor& x);

struct BatchNormState {
    Tensor running_mean;  // (1,C,1,1)
    Tensor running_var;
    double momentum = 0.1;
    double eps = 1e-5;

    BatchNormState() = default;
    explicit BatchNormState(int channels)
        : running_mean(Shape{1, channels, 1, 1}, 0.0),
          running_var(Shape{1, channels, 1, 1}, 1.0) {}
    int channels() const { return running_mean.shape().c; }
};

/// Train mode standardizes by biased batch statistics and, when update_stats
/// is set, folds them into the running estimates. Eval mode uses the running
/// estimates. gamma/beta are (1,C,1,1).
Tensor batch_norm(const Tensor& x, const Tensor& gamma, const Tensor& beta, BatchNormState& state,
                  bool training, bool update_stats);
void batch_norm_backward(const Tensor& x, const Tensor& gamma, const BatchNormState& state,
                         bool training, const Tensor& grad_out, Tensor* gx, Tensor* ggamma,
                         Tensor* gbeta);

/// Two-class pixelwise softmax; channel 0 = non-salient score, channel 1 = salient.
Tensor softmax2(const Tensor& logits);

/// Global thread budget for the internal kernels (0 = hardware concurrency).
void set_num_threads(int n);
int num_threads();

}  // namespace srnet
