#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace srnet {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Dimensions of a dense 4-D tensor in (batch, channels, height, width) order.
struct Shape {
    int n = 1;
    int c = 1;
    int h = 1;
    int w = 1;

    long long numel() const { return 1LL * n * c * h * w; }
    bool operator==(const Shape&) const = default;
    std::string str() const;  // "1x64x32x32"
};

/// Dense 4-D tensor of doubles, row-major (n, c, h, w). Operations return new
/// tensors; nothing mutates a tensor another thread can see.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Shape shape, double fill = 0.0);
    Tensor(Shape shape, std::vector<double> values);  // throws on length mismatch

    static Tensor zeros(Shape s) { return Tensor(s, 0.0); }
    static Tensor ones(Shape s) { return Tensor(s, 1.0); }

    const Shape& shape() const { return shape_; }
    long long numel() const { return static_cast<long long>(data_.size()); }
    bool defined() const { return !data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double& at(int n, int c, int y, int x) { return data_[offset(n, c, y, x)]; }
    double at(int n, int c, int y, int x) const { return data_[offset(n, c, y, x)]; }

    long long offset(int n, int c, int y, int x) const {
        return ((1LL * n * shape_.c + c) * shape_.h + y) * shape_.w + x;
    }

    bool requires_grad = false;

private:
    Shape shape_{};
    std::vector<double> data_;
};

enum class ElemOp { kAdd, kSub, kMul };

/// Pointwise combination of two equally shaped tensors.
Tensor elementwise(const Tensor& a, const Tensor& b, ElemOp op);

inline Tensor add(const Tensor& a, const Tensor& b) { return elementwise(a, b, ElemOp::kAdd); }
inline Tensor sub(const Tensor& a, const Tensor& b) { return elementwise(a, b, ElemOp::kSub); }
inline Tensor mul(const Tensor& a, const Tensor& b) { return elementwise(a, b, ElemOp::kMul); }

bool all_finite(const Tensor& t);

/// Text dump for golden tests: header "n c h w", then one value per line in
/// flat order, shortest round-trip decimal.
void write_text(const Tensor& t, std::ostream& os);
Tensor read_text(std::istream& is);

}  // namespace srnet
