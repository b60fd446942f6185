#include "srnet/tensor.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

namespace srnet {

std::string Shape::str() const {
    return std::to_string(n) + "x" + std::to_string(c) + "x" + std::to_string(h) + "x" +
           std::to_string(w);
}

static void check_dims(const Shape& s) {
    if (s.n < 1 || s.c < 1 || s.h < 1 || s.w < 1) {
        throw Error("tensor: all dimensions must be >= 1, got " + s.str());
    }
}

Tensor::Tensor(Shape shape, double fill) : shape_(shape) {
    check_dims(shape);
    data_.assign(static_cast<size_t>(shape.numel()), fill);
}

Tensor::Tensor(Shape shape, std::vector<double> values) : shape_(shape) {
    check_dims(shape);
    if (static_cast<long long>(values.size()) != shape.numel()) {
        throw Error("tensor: fill array has length " + std::to_string(values.size()) +
                    ", shape " + shape.str() + " needs " + std::to_string(shape.numel()));
    }
    data_ = std::move(values);
}

Tensor elementwise(const Tensor& a, const Tensor& b, ElemOp op) {
    if (!(a.shape() == b.shape())) {
        throw Error("elementwise: shape mismatch " + a.shape().str() + " vs " + b.shape().str());
    }
    Tensor out(a.shape());
    const double* pa = a.data();
    const double* pb = b.data();
    double* po = out.data();
    const long long count = a.numel();
    switch (op) {
        case ElemOp::kAdd:
            for (long long i = 0; i < count; ++i) po[i] = pa[i] + pb[i];
            break;
        case ElemOp::kSub:
            for (long long i = 0; i < count; ++i) po[i] = pa[i] - pb[i];
            break;
        case ElemOp::kMul:
            for (long long i = 0; i < count; ++i) po[i] = pa[i] * pb[i];
            break;
    }
    return out;
}

bool all_finite(const Tensor& t) {
    const double* p = t.data();
    for (long long i = 0; i < t.numel(); ++i) {
        if (!std::isfinite(p[i])) return false;
    }
    return true;
}

void write_text(const Tensor& t, std::ostream& os) {
    const Shape& s = t.shape();
    os << s.n << ' ' << s.c << ' ' << s.h << ' ' << s.w << '\n';
    char buf[32];
    for (long long i = 0; i < t.numel(); ++i) {
        auto res = std::to_chars(buf, buf + sizeof(buf), t.data()[i]);
        os.write(buf, res.ptr - buf);
        os.put('\n');
    }
}

Tensor read_text(std::istream& is) {
    Shape s;
    if (!(is >> s.n >> s.c >> s.h >> s.w)) {
        throw Error("tensor dump: malformed header");
    }
    check_dims(s);
    std::vector<double> values;
    values.reserve(static_cast<size_t>(s.numel()));
    std::string tok;
    for (long long i = 0; i < s.numel(); ++i) {
        if (!(is >> tok)) throw Error("tensor dump: truncated after " + std::to_string(i) + " values");
        double v = 0.0;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
            throw Error("tensor dump: bad value '" + tok + "'");
        }
        values.push_back(v);
    }
    return Tensor(s, std::move(values));
}

}  // namespace srnet
