#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace stainlab {

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConditionError : std::runtime_error {
    explicit ConditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dense NCHW tensor. Also used for conv weights as (c_out, c_in, 3, 3),
// dense weights as (1, 1, rows, cols) and vectors as (1, 1, 1, len).
template <typename T>
struct Tensor4 {
    int n = 0, c = 0, h = 0, w = 0;
    std::vector<T> v;

    Tensor4() = default;
    Tensor4(int n_, int c_, int h_, int w_)
        : n(n_), c(c_), h(h_), w(w_), v(size_t(n_) * c_ * h_ * w_, T(0)) {
        if (n_ < 1 || c_ < 1 || h_ < 1 || w_ < 1) {
            throw ShapeError("Tensor4: all dimensions must be >= 1");
        }
    }

    size_t size() const { return v.size(); }
    bool same_shape(const Tensor4& o) const {
        return n == o.n && c == o.c && h == o.h && w == o.w;
    }
    std::string shape_str() const {
        return "(" + std::to_string(n) + "," + std::to_string(c) + "," +
               std::to_string(h) + "," + std::to_string(w) + ")";
    }

    T* data() { return v.data(); }
    const T* data() const { return v.data(); }

    size_t plane_size() const { return size_t(h) * w; }
    T* plane(int in, int ic) { return v.data() + (size_t(in) * c + ic) * plane_size(); }
    const T* plane(int in, int ic) const {
        return v.data() + (size_t(in) * c + ic) * plane_size();
    }

    T& at(int in, int ic, int iy, int ix) {
        return v[((size_t(in) * c + ic) * h + iy) * w + ix];
    }
    T at(int in, int ic, int iy, int ix) const {
        return v[((size_t(in) * c + ic) * h + iy) * w + ix];
    }

    void fill(T x) { std::fill(v.begin(), v.end(), x); }

    bool all_finite() const {
        for (const T& x : v) {
            if (!std::isfinite(double(x))) return false;
        }
        return true;
    }
};

using Tensor4f = Tensor4<float>;
using Tensor4d = Tensor4<double>;

}  // namespace stainlab
