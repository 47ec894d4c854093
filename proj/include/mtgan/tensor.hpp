#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "mtgan/errors.hpp"

namespace mtgan {

// Dense NCHW tensor. All network math runs on these; T is float in
// production and double in the finite-difference tests.
template <typename T>
struct Tensor {
    int n = 0, c = 0, h = 0, w = 0;
    std::vector<T> data;

    Tensor() = default;
    Tensor(int n_, int c_, int h_, int w_)
        : n(n_), c(c_), h(h_), w(w_), data(static_cast<size_t>(n_) * c_ * h_ * w_, T(0)) {}

    static Tensor zeros(int n, int c, int h, int w) { return Tensor(n, c, h, w); }

    size_t size() const { return data.size(); }
    bool same_shape(const Tensor& o) const { return n == o.n && c == o.c && h == o.h && w == o.w; }
    std::string shape_str() const {
        return "[" + std::to_string(n) + "," + std::to_string(c) + "," + std::to_string(h) + "," +
               std::to_string(w) + "]";
    }

    T& at(int in, int ic, int iy, int ix) {
        return data[((static_cast<size_t>(in) * c + ic) * h + iy) * w + ix];
    }
    T at(int in, int ic, int iy, int ix) const {
        return data[((static_cast<size_t>(in) * c + ic) * h + iy) * w + ix];
    }

    // pointer to the start of one (n,c) plane
    T* plane(int in, int ic) { return data.data() + ((static_cast<size_t>(in) * c + ic) * h) * w; }
    const T* plane(int in, int ic) const {
        return data.data() + ((static_cast<size_t>(in) * c + ic) * h) * w;
    }

    void fill(T v) { std::fill(data.begin(), data.end(), v); }

    bool all_finite() const {
        for (T v : data)
            if (!std::isfinite(static_cast<double>(v))) return false;
        return true;
    }
};

// channel-axis concatenation of two batches with equal n,h,w
template <typename T>
Tensor<T> concat_channels(const Tensor<T>& a, const Tensor<T>& b) {
    if (a.n != b.n || a.h != b.h || a.w != b.w)
        throw ShapeError("concat_channels: " + a.shape_str() + " vs " + b.shape_str());
    Tensor<T> out(a.n, a.c + b.c, a.h, a.w);
    const size_t plane = static_cast<size_t>(a.h) * a.w;
    for (int in = 0; in < a.n; ++in) {
        std::copy(a.data.begin() + in * a.c * plane, a.data.begin() + (in + 1) * a.c * plane,
                  out.data.begin() + in * (a.c + b.c) * plane);
        std::copy(b.data.begin() + in * b.c * plane, b.data.begin() + (in + 1) * b.c * plane,
                  out.data.begin() + (in * (a.c + b.c) + a.c) * plane);
    }
    return out;
}

// inverse of concat_channels: split off the first c_front channels
template <typename T>
void split_channels(const Tensor<T>& src, int c_front, Tensor<T>& front, Tensor<T>& back) {
    front = Tensor<T>(src.n, c_front, src.h, src.w);
    back = Tensor<T>(src.n, src.c - c_front, src.h, src.w);
    const size_t plane = static_cast<size_t>(src.h) * src.w;
    for (int in = 0; in < src.n; ++in) {
        std::copy(src.data.begin() + in * src.c * plane,
                  src.data.begin() + (in * src.c + c_front) * plane,
                  front.data.begin() + in * c_front * plane);
        std::copy(src.data.begin() + (in * src.c + c_front) * plane,
                  src.data.begin() + (in + 1) * src.c * plane,
                  back.data.begin() + in * (src.c - c_front) * plane);
    }
}

}  // namespace mtgan
