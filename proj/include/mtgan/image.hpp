#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "mtgan/tensor.hpp"

namespace mtgan {

// 8-bit interleaved image, 1 (grayscale) or 3 (RGB) channels
struct ImageU8 {
    int w = 0, h = 0, channels = 0;
    std::vector<uint8_t> data;  // row-major, interleaved

    ImageU8() = default;
    ImageU8(int w_, int h_, int c_) : w(w_), h(h_), channels(c_), data(size_t(w_) * h_ * c_, 0) {}

    uint8_t& at(int y, int x, int c) { return data[(size_t(y) * w + x) * channels + c]; }
    uint8_t at(int y, int x, int c) const { return data[(size_t(y) * w + x) * channels + c]; }
};

// PNG codec (the only required on-disk format). Non-8-bit or exotic
// color types are converted on read; failures throw DecodeError.
ImageU8 read_png(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const ImageU8& img);

ImageU8 resize_bilinear(const ImageU8& src, int out_w, int out_h);
ImageU8 resize_nearest(const ImageU8& src, int out_w, int out_h);

// Geometric transforms on normalized planar images (n=1, any channel
// count). Each channel is warped identically; samples falling outside
// the source are set to `fill`.
Tensor<float> translate_image(const Tensor<float>& src, int dx, int dy, float fill);
Tensor<float> rotate_bilinear(const Tensor<float>& src, double degrees, float fill);
Tensor<float> rotate_nearest(const Tensor<float>& src, double degrees, float fill);

}  // namespace mtgan
