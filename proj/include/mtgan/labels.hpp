#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mtgan/image.hpp"
#include "mtgan/tensor.hpp"

namespace mtgan {

// Segmentation classes and their mask colors. The tie-break priority of
// decode_mask is exactly this id order (background wins ties).
enum class StructureId : int { background = 0, left_lung = 1, right_lung = 2, heart = 3 };

inline constexpr int kNumClasses = 4;
inline constexpr std::array<std::array<uint8_t, 3>, kNumClasses> kAnchorColors{{
    {0, 0, 0},      // background
    {0, 0, 255},    // left lung (blue)
    {0, 255, 0},    // right lung (green)
    {255, 0, 0},    // heart (red)
}};

const char* structure_name(int class_id);

// Per-pixel class ids
struct LabelMap {
    int w = 0, h = 0;
    std::vector<uint8_t> ids;

    LabelMap() = default;
    LabelMap(int w_, int h_) : w(w_), h(h_), ids(size_t(w_) * h_, 0) {}
    uint8_t& at(int y, int x) { return ids[size_t(y) * w + x]; }
    uint8_t at(int y, int x) const { return ids[size_t(y) * w + x]; }
};

// class ids -> exact anchor-color RGB image
ImageU8 encode_labels(const LabelMap& labels);

// any RGB image -> nearest-anchor class ids (Euclidean distance,
// ties broken by lowest class id)
LabelMap decode_mask(const ImageU8& rgb);

// 8-bit [0,255] <-> [-1,1]; denormalize rounds back to uint8 and is the
// exact inverse of normalize on the uint8 lattice
inline float normalize_u8(uint8_t v) { return float(v) / 127.5f - 1.0f; }
inline uint8_t denormalize_u8(float v) {
    float x = (v + 1.0f) * 127.5f;
    if (x <= 0.0f) return 0;
    if (x >= 255.0f) return 255;
    return uint8_t(std::lround(x));
}

// interleaved u8 -> planar [-1,1] float (n=1, c=img.channels)
Tensor<float> normalize_image(const ImageU8& img);
// planar [-1,1] float (n=1) -> interleaved u8
ImageU8 denormalize_image(const Tensor<float>& t);

}  // namespace mtgan
