#include "mtgan/image.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>

#include "mtgan/errors.hpp"

namespace mtgan {

namespace {

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

}  // namespace

ImageU8 read_png(const std::filesystem::path& path) {
    FilePtr fp(std::fopen(path.string().c_str(), "rb"));
    if (!fp) throw DecodeError("cannot open " + path.string());

    png_byte header[8];
    if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8))
        throw DecodeError("not a PNG file: " + path.string());

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw DecodeError("png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw DecodeError("png_create_info_struct failed");
    }
    std::vector<png_bytep> rows;
    ImageU8 img;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DecodeError("corrupt PNG: " + path.string());
    }
    png_init_io(png, fp.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    const int bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);

    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int channels = png_get_channels(png, info);
    if (channels != 1 && channels != 3)
        throw DecodeError("unsupported channel count in " + path.string());

    img = ImageU8(int(w), int(h), channels);
    rows.resize(h);
    for (png_uint_32 y = 0; y < h; ++y) rows[y] = img.data.data() + size_t(y) * w * channels;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

void write_png(const std::filesystem::path& path, const ImageU8& img) {
    if (img.channels != 1 && img.channels != 3)
        throw IoError("write_png: only 1- or 3-channel images");
    FilePtr fp(std::fopen(path.string().c_str(), "wb"));
    if (!fp) throw IoError("cannot write " + path.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("png_create_info_struct failed");
    }
    std::vector<png_bytep> rows(img.h);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("png write failed: " + path.string());
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, img.w, img.h, 8,
                 img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < img.h; ++y)
        rows[y] = const_cast<png_bytep>(img.data.data() + size_t(y) * img.w * img.channels);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

ImageU8 resize_bilinear(const ImageU8& src, int out_w, int out_h) {
    if (src.w == out_w && src.h == out_h) return src;
    ImageU8 out(out_w, out_h, src.channels);
    const double sx = double(src.w) / out_w;
    const double sy = double(src.h) / out_h;
    for (int y = 0; y < out_h; ++y) {
        double fy = (y + 0.5) * sy - 0.5;
        int y0 = int(std::floor(fy));
        double wy = fy - y0;
        int y0c = std::clamp(y0, 0, src.h - 1);
        int y1c = std::clamp(y0 + 1, 0, src.h - 1);
        for (int x = 0; x < out_w; ++x) {
            double fx = (x + 0.5) * sx - 0.5;
            int x0 = int(std::floor(fx));
            double wx = fx - x0;
            int x0c = std::clamp(x0, 0, src.w - 1);
            int x1c = std::clamp(x0 + 1, 0, src.w - 1);
            for (int c = 0; c < src.channels; ++c) {
                double v = (1 - wy) * ((1 - wx) * src.at(y0c, x0c, c) + wx * src.at(y0c, x1c, c)) +
                           wy * ((1 - wx) * src.at(y1c, x0c, c) + wx * src.at(y1c, x1c, c));
                out.at(y, x, c) = uint8_t(std::lround(std::clamp(v, 0.0, 255.0)));
            }
        }
    }
    return out;
}

ImageU8 resize_nearest(const ImageU8& src, int out_w, int out_h) {
    if (src.w == out_w && src.h == out_h) return src;
    ImageU8 out(out_w, out_h, src.channels);
    const double sx = double(src.w) / out_w;
    const double sy = double(src.h) / out_h;
    for (int y = 0; y < out_h; ++y) {
        int ys = std::min(int((y + 0.5) * sy), src.h - 1);
        for (int x = 0; x < out_w; ++x) {
            int xs = std::min(int((x + 0.5) * sx), src.w - 1);
            for (int c = 0; c < src.channels; ++c) out.at(y, x, c) = src.at(ys, xs, c);
        }
    }
    return out;
}

Tensor<float> translate_image(const Tensor<float>& src, int dx, int dy, float fill) {
    Tensor<float> out(src.n, src.c, src.h, src.w);
    out.fill(fill);
    for (int n = 0; n < src.n; ++n)
        for (int c = 0; c < src.c; ++c) {
            const float* in = src.plane(n, c);
            float* o = out.plane(n, c);
            for (int y = 0; y < src.h; ++y) {
                int ys = y - dy;
                if (ys < 0 || ys >= src.h) continue;
                for (int x = 0; x < src.w; ++x) {
                    int xs = x - dx;
                    if (xs < 0 || xs >= src.w) continue;
                    o[size_t(y) * src.w + x] = in[size_t(ys) * src.w + xs];
                }
            }
        }
    return out;
}

namespace {

// Inverse-mapped rotation about the image center; positive angles turn
// the content counterclockwise in (x right, y up) terms.
template <bool Bilinear>
Tensor<float> rotate_impl(const Tensor<float>& src, double degrees, float fill) {
    Tensor<float> out(src.n, src.c, src.h, src.w);
    const double th = degrees * M_PI / 180.0;
    const double cs = std::cos(th), sn = std::sin(th);
    const double cx = (src.w - 1) / 2.0, cy = (src.h - 1) / 2.0;
    for (int n = 0; n < src.n; ++n)
        for (int c = 0; c < src.c; ++c) {
            const float* in = src.plane(n, c);
            float* o = out.plane(n, c);
            for (int y = 0; y < src.h; ++y)
                for (int x = 0; x < src.w; ++x) {
                    const double xs = cs * (x - cx) + sn * (y - cy) + cx;
                    const double ys = -sn * (x - cx) + cs * (y - cy) + cy;
                    float v = fill;
                    if constexpr (Bilinear) {
                        const int x0 = int(std::floor(xs)), y0 = int(std::floor(ys));
                        const double fx = xs - x0, fy = ys - y0;
                        auto sample = [&](int yy, int xx) -> double {
                            if (xx < 0 || xx >= src.w || yy < 0 || yy >= src.h) return fill;
                            return in[size_t(yy) * src.w + xx];
                        };
                        v = float((1 - fy) * ((1 - fx) * sample(y0, x0) + fx * sample(y0, x0 + 1)) +
                                  fy * ((1 - fx) * sample(y0 + 1, x0) + fx * sample(y0 + 1, x0 + 1)));
                    } else {
                        const int xn = int(std::lround(xs)), yn = int(std::lround(ys));
                        if (xn >= 0 && xn < src.w && yn >= 0 && yn < src.h)
                            v = in[size_t(yn) * src.w + xn];
                    }
                    o[size_t(y) * src.w + x] = v;
                }
        }
    return out;
}

}  // namespace

Tensor<float> rotate_bilinear(const Tensor<float>& src, double degrees, float fill) {
    return rotate_impl<true>(src, degrees, fill);
}

Tensor<float> rotate_nearest(const Tensor<float>& src, double degrees, float fill) {
    return rotate_impl<false>(src, degrees, fill);
}

}  // namespace mtgan
