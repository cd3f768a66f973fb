// PNG/JPEG decode and PNG encode behind the GrayImage contract.

#include <algorithm>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

#include <jpeglib.h>
#include <png.h>

#include "sketcheval/errors.hpp"
#include "sketcheval/image.hpp"

namespace sketcheval {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

double luminance(unsigned char r, unsigned char g, unsigned char b) {
    double v = 0.299 * (r / 255.0) + 0.587 * (g / 255.0) + 0.114 * (b / 255.0);
    return std::clamp(v, 0.0, 1.0);
}

void png_error_handler(png_structp png, png_const_charp) {
    png_longjmp(png, 1);
}

void png_silent_warning(png_structp, png_const_charp) {}

GrayImage decode_png(std::FILE* f, const std::string& name) {
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                             png_error_handler, png_silent_warning);
    if (!png) throw numerical_error("libpng: failed to allocate read struct");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw numerical_error("libpng: failed to allocate info struct");
    }

    std::vector<unsigned char> pixels;
    std::vector<png_bytep> row_ptrs;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw format_error(name + ": not a decodable PNG");
    }

    png_init_io(png, f);
    png_read_info(png, info);

    png_uint_32 width = png_get_image_width(png, info);
    png_uint_32 height = png_get_image_height(png, info);
    int color_type = png_get_color_type(png, info);
    int bit_depth = png_get_bit_depth(png, info);

    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    int channels = png_get_channels(png, info);
    if (channels == 4) {
        png_set_strip_alpha(png);
        png_read_update_info(png, info);
        channels = png_get_channels(png, info);
    }
    if (channels != 1 && channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw format_error(name + ": unsupported PNG channel layout");
    }

    std::size_t stride = static_cast<std::size_t>(width) * channels;
    pixels.resize(stride * height);
    row_ptrs.resize(height);
    for (png_uint_32 y = 0; y < height; ++y) row_ptrs[y] = pixels.data() + y * stride;
    png_read_image(png, row_ptrs.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    GrayImage img = make_image(static_cast<int>(width), static_cast<int>(height));
    for (png_uint_32 y = 0; y < height; ++y) {
        const unsigned char* row = pixels.data() + y * stride;
        for (png_uint_32 x = 0; x < width; ++x) {
            if (channels == 1)
                img.at(static_cast<int>(x), static_cast<int>(y)) = row[x] / 255.0;
            else
                img.at(static_cast<int>(x), static_cast<int>(y)) =
                    luminance(row[3 * x], row[3 * x + 1], row[3 * x + 2]);
        }
    }
    return img;
}

struct JpegErrorMgr {
    jpeg_error_mgr pub;
    std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    std::longjmp(mgr->jump, 1);
}

void jpeg_silent_output(j_common_ptr) {}

GrayImage decode_jpeg(std::FILE* f, const std::string& name) {
    jpeg_decompress_struct cinfo;
    JpegErrorMgr err;
    cinfo.err = jpeg_std_error(&err.pub);
    err.pub.error_exit = jpeg_error_exit;
    err.pub.output_message = jpeg_silent_output;

    std::vector<unsigned char> rowbuf;
    GrayImage img;
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw format_error(name + ": not a decodable JPEG");
    }

    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, f);
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = (cinfo.num_components == 1) ? JCS_GRAYSCALE : JCS_RGB;
    jpeg_start_decompress(&cinfo);

    const int width = static_cast<int>(cinfo.output_width);
    const int height = static_cast<int>(cinfo.output_height);
    const int channels = cinfo.output_components;
    img = make_image(width, height);
    rowbuf.resize(static_cast<std::size_t>(width) * channels);

    while (cinfo.output_scanline < cinfo.output_height) {
        unsigned char* rows[1] = {rowbuf.data()};
        jpeg_read_scanlines(&cinfo, rows, 1);
        int y = static_cast<int>(cinfo.output_scanline) - 1;
        for (int x = 0; x < width; ++x) {
            if (channels == 1)
                img.at(x, y) = rowbuf[x] / 255.0;
            else
                img.at(x, y) = luminance(rowbuf[3 * x], rowbuf[3 * x + 1], rowbuf[3 * x + 2]);
        }
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return img;
}

}  // namespace

GrayImage load_image(const std::filesystem::path& path) {
    FilePtr f(std::fopen(path.string().c_str(), "rb"));
    if (!f) throw input_error("cannot open image file: " + path.string());

    unsigned char magic[8] = {0};
    std::size_t got = std::fread(magic, 1, sizeof magic, f.get());
    std::rewind(f.get());

    static const unsigned char png_magic[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
    if (got >= 8 && std::memcmp(magic, png_magic, 8) == 0)
        return decode_png(f.get(), path.string());
    if (got >= 2 && magic[0] == 0xFF && magic[1] == 0xD8)
        return decode_jpeg(f.get(), path.string());
    throw format_error(path.string() + ": unrecognized image format (expected PNG or JPEG)");
}

void save_png(const GrayImage& img, const std::filesystem::path& path) {
    if (img.width < 1 || img.height < 1)
        throw argument_error("save_png: empty image");

    FilePtr f(std::fopen(path.string().c_str(), "wb"));
    if (!f) throw input_error("cannot open file for writing: " + path.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                              png_error_handler, png_silent_warning);
    if (!png) throw numerical_error("libpng: failed to allocate write struct");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw numerical_error("libpng: failed to allocate info struct");
    }

    std::vector<unsigned char> bytes(img.pixel_count());
    std::vector<png_bytep> row_ptrs(img.height);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw input_error("libpng: write failed for " + path.string());
    }

    for (std::size_t i = 0; i < img.data.size(); ++i) {
        double v = std::clamp(img.data[i], 0.0, 1.0);
        bytes[i] = static_cast<unsigned char>(std::lround(v * 255.0));
    }
    for (int y = 0; y < img.height; ++y)
        row_ptrs[y] = bytes.data() + static_cast<std::size_t>(y) * img.width;

    png_init_io(png, f.get());
    png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, row_ptrs.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

}  // namespace sketcheval
