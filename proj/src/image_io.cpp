#include "painterly/image_io.hpp"

#include <png.h>
// jpeglib.h needs FILE and size_t declared first.
#include <cstdio>
#include <jpeglib.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <csetjmp>
#include <filesystem>
#include <fstream>
#include <memory>

#include "painterly/error.hpp"

namespace painterly {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const noexcept {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

enum class Format { Png, Jpeg, Unknown };

Format sniff(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::array<unsigned char, 8> magic{};
    in.read(reinterpret_cast<char*>(magic.data()), magic.size());
    const auto got = in.gcount();
    if (got >= 8 && png_sig_cmp(magic.data(), 0, 8) == 0) return Format::Png;
    if (got >= 3 && magic[0] == 0xFF && magic[1] == 0xD8 && magic[2] == 0xFF) return Format::Jpeg;
    return Format::Unknown;
}

struct DecodeState {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::uint8_t> pixels;
    std::vector<std::uint8_t*> rows;
};

void png_error_handler(png_structp png, png_const_charp message) {
    auto* text = static_cast<std::string*>(png_get_error_ptr(png));
    if (text) *text = message ? message : "libpng error";
    png_longjmp(png, 1);
}

void png_warning_handler(png_structp, png_const_charp) {}

RgbImage decode_png(const std::string& path) {
    FilePtr file(std::fopen(path.c_str(), "rb"));
    if (!file) throw Error(ErrorCode::IoError, "cannot open " + path);

    std::string message;
    png_structp png =
        png_create_read_struct(PNG_LIBPNG_VER_STRING, &message, png_error_handler, png_warning_handler);
    if (!png) throw Error(ErrorCode::DecodeError, "libpng initialisation failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw Error(ErrorCode::DecodeError, "libpng initialisation failed");
    }

    // State written after setjmp lives on the heap so a longjmp cannot leave it stale.
    auto state = std::make_unique<DecodeState>();

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error(ErrorCode::DecodeError, path + ": " + message);
    }

    png_init_io(png, file.get());
    png_read_info(png, info);
    state->width = png_get_image_width(png, info);
    state->height = png_get_image_height(png, info);
    const int color_type = png_get_color_type(png, info);
    const int bit_depth = png_get_bit_depth(png, info);

    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
        png_set_gray_to_rgb(png);
    }
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    if (png_get_rowbytes(png, info) != static_cast<png_size_t>(state->width) * 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error(ErrorCode::UnsupportedFormat, path + ": unexpected PNG layout");
    }
    state->pixels.resize(static_cast<std::size_t>(state->width) * state->height * 3);
    state->rows.resize(state->height);
    for (std::uint32_t r = 0; r < state->height; ++r) {
        state->rows[r] = state->pixels.data() + static_cast<std::size_t>(r) * state->width * 3;
    }
    png_read_image(png, state->rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    return RgbImage(static_cast<int>(state->width), static_cast<int>(state->height),
                    std::move(state->pixels));
}

struct JpegErrorManager {
    jpeg_error_mgr base;
    std::jmp_buf jump;
    char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, err->message);
    std::longjmp(err->jump, 1);
}

RgbImage decode_jpeg(const std::string& path) {
    FilePtr file(std::fopen(path.c_str(), "rb"));
    if (!file) throw Error(ErrorCode::IoError, "cannot open " + path);

    jpeg_decompress_struct cinfo{};
    JpegErrorManager err{};
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_exit;

    auto state = std::make_unique<DecodeState>();
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw Error(ErrorCode::DecodeError, path + ": " + err.message);
    }
    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, file.get());
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    state->width = cinfo.output_width;
    state->height = cinfo.output_height;
    state->pixels.resize(static_cast<std::size_t>(state->width) * state->height * 3);
    while (cinfo.output_scanline < state->height) {
        JSAMPROW row = state->pixels.data() +
                       static_cast<std::size_t>(cinfo.output_scanline) * state->width * 3;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return RgbImage(static_cast<int>(state->width), static_cast<int>(state->height),
                    std::move(state->pixels));
}

void write_png(const std::string& path, int width, int height, int color_type, int channels,
               const std::uint8_t* data) {
    FilePtr file(std::fopen(path.c_str(), "wb"));
    if (!file) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");

    std::string message;
    png_structp png =
        png_create_write_struct(PNG_LIBPNG_VER_STRING, &message, png_error_handler, png_warning_handler);
    if (!png) throw Error(ErrorCode::IoError, "libpng initialisation failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw Error(ErrorCode::IoError, "libpng initialisation failed");
    }
    std::vector<png_const_bytep> rows(static_cast<std::size_t>(height));
    for (int r = 0; r < height; ++r) {
        rows[static_cast<std::size_t>(r)] =
            data + static_cast<std::size_t>(r) * static_cast<std::size_t>(width) * channels;
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error(ErrorCode::IoError, path + ": " + message);
    }
    png_init_io(png, file.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
                 color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_rows(png, const_cast<png_bytepp>(rows.data()), static_cast<png_uint_32>(height));
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);

    if (std::fflush(file.get()) != 0 || std::ferror(file.get())) {
        throw Error(ErrorCode::IoError, "write failed: " + path);
    }
}

} // namespace

RgbImage load_image(const std::string& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw Error(ErrorCode::FileNotFound, path);
    }
    switch (sniff(path)) {
    case Format::Png: return decode_png(path);
    case Format::Jpeg: return decode_jpeg(path);
    case Format::Unknown: break;
    }
    throw Error(ErrorCode::UnsupportedFormat, path + " is neither PNG nor JPEG");
}

void save_image(const RgbImage& img, const std::string& path) {
    write_png(path, img.width(), img.height(), PNG_COLOR_TYPE_RGB, 3, img.data().data());
}

void save_plane(const Plane& plane, const std::string& path, double lo, double hi) {
    std::vector<std::uint8_t> gray(plane.size());
    const double scale = hi > lo ? 255.0 / (hi - lo) : 0.0;
    const auto values = plane.values();
    for (std::size_t i = 0; i < gray.size(); ++i) {
        const double v = std::floor((values[i] - lo) * scale + 0.5);
        gray[i] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
    }
    write_png(path, plane.width(), plane.height(), PNG_COLOR_TYPE_GRAY, 1, gray.data());
}

} // namespace painterly
