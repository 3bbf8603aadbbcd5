#include "specsal/pgm.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace specsal {

namespace {

// PNM headers allow '#' comments between tokens.
int next_pnm_token(std::istream& in) {
    for (;;) {
        int c = in.peek();
        if (c == EOF) throw std::runtime_error("pgm: truncated header");
        if (std::isspace(c)) {
            in.get();
        } else if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else {
            int value;
            if (!(in >> value)) throw std::runtime_error("pgm: malformed header");
            return value;
        }
    }
}

GrayImage read_png(const std::string& path) {
    FILE* fp = std::fopen(path.c_str(), "rb");
    if (!fp) throw std::runtime_error("cannot open " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        if (png) png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw std::runtime_error("png: allocation failure");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw std::runtime_error("png: failed to decode " + path);
    }

    png_init_io(png, fp);
    png_read_info(png, info);

    // Normalize everything to 8-bit grayscale without alpha.
    png_set_strip_16(png);
    png_set_strip_alpha(png);
    if (png_get_color_type(png, info) == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (png_get_color_type(png, info) & PNG_COLOR_MASK_COLOR)
        png_set_rgb_to_gray(png, 1, -1.0, -1.0);
    if (png_get_bit_depth(png, info) < 8) png_set_expand_gray_1_2_4_to_8(png);
    png_read_update_info(png, info);

    const int width = static_cast<int>(png_get_image_width(png, info));
    const int height = static_cast<int>(png_get_image_height(png, info));
    std::vector<uint8_t> row(png_get_rowbytes(png, info));

    GrayImage img(width, height);
    for (int y = 0; y < height; ++y) {
        png_read_row(png, row.data(), nullptr);
        for (int x = 0; x < width; ++x) img.at(x, y) = row[x] / 255.0;
    }
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    return img;
}

}  // namespace

GrayImage read_pgm(std::istream& in) {
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5'))
        throw std::runtime_error("pgm: not a P2/P5 file");
    const bool binary = magic[1] == '5';

    const int width = next_pnm_token(in);
    const int height = next_pnm_token(in);
    const int maxval = next_pnm_token(in);
    if (width < 1 || height < 1 || maxval < 1 || maxval > 65535)
        throw std::runtime_error("pgm: bad dimensions or maxval");

    GrayImage img(width, height);
    if (binary) {
        in.get();  // single whitespace after maxval
        const int bytes = maxval > 255 ? 2 : 1;
        std::vector<uint8_t> buf(static_cast<size_t>(width) * height * bytes);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
        if (!in) throw std::runtime_error("pgm: truncated pixel data");
        for (size_t i = 0; i < img.data.size(); ++i) {
            const int v = bytes == 1 ? buf[i] : (buf[2 * i] << 8) | buf[2 * i + 1];
            img.data[i] = static_cast<double>(v) / maxval;
        }
    } else {
        for (size_t i = 0; i < img.data.size(); ++i) {
            const int v = next_pnm_token(in);
            img.data[i] = static_cast<double>(v) / maxval;
        }
    }
    return img;
}

GrayImage read_gray_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    char magic[8] = {};
    in.read(magic, 8);
    in.seekg(0);
    if (magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5')) return read_pgm(in);
    const unsigned char png_sig[4] = {0x89, 'P', 'N', 'G'};
    if (std::equal(png_sig, png_sig + 4, reinterpret_cast<unsigned char*>(magic))) {
        in.close();
        return read_png(path);
    }
    throw std::runtime_error(path + ": unsupported image format (want PGM or PNG)");
}

void write_pgm(const std::string& path, const GrayImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    std::vector<uint8_t> row(img.width);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const double v = std::clamp(img.at(x, y), 0.0, 1.0);
            row[x] = static_cast<uint8_t>(std::lround(v * 255.0));
        }
        out.write(reinterpret_cast<const char*>(row.data()), img.width);
    }
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace specsal
