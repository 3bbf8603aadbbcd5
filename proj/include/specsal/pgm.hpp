#pragma once

#include <iosfwd>
#include <string>

#include "specsal/image.hpp"

namespace specsal {

// Reads a grayscale image. PGM (P2 or P5) and PNG are accepted, dispatched on
// the file magic; intensities are scaled to [0,1]. Throws std::runtime_error
// on unreadable or malformed files.
GrayImage read_gray_image(const std::string& path);

GrayImage read_pgm(std::istream& in);

// Canonical output format: binary PGM, maxval 255. Intensities are clamped to
// [0,1] and quantized by rounding, so output bytes are reproducible.
void write_pgm(const std::string& path, const GrayImage& img);

}  // namespace specsal
