#ifndef MARSNAV_PNG_IO_HPP
#define MARSNAV_PNG_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace marsnav {

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major
};

struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, 3 bytes per pixel
};

void write_gray_png(const std::string& path, const GrayImage& img);
GrayImage read_gray_png(const std::string& path);

void write_rgb_png(const std::string& path, const RgbImage& img);
RgbImage read_rgb_png(const std::string& path);

}  // namespace marsnav

#endif
