#pragma once

// Escape-time Julia renderer with deterministic P6/PPM bytes.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace quaddyn {

// View window: the square circumscribing the disk of radius
// 2^{3/2} max(2, |c|)^{1/2} centered at 0, which contains the Julia set.
std::vector<std::uint8_t> render_julia_ppm(std::complex<double> c, int width, int height,
                                           int max_iter);

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

}  // namespace quaddyn
