#include "quaddyn/render.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace quaddyn {

std::vector<std::uint8_t> render_julia_ppm(std::complex<double> c, int width, int height,
                                           int max_iter) {
    if (width < 1 || height < 1) throw std::domain_error("render_julia_ppm: bad dimensions");
    if (max_iter < 1) throw std::domain_error("render_julia_ppm: bad max_iter");
    double view = std::pow(2.0, 1.5) * std::sqrt(std::max(2.0, std::abs(c)));
    double bail = std::max(2.0, std::abs(c)) + 1.0;
    double bail2 = bail * bail;

    std::string header = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + (size_t)width * height * 3);

    for (int j = 0; j < height; j++) {
        double im = view - 2.0 * view * ((double)j + 0.5) / (double)height;
        for (int i = 0; i < width; i++) {
            double re = -view + 2.0 * view * ((double)i + 0.5) / (double)width;
            double zr = re, zi = im;
            int n = 0;
            while (n < max_iter && zr * zr + zi * zi <= bail2) {
                double t = zr * zr - zi * zi + c.real();
                zi = 2.0 * zr * zi + c.imag();
                zr = t;
                n++;
            }
            std::uint8_t r, g, b;
            if (n >= max_iter) {
                r = g = b = 0;  // bounded: black
            } else {
                // integer palette keyed on the escape count only
                int k = n % 48;
                r = (std::uint8_t)(40 + 4 * k);
                g = (std::uint8_t)(24 + 4 * ((k * 5) % 48));
                b = (std::uint8_t)(64 + 3 * ((k * 11) % 48));
            }
            out.push_back(r);
            out.push_back(g);
            out.push_back(b);
        }
    }
    return out;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write((const char*)bytes.data(), (std::streamsize)bytes.size());
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace quaddyn
