// Minimal deterministic rasterizer for the harness plots: grayscale canvas,
// lines, bars and a 5x7 bitmap font, exported as PGM. CSV stays the
// canonical output; these images are conveniences.
#pragma once

#include <string>
#include <vector>

#include "rhi/tensor.hpp"

namespace rhi {

class Canvas {
public:
    Canvas(std::size_t width, std::size_t height, double background = 1.0);

    std::size_t width() const { return w_; }
    std::size_t height() const { return h_; }

    void set(long x, long y, double v);
    void fill_rect(long x0, long y0, long x1, long y1, double v);
    void line(long x0, long y0, long x1, long y1, double v);
    // Uppercase 5x7 font (letters, digits, -.+/:_ and space).
    void text(long x, long y, const std::string& s, double v, int scale = 1);

    const Tensor& image() const { return img_; }
    void save_pgm(const std::string& path) const;

private:
    std::size_t w_, h_;
    Tensor img_;
};

struct BarGroup {
    std::string label;
    std::vector<double> values;  // one bar per series
    std::vector<double> errors;  // +/- whisker per bar (same length)
};

// Grouped bar chart with a zero baseline; series named in `series`.
void plot_grouped_bars(const std::string& path, const std::string& title,
                       const std::vector<std::string>& series,
                       const std::vector<BarGroup>& groups);

struct Series {
    std::string label;
    std::vector<double> y;
};

// Overlaid time series with a shared x axis in seconds.
void plot_time_series(const std::string& path, const std::string& title, double dt,
                      const std::vector<Series>& series);

}  // namespace rhi
