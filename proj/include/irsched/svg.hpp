#ifndef IRSCHED_SVG_HPP
#define IRSCHED_SVG_HPP

#include <string>
#include <vector>

namespace irsched {

// Minimal static line-chart writer: axes, ticks, one polyline per series,
// legend. Enough for rate curves and ECDFs; no external dependencies.
class SvgPlot {
  public:
    SvgPlot(std::string title, std::string x_label, std::string y_label);

    void add_series(std::string name, std::vector<double> xs, std::vector<double> ys);

    // Rendered document; deterministic for identical inputs.
    std::string render() const;
    void write(const std::string& path) const;

  private:
    struct Series {
        std::string name;
        std::vector<double> xs, ys;
    };
    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
};

} // namespace irsched

#endif
