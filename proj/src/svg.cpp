#include "irsched/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace irsched {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 50;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf"};

std::string fmt(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label))
{
}

void SvgPlot::add_series(std::string name, std::vector<double> xs, std::vector<double> ys)
{
    if (xs.size() != ys.size())
        throw std::invalid_argument("SvgPlot: series coordinate lengths differ");
    series_.push_back({std::move(name), std::move(xs), std::move(ys)});
}

std::string SvgPlot::render() const
{
    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const auto& s : series_)
        for (std::size_t p = 0; p < s.xs.size(); ++p) {
            x_min = std::min(x_min, s.xs[p]);
            x_max = std::max(x_max, s.xs[p]);
            y_min = std::min(y_min, s.ys[p]);
            y_max = std::max(y_max, s.ys[p]);
        }
    if (!std::isfinite(x_min)) { // no data at all
        x_min = 0.0;
        x_max = 1.0;
        y_min = 0.0;
        y_max = 1.0;
    }
    if (x_max == x_min)
        x_max = x_min + 1.0;
    if (y_max == y_min)
        y_max = y_min + 1.0;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto px = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) {
        return kMarginTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
        << title_ << "</text>\n";

    // Axes.
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
        << "\" y2=\"" << kMarginTop + plot_h << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
        << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h
        << "\" stroke=\"black\"/>\n";

    for (int t = 0; t <= 5; ++t) {
        const double fx = x_min + (x_max - x_min) * t / 5.0;
        const double fy = y_min + (y_max - y_min) * t / 5.0;
        svg << "<line x1=\"" << px(fx) << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
            << px(fx) << "\" y2=\"" << kMarginTop + plot_h + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << px(fx) << "\" y=\"" << kMarginTop + plot_h + 18
            << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(fx) << "</text>\n";
        svg << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << py(fy) << "\" x2=\""
            << kMarginLeft << "\" y2=\"" << py(fy) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << py(fy) + 4
            << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(fy) << "</text>\n";
    }
    svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label_ << "</text>\n";
    svg << "<text x=\"16\" y=\"" << kMarginTop + plot_h / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
        << kMarginTop + plot_h / 2 << ")\">" << y_label_ << "</text>\n";

    for (std::size_t s = 0; s < series_.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t p = 0; p < series_[s].xs.size(); ++p) {
            if (p)
                svg << ' ';
            svg << fmt(px(series_[s].xs[p])) << ',' << fmt(py(series_[s].ys[p]));
        }
        svg << "\"/>\n";
        const double ly = kMarginTop + 14.0 * (s + 1);
        svg << "<line x1=\"" << kMarginLeft + plot_w - 110 << "\" y1=\"" << ly - 4 << "\" x2=\""
            << kMarginLeft + plot_w - 90 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << kMarginLeft + plot_w - 84 << "\" y=\"" << ly
            << "\" font-size=\"12\">" << series_[s].name << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void SvgPlot::write(const std::string& path) const
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write plot file: " + path);
    out << render();
}

} // namespace irsched
