#include "spectherm/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "spectherm/csv.hpp"

namespace spectherm {

namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 70, kRight = 90, kTop = 40, kBottom = 55;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

const char* kPalette[] = {"#3b6fb5", "#c83737", "#3b9b55", "#d98a27", "#7d4fa8", "#5a5a5a"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Axis {
    double lo = 0, hi = 1;
    bool log = false;
    double to01(double v) const {
        const double a = log ? std::log10(v) : v;
        const double l = log ? std::log10(lo) : lo;
        const double h = log ? std::log10(hi) : hi;
        return (a - l) / (h - l);
    }
    std::vector<double> ticks() const {
        std::vector<double> out;
        if (log) {
            const int d0 = static_cast<int>(std::ceil(std::log10(lo) - 1e-9));
            const int d1 = static_cast<int>(std::floor(std::log10(hi) + 1e-9));
            for (int d = d0; d <= d1; ++d) out.push_back(std::pow(10.0, d));
            return out;
        }
        const double span = hi - lo;
        const double raw = span / 5.0;
        const double mag = std::pow(10.0, std::floor(std::log10(raw)));
        double step = mag;
        for (double m : {1.0, 2.0, 5.0, 10.0})
            if (raw <= m * mag) { step = m * mag; break; }
        for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step)
            out.push_back(std::abs(t) < 1e-12 * span ? 0.0 : t);
        return out;
    }
};

Axis fit_axis(double lo, double hi, bool log) {
    Axis ax;
    ax.log = log;
    if (log) {
        if (!(lo > 0)) throw std::domain_error("log axis requires positive data");
        ax.lo = lo;
        ax.hi = hi > lo ? hi : lo * 10;
        return ax;
    }
    if (hi <= lo) hi = lo + 1;
    const double pad = 0.05 * (hi - lo);
    ax.lo = lo - pad;
    ax.hi = hi + pad;
    return ax;
}

// Five-stop blue -> teal -> green -> amber -> red ramp.
std::string ramp_color(double t) {
    static const int stops[5][3] = {
        {48, 62, 140}, {60, 140, 190}, {90, 180, 110}, {225, 170, 60}, {190, 50, 40}};
    t = std::clamp(t, 0.0, 1.0) * 4.0;
    const int k = std::min(3, static_cast<int>(t));
    const double f = t - k;
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                  static_cast<int>(stops[k][0] + f * (stops[k + 1][0] - stops[k][0])),
                  static_cast<int>(stops[k][1] + f * (stops[k + 1][1] - stops[k][1])),
                  static_cast<int>(stops[k][2] + f * (stops[k + 1][2] - stops[k][2])));
    return buf;
}

void open_svg(std::ostringstream& out, const std::string& title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
        << "\" font-family=\"sans-serif\" font-size=\"13\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << title << "</text>\n";
}

void axes_and_labels(std::ostringstream& out, const Axis& xa, const Axis& ya,
                     const std::string& x_label, const std::string& y_label) {
    out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kPlotW
        << "\" height=\"" << kPlotH << "\" fill=\"none\" stroke=\"#333\"/>\n";
    for (double t : xa.ticks()) {
        const double px = kLeft + xa.to01(t) * kPlotW;
        out << "<line x1=\"" << num(px) << "\" y1=\"" << kTop + kPlotH << "\" x2=\"" << num(px)
            << "\" y2=\"" << kTop + kPlotH + 5 << "\" stroke=\"#333\"/>\n"
            << "<line x1=\"" << num(px) << "\" y1=\"" << kTop << "\" x2=\"" << num(px)
            << "\" y2=\"" << kTop + kPlotH << "\" stroke=\"#ddd\"/>\n"
            << "<text x=\"" << num(px) << "\" y=\"" << kTop + kPlotH + 20
            << "\" text-anchor=\"middle\">" << num(t) << "</text>\n";
    }
    for (double t : ya.ticks()) {
        const double py = kTop + (1.0 - ya.to01(t)) * kPlotH;
        out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << num(py) << "\" x2=\"" << kLeft
            << "\" y2=\"" << num(py) << "\" stroke=\"#333\"/>\n"
            << "<line x1=\"" << kLeft << "\" y1=\"" << num(py) << "\" x2=\"" << kLeft + kPlotW
            << "\" y2=\"" << num(py) << "\" stroke=\"#ddd\"/>\n"
            << "<text x=\"" << kLeft - 9 << "\" y=\"" << num(py + 4)
            << "\" text-anchor=\"end\">" << num(t) << "</text>\n";
    }
    out << "<text x=\"" << kLeft + kPlotW / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\">" << x_label << "</text>\n"
        << "<text x=\"18\" y=\"" << kTop + kPlotH / 2
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << kTop + kPlotH / 2 << ")\">"
        << y_label << "</text>\n";
}

} // namespace

void write_line_plot(const std::string& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<PlotSeries>& series, bool log_x, bool log_y) {
    if (series.empty()) throw std::domain_error("line plot needs at least one series");
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = -xlo;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size() || s.x.empty())
            throw std::domain_error("plot series sizes mismatch");
        for (size_t i = 0; i < s.x.size(); ++i) {
            xlo = std::min(xlo, s.x[i]);
            xhi = std::max(xhi, s.x[i]);
            ylo = std::min(ylo, s.y[i]);
            yhi = std::max(yhi, s.y[i]);
        }
    }
    const Axis xa = fit_axis(xlo, xhi, log_x);
    const Axis ya = fit_axis(ylo, yhi, log_y);

    std::ostringstream out;
    open_svg(out, title);
    axes_and_labels(out, xa, ya, x_label, y_label);
    for (size_t k = 0; k < series.size(); ++k) {
        const char* color = kPalette[k % 6];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\" points=\"";
        for (size_t i = 0; i < series[k].x.size(); ++i) {
            const double px = kLeft + xa.to01(series[k].x[i]) * kPlotW;
            const double py = kTop + (1.0 - ya.to01(series[k].y[i])) * kPlotH;
            out << num(px) << ',' << num(py) << ' ';
        }
        out << "\"/>\n";
        const double ly = kTop + 16 + 18 * static_cast<double>(k);
        out << "<line x1=\"" << kLeft + kPlotW - 150 << "\" y1=\"" << ly << "\" x2=\""
            << kLeft + kPlotW - 125 << "\" y2=\"" << ly << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << kLeft + kPlotW - 118 << "\" y=\"" << ly + 4 << "\">"
            << series[k].label << "</text>\n";
    }
    out << "</svg>\n";
    write_text_file(path, out.str());
}

void write_heatmap(const std::string& path, const std::string& title,
                   const std::string& x_label, const std::string& y_label,
                   const std::vector<double>& x, const std::vector<double>& y,
                   const Eigen::MatrixXd& values) {
    if (static_cast<Eigen::Index>(x.size()) != values.rows() ||
        static_cast<Eigen::Index>(y.size()) != values.cols() || x.size() < 2 || y.size() < 2)
        throw std::domain_error("heatmap dimensions mismatch");
    const double vlo = values.minCoeff(), vhi = values.maxCoeff();
    const double span = vhi > vlo ? vhi - vlo : 1.0;
    const Axis xa{x.front(), x.back(), false};
    const Axis ya{y.front(), y.back(), false};

    std::ostringstream out;
    open_svg(out, title);
    for (size_t i = 0; i < x.size(); ++i) {
        const double x0 = i == 0 ? x[0] : 0.5 * (x[i - 1] + x[i]);
        const double x1 = i + 1 == x.size() ? x.back() : 0.5 * (x[i] + x[i + 1]);
        for (size_t j = 0; j < y.size(); ++j) {
            const double y0 = j == 0 ? y[0] : 0.5 * (y[j - 1] + y[j]);
            const double y1 = j + 1 == y.size() ? y.back() : 0.5 * (y[j] + y[j + 1]);
            const double px = kLeft + xa.to01(x0) * kPlotW;
            const double pw = (xa.to01(x1) - xa.to01(x0)) * kPlotW;
            const double py = kTop + (1.0 - ya.to01(y1)) * kPlotH;
            const double ph = (ya.to01(y1) - ya.to01(y0)) * kPlotH;
            out << "<rect x=\"" << num(px) << "\" y=\"" << num(py) << "\" width=\""
                << num(pw + 0.5) << "\" height=\"" << num(ph + 0.5) << "\" fill=\""
                << ramp_color((values(static_cast<Eigen::Index>(i),
                                      static_cast<Eigen::Index>(j)) - vlo) / span)
                << "\"/>\n";
        }
    }
    axes_and_labels(out, xa, ya, x_label, y_label);
    // colour bar
    const double bx = kLeft + kPlotW + 6;
    for (int k = 0; k < 64; ++k) {
        const double py = kTop + kPlotH * (1.0 - (k + 1) / 64.0);
        out << "<rect x=\"" << bx << "\" y=\"" << num(py) << "\" width=\"10\" height=\""
            << num(kPlotH / 64.0 + 0.5) << "\" fill=\"" << ramp_color((k + 0.5) / 64.0) << "\"/>\n";
    }
    out << "<text x=\"" << bx + 14 << "\" y=\"" << kTop + kPlotH << "\">" << num(vlo)
        << "</text>\n"
        << "<text x=\"" << bx + 14 << "\" y=\"" << kTop + 10 << "\">" << num(vhi) << "</text>\n"
        << "</svg>\n";
    write_text_file(path, out.str());
}

} // namespace spectherm
