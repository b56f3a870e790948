#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spectherm {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Self-contained SVG line plot; optional log10 x axis.
void write_line_plot(const std::string& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<PlotSeries>& series,
                     bool log_x = false, bool log_y = false);

// Filled-cell field snapshot with a colour bar. values(i, j) belongs to
// coordinates (x[i], y[j]).
void write_heatmap(const std::string& path, const std::string& title,
                   const std::string& x_label, const std::string& y_label,
                   const std::vector<double>& x, const std::vector<double>& y,
                   const Eigen::MatrixXd& values);

} // namespace spectherm
