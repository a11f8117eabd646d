#include "catphase/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace catphase::out {

namespace {

// Minimal XML text escaping for labels.
std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c; break;
        }
    }
    return out;
}

std::string format_fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
    return buf;
}

std::string format_tick(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", x);
    return buf;
}

void require_rectangular(const Table& table) {
    if (table.columns.empty()) {
        throw std::invalid_argument("out: table needs at least one column");
    }
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::invalid_argument("out: ragged table row");
        }
    }
}

} // namespace

void SweepSpec::validate() const {
    if (parameter.empty()) {
        throw std::invalid_argument("out: sweep parameter name is empty");
    }
    if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
        throw std::invalid_argument("out: sweep needs finite min < max");
    }
    if (steps < 2) {
        throw std::invalid_argument("out: sweep needs at least 2 steps");
    }
}

std::vector<double> SweepSpec::grid() const {
    validate();
    std::vector<double> g(static_cast<size_t>(steps));
    const double h = (max - min) / (steps - 1);
    for (int j = 0; j < steps; ++j) {
        g[static_cast<size_t>(j)] = min + j * h;
    }
    g.front() = min;
    g.back() = max;
    return g;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string alpha_column(const std::string& prefix, double alpha) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", alpha);
    std::string label = buf;
    std::replace(label.begin(), label.end(), '.', '_');
    std::replace(label.begin(), label.end(), '-', 'm');
    return prefix + "_alpha_" + label;
}

void write_csv(std::ostream& os, const Table& table) {
    require_rectangular(table);
    for (size_t c = 0; c < table.columns.size(); ++c) {
        os << (c ? "," : "") << table.columns[c];
    }
    os << "\n";
    for (const auto& row : table.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            os << (c ? "," : "") << format_double(row[c]);
        }
        os << "\n";
    }
}

void write_json(std::ostream& os, const Table& table) {
    require_rectangular(table);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (size_t c = 0; c < row.size(); ++c) {
            obj[table.columns[c]] = row[c];
        }
        rows.push_back(std::move(obj));
    }
    os << rows.dump(2) << "\n";
}

void write_svg(std::ostream& os, const Table& table, const std::string& title) {
    require_rectangular(table);
    if (table.columns.size() < 2) {
        throw std::invalid_argument("out: svg chart needs an x column and a series");
    }
    if (table.rows.size() < 2) {
        throw std::invalid_argument("out: svg chart needs at least two rows");
    }
    constexpr double width = 800.0;
    constexpr double height = 500.0;
    constexpr double left = 70.0;
    constexpr double right = 780.0;
    constexpr double top = 40.0;
    constexpr double bottom = 455.0;
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b"};
    constexpr size_t palette_size = sizeof(palette) / sizeof(palette[0]);

    double xmin = table.rows.front()[0];
    double xmax = xmin;
    double ymin = table.rows.front()[1];
    double ymax = ymin;
    for (const auto& row : table.rows) {
        xmin = std::min(xmin, row[0]);
        xmax = std::max(xmax, row[0]);
        for (size_t c = 1; c < row.size(); ++c) {
            ymin = std::min(ymin, row[c]);
            ymax = std::max(ymax, row[c]);
        }
    }
    if (xmax == xmin) {
        xmax = xmin + 1.0;
    }
    if (ymax == ymin) {
        ymax = ymin + 1.0;
        ymin -= 1.0;
    }
    const double xspan = xmax - xmin;
    const double yspan = ymax - ymin;
    const auto px = [&](double x) { return left + (x - xmin) / xspan * (right - left); };
    const auto py = [&](double y) { return bottom - (y - ymin) / yspan * (bottom - top); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "  <rect width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n";
    if (!title.empty()) {
        os << "  <text x=\"" << (width / 2)
           << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
              "font-size=\"16\">"
           << xml_escape(title) << "</text>\n";
    }
    // Axes and ticks.
    os << "  <line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right
       << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
    os << "  <line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
       << bottom << "\" stroke=\"black\"/>\n";
    constexpr int ticks = 5;
    for (int t = 0; t < ticks; ++t) {
        const double fx = xmin + t * xspan / (ticks - 1);
        const double gx = px(fx);
        os << "  <line x1=\"" << format_fixed(gx, 2) << "\" y1=\"" << bottom << "\" x2=\""
           << format_fixed(gx, 2) << "\" y2=\"" << (bottom + 5) << "\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << format_fixed(gx, 2) << "\" y=\"" << (bottom + 20)
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
           << format_tick(fx) << "</text>\n";
        const double fy = ymin + t * yspan / (ticks - 1);
        const double gy = py(fy);
        os << "  <line x1=\"" << (left - 5) << "\" y1=\"" << format_fixed(gy, 2)
           << "\" x2=\"" << left << "\" y2=\"" << format_fixed(gy, 2)
           << "\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << (left - 8) << "\" y=\"" << format_fixed(gy + 4, 2)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
           << format_tick(fy) << "</text>\n";
    }
    // Zero line when the y range straddles it.
    if (ymin < 0.0 && ymax > 0.0) {
        os << "  <line x1=\"" << left << "\" y1=\"" << format_fixed(py(0.0), 2)
           << "\" x2=\"" << right << "\" y2=\"" << format_fixed(py(0.0), 2)
           << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
    }
    os << "  <text x=\"" << (left + right) / 2 << "\" y=\"" << (height - 8)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
       << xml_escape(table.columns[0]) << "</text>\n";
    for (size_t c = 1; c < table.columns.size(); ++c) {
        const char* color = palette[(c - 1) % palette_size];
        os << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& row : table.rows) {
            os << format_fixed(px(row[0]), 2) << "," << format_fixed(py(row[c]), 2) << " ";
        }
        os << "\"/>\n";
        const double ly = top + 16.0 * static_cast<double>(c);
        os << "  <line x1=\"" << (right - 150) << "\" y1=\"" << format_fixed(ly - 4, 2)
           << "\" x2=\"" << (right - 125) << "\" y2=\"" << format_fixed(ly - 4, 2)
           << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        os << "  <text x=\"" << (right - 118) << "\" y=\"" << format_fixed(ly, 2)
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << xml_escape(table.columns[c])
           << "</text>\n";
    }
    os << "</svg>\n";
}

} // namespace catphase::out
