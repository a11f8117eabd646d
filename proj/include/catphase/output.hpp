#ifndef CATPHASE_OUTPUT_HPP
#define CATPHASE_OUTPUT_HPP

#include <ostream>
#include <string>
#include <vector>

// Tabular emission for parameter sweeps: CSV (17 significant digits,
// snake_case header, comma separator, LF endings), JSON (array of row
// objects), and a self-contained SVG line chart.

namespace catphase::out {

struct SweepSpec {
    std::string parameter;
    double min = 0.0;
    double max = 0.0;
    int steps = 0;

    // min < max, steps >= 2, finite endpoints.
    void validate() const;

    // Inclusive linspace; endpoints hit exactly.
    std::vector<double> grid() const;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows; // every row has columns.size() entries
};

// Shortest representation that still round-trips a double: %.17g.
std::string format_double(double x);

// Column label "<prefix>_alpha_<value>" with '.' replaced by '_'.
std::string alpha_column(const std::string& prefix, double alpha);

void write_csv(std::ostream& os, const Table& table);
void write_json(std::ostream& os, const Table& table);

// 800x500 line chart, first column on x, one polyline per further column.
void write_svg(std::ostream& os, const Table& table, const std::string& title);

} // namespace catphase::out

#endif
