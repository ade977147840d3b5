#include "rfps/render.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "rfps/errors.hpp"

namespace rfps::cli {

Format parse_format(std::string_view name)
{
    if (name == "table") {
        return Format::table;
    }
    if (name == "csv") {
        return Format::csv;
    }
    if (name == "json") {
        return Format::json;
    }
    throw parse_error("unknown format '" + std::string(name) + "'", 0);
}

std::vector<std::string> to_strings(const Series& s)
{
    std::vector<std::string> out;
    out.reserve(s.order() + 1);
    for (const auto& c : s.coeffs()) {
        out.push_back(to_string(c));
    }
    return out;
}

std::vector<std::vector<std::string>> to_strings(const TriangularBlock& block)
{
    std::vector<std::vector<std::string>> rows(block.dim());
    for (std::size_t i = 0; i < block.dim(); ++i) {
        for (std::size_t j = 0; j < block.dim(); ++j) {
            rows[i].push_back(to_string(block(i, j)));
        }
    }
    return rows;
}

void render_series_table(std::ostream& out, const std::vector<NamedSeries>& columns)
{
    std::size_t rows = 0;
    for (const auto& [name, s] : columns) {
        rows = std::max(rows, s->order() + 1);
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width{std::max<std::size_t>(1, std::to_string(rows).size())};
    for (const auto& [name, s] : columns) {
        cells.push_back(to_strings(*s));
        std::size_t w = name.size();
        for (const auto& c : cells.back()) {
            w = std::max(w, c.size());
        }
        width.push_back(w);
    }

    out << std::setw(static_cast<int>(width[0])) << "n";
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out << "  " << std::setw(static_cast<int>(width[c + 1])) << columns[c].first;
    }
    out << '\n';
    for (std::size_t i = 0; i < rows; ++i) {
        out << std::setw(static_cast<int>(width[0])) << i;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            // Shorter columns (a smaller truncation window) end early.
            const std::string& v = i < cells[c].size() ? cells[c][i] : std::string{};
            out << "  " << std::setw(static_cast<int>(width[c + 1])) << v;
        }
        out << '\n';
    }
}

void render_series_csv(std::ostream& out, const std::vector<NamedSeries>& columns)
{
    std::size_t rows = 0;
    out << 'n';
    for (const auto& [name, s] : columns) {
        out << ',' << name;
        rows = std::max(rows, s->order() + 1);
    }
    out << '\n';
    for (std::size_t i = 0; i < rows; ++i) {
        out << i;
        for (const auto& [name, s] : columns) {
            out << ',';
            if (i <= s->order()) {
                out << to_string((*s)[i]);
            }
        }
        out << '\n';
    }
}

void render_matrix_table(std::ostream& out, const TriangularBlock& block)
{
    const auto cells = to_strings(block);
    std::vector<std::size_t> width(block.dim(), 1);
    for (std::size_t i = 0; i < block.dim(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            width[j] = std::max(width[j], cells[i][j].size());
        }
    }
    for (std::size_t i = 0; i < block.dim(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            if (j != 0) {
                out << ' ';
            }
            out << std::setw(static_cast<int>(width[j])) << cells[i][j];
        }
        out << '\n';
    }
}

void render_matrix_csv(std::ostream& out, const TriangularBlock& block)
{
    for (std::size_t i = 0; i < block.dim(); ++i) {
        for (std::size_t j = 0; j < block.dim(); ++j) {
            if (j != 0) {
                out << ',';
            }
            out << to_string(block(i, j));
        }
        out << '\n';
    }
}

} // namespace rfps::cli
