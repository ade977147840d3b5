#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rfps/riordan.hpp"

namespace rfps::cli {

enum class Format { table, csv, json };

Format parse_format(std::string_view name);

// Columns of series printed side by side, one row per index.
using NamedSeries = std::pair<std::string, const Series*>;

void render_series_table(std::ostream& out, const std::vector<NamedSeries>& columns);
void render_series_csv(std::ostream& out, const std::vector<NamedSeries>& columns);

void render_matrix_table(std::ostream& out, const TriangularBlock& block);
void render_matrix_csv(std::ostream& out, const TriangularBlock& block);

std::vector<std::string> to_strings(const Series& s);
std::vector<std::vector<std::string>> to_strings(const TriangularBlock& block);

} // namespace rfps::cli
