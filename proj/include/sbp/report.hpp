#pragma once

#include "sbp/solver.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace sbp {

enum class OutputFormat { json, csv, markdown };

struct OutputSpec {
    OutputFormat format = OutputFormat::markdown;
    int digits = 20;  // decimal digits shown for probabilities
};

OutputFormat parse_output_format(const std::string& name);

// Decimal rendering of a probability in either arithmetic. Exact rationals
// are printed fixed-point with round-half-even; scaled values print in
// scientific notation with their op count available separately.
std::string prob_decimal(const ProbValue& value, int digits);

// json objects always carry exact rationals additionally as
// "numerator/denominator" strings; nothing is lost in the machine channel.
nlohmann::json prob_json(const ProbValue& value, int digits);
nlohmann::json cell_json(const TableCell& cell, int digits);

std::string render_table_json(const std::vector<TableCell>& cells, int digits);
std::string render_table_csv(const std::vector<TableCell>& cells, int digits);
std::string render_table_markdown(const std::vector<TableCell>& cells, int digits);
std::string render_table(const std::vector<TableCell>& cells, const OutputSpec& spec);

// The published reference table this project reproduces: minimum group sizes
// for thresholds 1/2 and 0.999 over ten year lengths. Embedded as data so a
// --check run is a regression gate, not a self-comparison.
struct ReferenceTable {
    std::vector<long long> m_list;
    std::vector<ExactRational> p_list;
    std::vector<std::vector<long long>> expected;  // [p index][m index]
};

const ReferenceTable& dasgupta2005_table();

}  // namespace sbp
