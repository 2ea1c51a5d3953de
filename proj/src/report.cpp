#include "sbp/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sbp {

OutputFormat parse_output_format(const std::string& name) {
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "markdown" || name == "md") {
        return OutputFormat::markdown;
    }
    throw std::invalid_argument("unknown output format: " + name);
}

std::string prob_decimal(const ProbValue& value, int digits) {
    if (std::holds_alternative<ExactRational>(value)) {
        return to_fixed_decimal_string(std::get<ExactRational>(value), digits);
    }
    const ScaledFloat& s = std::get<ScaledFloat>(value);
    return s.to_decimal_string(std::min(digits, 15));
}

nlohmann::json prob_json(const ProbValue& value, int digits) {
    nlohmann::json j;
    j["decimal"] = prob_decimal(value, digits);
    if (std::holds_alternative<ExactRational>(value)) {
        j["exact"] = to_fraction_string(std::get<ExactRational>(value));
    } else {
        j["op_count"] = std::get<ScaledFloat>(value).op_count();
    }
    return j;
}

nlohmann::json cell_json(const TableCell& cell, int digits) {
    nlohmann::json j;
    j["m"] = cell.days;
    j["p"] = to_fraction_string(cell.threshold);
    j["r"] = cell.min_occupancy;
    j["n_min"] = cell.result.n_min;
    j["prob_below"] = prob_json(cell.result.prob_below, digits);
    j["prob_at"] = prob_json(cell.result.prob_at, digits);
    j["certification"] = to_string(cell.result.certification);
    j["rows_scanned"] = cell.result.rows_scanned;
    return j;
}

std::string render_table_json(const std::vector<TableCell>& cells, int digits) {
    nlohmann::json rows = nlohmann::json::array();
    for (const TableCell& cell : cells) {
        rows.push_back(cell_json(cell, digits));
    }
    return rows.dump(2) + "\n";
}

std::string render_table_csv(const std::vector<TableCell>& cells, int digits) {
    std::ostringstream out;
    out << "m,p,r,n_min,prob_at,certification\n";
    for (const TableCell& cell : cells) {
        out << cell.days << ',' << to_fraction_string(cell.threshold) << ','
            << cell.min_occupancy << ',' << cell.result.n_min << ','
            << prob_decimal(cell.result.prob_at, digits) << ','
            << to_string(cell.result.certification) << '\n';
    }
    return out.str();
}

std::string render_table_markdown(const std::vector<TableCell>& cells, int digits) {
    std::ostringstream out;
    out << "| m | p | r | n_min | prob_at | certification |\n";
    out << "|---|---|---|-------|---------|---------------|\n";
    for (const TableCell& cell : cells) {
        out << "| " << cell.days << " | " << to_fraction_string(cell.threshold) << " | "
            << cell.min_occupancy << " | " << cell.result.n_min << " | "
            << prob_decimal(cell.result.prob_at, digits) << " | "
            << to_string(cell.result.certification) << " |\n";
    }
    return out.str();
}

std::string render_table(const std::vector<TableCell>& cells, const OutputSpec& spec) {
    switch (spec.format) {
        case OutputFormat::json:
            return render_table_json(cells, spec.digits);
        case OutputFormat::csv:
            return render_table_csv(cells, spec.digits);
        case OutputFormat::markdown:
            return render_table_markdown(cells, spec.digits);
    }
    throw std::logic_error("unreachable output format");
}

const ReferenceTable& dasgupta2005_table() {
    static const ReferenceTable table{
        {10, 50, 100, 200, 364, 365, 366, 400, 500, 1000},
        {ExactRational(1, 2), ExactRational(999, 1000)},
        {
            {41, 304, 690, 1541, 3054, 3064, 3073, 3399, 4375, 9528},
            {112, 665, 1410, 2975, 5653, 5669, 5686, 6253, 7937, 16619},
        },
    };
    return table;
}

}  // namespace sbp
