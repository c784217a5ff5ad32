#include "binsum/report.hpp"

namespace binsum {

namespace {

nlohmann::ordered_json params_object(
    const std::vector<std::pair<std::string, std::string>>& params) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [name, value] : params)
        out[name] = value;
    return out;
}

}  // namespace

nlohmann::ordered_json report_json(const IdentityReport& report) {
    nlohmann::ordered_json out;
    out["identity"] = report.identity;
    if (report.two_forms)
        out["form"] = report.form == Form::Corrected ? "corrected" : "printed";
    out["grid"] = params_object(report.grid);
    out["checked"] = report.checked;
    out["passed"] = report.passed;
    nlohmann::ordered_json cex = nlohmann::ordered_json::array();
    for (const Counterexample& c : report.counterexamples) {
        nlohmann::ordered_json one;
        one["params"] = params_object(c.params);
        one["lhs"] = c.lhs;
        one["rhs"] = c.rhs;
        cex.push_back(std::move(one));
    }
    out["counterexamples"] = std::move(cex);
    if (report.two_forms) {
        out["corrected_form_passes"] = report.corrected_form_passes;
        out["printed_form_passes"] = report.printed_form_passes;
    }
    out["elapsed_ms"] = report.elapsed_ms;
    return out;
}

nlohmann::ordered_json table_json(const std::string& identity,
                                  const std::vector<std::pair<std::string, std::string>>& grid,
                                  std::span<const TableRow> rows) {
    nlohmann::ordered_json out;
    out["identity"] = identity;
    out["grid"] = params_object(grid);
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const TableRow& row : rows) {
        nlohmann::ordered_json one = params_object(row.params);
        one["lhs"] = row.lhs;
        one["rhs"] = row.rhs;
        one["equal"] = row.equal;
        list.push_back(std::move(one));
    }
    out["rows"] = std::move(list);
    return out;
}

std::string table_csv(std::span<const TableRow> rows) {
    std::string out;
    if (rows.empty())
        return out;
    for (const auto& [name, value] : rows.front().params)
        out += name + ",";
    out += "lhs,rhs,equal\n";
    for (const TableRow& row : rows) {
        for (const auto& [name, value] : row.params)
            out += value + ",";
        out += row.lhs + "," + row.rhs + "," + (row.equal ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace binsum
