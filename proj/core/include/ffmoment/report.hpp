#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ffmoment/exact.hpp"
#include "ffmoment/moments.hpp"
#include "ffmoment/qsqrt.hpp"

namespace ffm {

/// {"rat": "p/q", "surd": "r/s", "text": ..., "decimal": ...}
nlohmann::ordered_json to_json(const QSqrtValue& v);
/// Exact form followed by a 15-digit decimal.
std::string to_table_cell(const QSqrtValue& v);

nlohmann::ordered_json to_json(const CoeffGridReport& r);
std::vector<std::string> csv_rows(const CoeffGridReport& r);  // header first
std::string coeff_grid_header();

nlohmann::ordered_json to_json(const MomentReport& r);
std::string moment_csv_header();
std::string moment_csv_row(const MomentReport& r);
std::string moment_table(const MomentReport& r);

nlohmann::ordered_json to_json(const WeilReport& r);
std::string weil_csv_header();
std::string weil_csv_row(const WeilReport& r);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace ffm
