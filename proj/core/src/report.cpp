#include "ffmoment/report.hpp"

#include <cstdio>
#include <sstream>

namespace ffm {

namespace {

std::string fixed15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string decimal_of(const QSqrtValue& v) { return fixed15(v.to_double()); }

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json to_json(const QSqrtValue& v) {
  return {{"rat", to_string(v.rat())}, {"surd", to_string(v.surd())}, {"text", v.to_string()},
          {"decimal", decimal_of(v)}};
}

std::string to_table_cell(const QSqrtValue& v) { return v.to_string() + "  (" + decimal_of(v) + ")"; }

nlohmann::ordered_json to_json(const CoeffGridReport& r) {
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"n1", p.n1},
                     {"n2", p.n2},
                     {"c_tilde", to_string(p.c_tilde)},
                     {"b_sp", to_string(p.b_sp)},
                     {"match", p.match}});
  return {{"max_order", r.max_order}, {"epsilon", to_string(r.epsilon)}, {"pairs", std::move(pairs)}};
}

std::string coeff_grid_header() { return "n1,n2,c_tilde,b_sp,match"; }

std::vector<std::string> csv_rows(const CoeffGridReport& r) {
  std::vector<std::string> rows{coeff_grid_header()};
  for (const auto& p : r.pairs)
    rows.push_back(std::to_string(p.n1) + "," + std::to_string(p.n2) + "," + to_string(p.c_tilde) + "," +
                   to_string(p.b_sp) + "," + (p.match ? "true" : "false"));
  return rows;
}

nlohmann::ordered_json to_json(const MomentReport& r) {
  nlohmann::ordered_json extras = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.extras) extras[k] = v;
  return {{"q", r.q},
          {"g", r.g},
          {"orders", r.orders},
          {"exact", to_json(r.exact)},
          {"main_term", to_json(r.main_term)},
          {"residual", to_json(r.residual)},
          {"normalized_residual", fixed15(r.normalized_residual)},
          {"extras", std::move(extras)}};
}

std::string moment_csv_header() {
  return "q,g,orders,exact_rat,exact_surd,main_term,residual_rat,residual_surd,normalized_residual";
}

std::string moment_csv_row(const MomentReport& r) {
  std::ostringstream os;
  os << r.q << ',' << r.g << ',' << csv_field(r.orders) << ',' << to_string(r.exact.rat()) << ','
     << to_string(r.exact.surd()) << ',' << csv_field(r.main_term.to_string()) << ','
     << to_string(r.residual.rat()) << ',' << to_string(r.residual.surd()) << ',' << fixed15(r.normalized_residual);
  return os.str();
}

std::string moment_table(const MomentReport& r) {
  std::ostringstream os;
  os << "q=" << r.q << " g=" << r.g << " " << r.orders << "\n"
     << "  exact:               " << to_table_cell(r.exact) << "\n"
     << "  main term:           " << to_table_cell(r.main_term) << "\n"
     << "  residual:            " << to_table_cell(r.residual) << "\n"
     << "  normalized residual: " << fixed15(r.normalized_residual) << "\n";
  for (const auto& [k, v] : r.extras) os << "  " << k << ": " << v << "\n";
  return os.str();
}

nlohmann::ordered_json to_json(const WeilReport& r) {
  nlohmann::ordered_json by_degree = nlohmann::ordered_json::array();
  for (const auto& w : r.max_by_degree) by_degree.push_back(to_string(w));
  return {{"q", r.q},
          {"g", r.g},
          {"max_deg", r.max_deg},
          {"scanned", r.scanned},
          {"max_value", to_string(r.max_value)},
          {"max_decimal", to_decimal(r.max_value)},
          {"argmax", r.argmax},
          {"max_by_degree", std::move(by_degree)}};
}

std::string weil_csv_header() { return "q,g,max_deg,scanned,max_value,max_decimal,argmax"; }

std::string weil_csv_row(const WeilReport& r) {
  std::ostringstream os;
  os << r.q << ',' << r.g << ',' << r.max_deg << ',' << r.scanned << ',' << to_string(r.max_value) << ','
     << to_decimal(r.max_value) << ',' << csv_field(r.argmax);
  return os.str();
}

}  // namespace ffm
