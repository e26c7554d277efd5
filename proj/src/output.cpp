#include "severi/output.hpp"

#include "severi/error.hpp"

namespace severi {

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw Error(ErrorCode::UnsupportedFormat, "unsupported output format '" + std::string(name) + "'");
}

std::string format_output(const Document& doc, OutputFormat format) {
  if (format == OutputFormat::Json) return doc.body.dump() + "\n";
  if (!doc.csv) throw Error(ErrorCode::UnsupportedFormat, "this result has no CSV form");
  std::string out;
  auto line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += fields[i];
    }
    out += '\n';
  };
  line(doc.csv->header);
  for (const auto& row : doc.csv->rows) line(row);
  return out;
}

Json series_json(const RatSeries& s) { return Json(to_strings(s)); }

Json to_json(const NodePolynomial& p) {
  Json coeffs = Json::array();
  for (std::size_t i = 0; i <= 2 * p.delta; ++i) coeffs.push_back(to_string(p.poly.coeff(i)));
  return Json{{"delta", p.delta}, {"coeffs", coeffs}, {"fit_range", p.fit_range}, {"verified", p.verified_extra}};
}

Json to_json(const LogForm& f) {
  return Json{{"kappa", f.kappa},
              {"a2", to_string(f.a2)},
              {"a1", to_string(f.a1)},
              {"a0", to_string(f.a0)},
              {"integral_pattern", f.has_integral_pattern()}};
}

Json to_json(const BSeriesSolution& sol) {
  return Json{{"order", sol.order},          {"b1", series_json(sol.b1)},
              {"b2", series_json(sol.b2)},   {"d_used", sol.d_used},
              {"consistent", sol.consistent}, {"integral", sol.integral}};
}

Json to_json(const FormCatalog& forms) {
  return Json{{"order", forms.order},
              {"u", series_json(forms.u)},
              {"b3", series_json(forms.b3)},
              {"b4", series_json(forms.b4)},
              {"delta", series_json(forms.delta_form)}};
}

Json to_json(const Invariants& inv) { return Json{{"x", inv.x}, {"y", inv.y}, {"z", inv.z}, {"t", inv.t}}; }

BSeriesSolution solution_from_json(const Json& j) {
  try {
    BSeriesSolution sol;
    sol.order = j.at("order").get<std::size_t>();
    sol.b1 = series_from_strings(j.at("b1").get<std::vector<std::string>>());
    sol.b2 = series_from_strings(j.at("b2").get<std::vector<std::string>>());
    if (sol.b1.order() != sol.order || sol.b2.order() != sol.order) {
      throw Error(ErrorCode::ParseError, "series length does not match order");
    }
    sol.log_b1 = log(sol.b1);
    sol.log_b2 = log(sol.b2);
    sol.d_used = j.at("d_used").get<std::vector<std::uint32_t>>();
    sol.consistent = j.at("consistent").get<bool>();
    sol.integral = j.at("integral").get<bool>();
    return sol;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad solution document: ") + e.what());
  }
}

Document table_document(const std::vector<std::vector<BigInt>>& table) {
  Document doc;
  Json rows = Json::array();
  CsvTable csv{{"d", "delta", "value"}, {}};
  for (std::size_t r = 0; r < table.size(); ++r) {
    Json row = Json::array();
    for (std::size_t delta = 0; delta < table[r].size(); ++delta) {
      const std::string value = to_string(table[r][delta]);
      row.push_back(value);
      csv.rows.push_back({std::to_string(r + 1), std::to_string(delta), value});
    }
    rows.push_back(std::move(row));
  }
  const std::size_t delta_max = table.empty() ? 0 : table.front().size() - 1;
  doc.body = Json{{"dmax", table.size()}, {"deltamax", delta_max}, {"values", std::move(rows)}};
  doc.csv = std::move(csv);
  return doc;
}

}  // namespace severi
