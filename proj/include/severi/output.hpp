#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "severi/gyz.hpp"
#include "severi/modforms.hpp"
#include "severi/nodepoly.hpp"

namespace severi {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv };

/// Throws UnsupportedFormat for anything but "json" or "csv".
OutputFormat parse_format(std::string_view name);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// A result ready for printing. Every document has a JSON body; only some
/// also have a CSV rendering.
struct Document {
  Json body;
  std::optional<CsvTable> csv;
};

/// Compact JSON or CSV, newline-terminated. Output depends only on the
/// document, so identical documents print identical bytes.
std::string format_output(const Document& doc, OutputFormat format);

Json series_json(const RatSeries& s);
Json to_json(const NodePolynomial& p);
Json to_json(const LogForm& f);
Json to_json(const BSeriesSolution& sol);
Json to_json(const FormCatalog& forms);
Json to_json(const Invariants& inv);

/// Inverse of to_json(BSeriesSolution) for the stored fields; the log
/// series are recomputed.
BSeriesSolution solution_from_json(const Json& j);

/// Rows d = 1..dmax, columns delta = 0..; header "d,delta,value".
Document table_document(const std::vector<std::vector<BigInt>>& table);

}  // namespace severi
