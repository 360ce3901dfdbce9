#pragma once

#include <string>
#include <vector>

#include "rahp/harness.hpp"

namespace rahp {

/// Column names of the bounds report, in output order.
std::vector<std::string> report_header();

/// One CSV row per entry; bounds that do not apply are left empty.
std::vector<std::string> report_row(const CatalogEntry& entry);

/// Header plus rows, RFC 4180 quoting, "\n" line ends. Numbers use %.9g in
/// the C locale, so the text is the same on every run and platform.
std::string render_report(const std::vector<CatalogEntry>& entries);

/// "3:8 4:2" style summary of the nonzero p_k.
std::string face_degree_summary(const IncidenceProfile& prof);

std::string csv_escape(const std::string& field);

/// %.9g without locale dependence.
std::string format_number(double x);

}  // namespace rahp
