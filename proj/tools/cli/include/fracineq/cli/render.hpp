#pragma once

#include "fracineq/theorems.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace fracineq::cli {

/// %.17g in the C locale; "nan", "inf", "-inf" for non-finite values.
std::string csv_real(double v);

/// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(const std::string& s);

std::string csv_header();
std::string csv_row(const CheckReport& r);

/// Field names follow CheckReport; NaN becomes null.
nlohmann::json report_json(const CheckReport& r);

/// Multi-line human-readable rendering.
void render_text(std::ostream& out, const CheckReport& r);

/// One line per report in sweeps: id, parameters, sides, status.
std::string text_row(const CheckReport& r);

} // namespace fracineq::cli
