#pragma once

#include <string>

#include "spex/verify.hpp"

namespace spex {

enum class ReportFormat { json, csv, text };

// Renders v with at most 10 significant digits, the precision used by every
// machine-readable artifact.
std::string format_value(double v);

// Stable field ordering; witnesses rendered as graph6.  The csv header is
// fixed: theorem,n,r,param,found,expected,witnesses,unique,pass.
std::string emit_report(const VerificationReport& rep, ReportFormat format);

// Inverse of the json rendering.
VerificationReport report_from_json(const std::string& text);

}  // namespace spex
