#pragma once

#include <string>

#include "json.hpp"
#include "sc/taut.hpp"

namespace sc {

/// Text form: `horizon N`, optional `provenance ...`, then `in`, `unknown`
/// lines listing lengths; unlisted lengths up to the horizon are Out.
TruncatedSpectrum parse_spectrum(const std::string& text, const std::string& source = "<text>");
TruncatedSpectrum load_spectrum(const std::string& path);
std::string format_spectrum(const TruncatedSpectrum& s);

/// Inline form `IN[?UNKNOWN]@HORIZON`, e.g. `5,7@12` or `5?9@12` or `@8`.
TruncatedSpectrum parse_inline_spectrum(const std::string& spec);

/// A path to an existing file is read as text, anything else as inline.
TruncatedSpectrum spectrum_argument(const std::string& arg);

nlohmann::ordered_json to_json(const TruncatedSpectrum& s);

}  // namespace sc
