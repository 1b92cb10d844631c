#pragma once

#include <istream>
#include <string>

#include "spreadcert/common.hpp"

namespace spreadcert {

/// Environment variable naming the default config file.
inline constexpr const char* kConfigEnv = "SPREADCERT_CONFIG";

/// Reads `key = value` lines over `base`. Blank lines and lines starting with
/// '#' are skipped. Keys are the Settings field names; unknown keys and
/// malformed values raise InvalidArgument.
Settings parse_settings(std::istream& in, Settings base = {});

Settings load_settings_file(const std::string& path, Settings base = {});

}  // namespace spreadcert
