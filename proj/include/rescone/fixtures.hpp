#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rescone/matrix.hpp"

namespace rescone {

inline constexpr std::string_view kRankFixture = "rankup-22x22";
inline constexpr const char* kFixtureDirEnv = "RESCONE_FIXTURE_DIR";

/// Names of the fixtures compiled into the library.
std::vector<std::string> fixture_names();

/// The compiled-in copy; throws unknown-fixture.
RatMatrix builtin_fixture(std::string_view name);

/// Reads <dir>/<name>.csv when RESCONE_FIXTURE_DIR is set, the compiled-in
/// copy otherwise. Throws unknown-fixture.
RatMatrix load_fixture(std::string_view name);

}  // namespace rescone
