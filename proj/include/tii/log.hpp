#pragma once

#include <functional>
#include <string_view>

namespace tii {

using WarningSink = std::function<void(std::string_view)>;

// Non-fatal conditions (zero-padded UASE columns, skipped AUC steps, ...).
// Default sink writes "warning: <msg>" to stderr.
void warn(std::string_view message);

// Replaces the sink and returns the previous one. Passing an empty function
// restores the default.
WarningSink set_warning_sink(WarningSink sink);

}  // namespace tii
