#pragma once

#include <functional>
#include <string_view>

namespace mmr {

// Receives non-fatal warnings (e.g. a constant plane handed to the contrast
// stretch). The default handler writes to std::clog. Passing an empty function
// silences diagnostics.
using DiagnosticHandler = std::function<void(std::string_view)>;

void set_diagnostic_handler(DiagnosticHandler handler);
void emit_diagnostic(std::string_view message);

}  // namespace mmr
