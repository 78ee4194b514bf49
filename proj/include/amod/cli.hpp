#pragma once

namespace amod {

/// Entry point behind the amodsim binary.
/// Exit codes: 0 full success, 1 any run failure, 2 configuration error.
int cli_main(int argc, const char* const* argv);

} // namespace amod
