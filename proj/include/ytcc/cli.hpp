#pragma once

namespace ytcc {

/// Exit codes shared by every subcommand; stable and documented.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,       // bad flags or unexpected failure
    kExitAuth = 2,        // API credential/quota failure
    kExitIo = 3,          // file or network I/O failure
    kExitSchema = 4,      // malformed dataset/model/report file
    kExitTuneFailed = 5,  // every grid cell failed
    kExitFingerprint = 6, // model/vocabulary fingerprint mismatch
};

/// Entry point behind the `ytcc` binary; also called by tests.
int run_cli(int argc, const char* const* argv);

}  // namespace ytcc
