#pragma once

#include <stdexcept>
#include <string>

namespace scatlen {

// Error taxonomy shared by all modules. The numeric values double as CLI
// exit codes: 2 usage, 3 bad input data, 4 numerical non-convergence.
enum class errc : int {
    usage   = 2,
    input   = 3,
    numeric = 4,
};

class Error : public std::runtime_error {
public:
    Error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    errc kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
    errc kind_;
};

[[noreturn]] inline void fail_usage(const std::string& msg) { throw Error(errc::usage, msg); }
[[noreturn]] inline void fail_input(const std::string& msg) { throw Error(errc::input, msg); }
[[noreturn]] inline void fail_numeric(const std::string& msg) { throw Error(errc::numeric, msg); }

} // namespace scatlen
