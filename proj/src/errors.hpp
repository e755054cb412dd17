#pragma once

#include <stdexcept>
#include <string>

namespace udgmcp {

enum class errc {
    invalid_argument,
    io,
    parse,
    capacity,
    solver,
    degenerate_geometry,
    containment,
    unsupported,
};

// Library-wide exception carrying a coarse error class. The C API maps
// errc values onto its status codes; the CLI maps them onto exit codes.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace udgmcp
