#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hat {

// Error with a short machine-parsable code ("E_LOOP", "E_DEGREE", ...) in
// front of a human-readable sentence. The CLI prints `code: message` on one
// line and exits nonzero.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, const std::string& code, const std::string& message) {
    if (!condition) fail(code, message);
}

} // namespace hat
