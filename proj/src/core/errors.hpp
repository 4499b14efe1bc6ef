#pragma once
#include <stdexcept>
#include <string>

namespace ckinf {

// Status taxonomy shared by the C API and the CLI exit codes.
enum class errc : int { ok = 0, assertion = 1, invalid = 2, budget = 3, internal = 4 };

struct ck_error : std::runtime_error {
    errc code;
    ck_error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail_invalid(const std::string& msg) { throw ck_error(errc::invalid, msg); }
[[noreturn]] inline void fail_budget(const std::string& msg) { throw ck_error(errc::budget, msg); }
[[noreturn]] inline void fail_assert(const std::string& msg) { throw ck_error(errc::assertion, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw ck_error(errc::internal, msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail_invalid(msg);
}

} // namespace ckinf
