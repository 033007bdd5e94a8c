#pragma once

#include <stdexcept>
#include <string>

namespace cyclefact {

// Error taxonomy mirrored by the CLI exit codes: bad_input -> 1,
// out_of_range -> 2 (parameters outside any proven regime), internal -> 3.
enum class errc {
    bad_input,
    out_of_range,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg)
{
    throw error(kind, msg);
}

inline void require(bool cond, errc kind, const std::string& msg)
{
    if (!cond)
        fail(kind, msg);
}

} // namespace cyclefact
