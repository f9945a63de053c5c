#pragma once

#include <stdexcept>
#include <string>

namespace kolam {

// Error categories. The CLI maps these onto its exit codes, so new kinds
// need a decision there too.
enum class errc {
    invalid_grid,
    invalid_symmetry,
    index_range,
    parse,
    too_large,
    offset_range,
    no_pattern,
    search_exhausted,
    mapping,
    io,
};

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) {
    throw error(kind, msg);
}

} // namespace kolam
