#pragma once

#include <stdexcept>
#include <string>

namespace megset {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input (graph, instance, or vertex-set files).
struct ParseError : Error {
    using Error::Error;
};

// Violated operation precondition or invalid argument.
struct ValidationError : Error {
    using Error::Error;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline bool is_blank(const std::string& line) { return trim(line).empty(); }

inline bool is_comment(const std::string& line) {
    auto t = trim(line);
    return !t.empty() && t[0] == '#';
}

}  // namespace detail
}  // namespace megset
