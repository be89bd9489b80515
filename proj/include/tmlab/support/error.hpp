#pragma once

#include <stdexcept>
#include <string>

namespace tmlab {

// Failure classes map onto CLI exit codes (3, 4, 5).
enum class ErrorKind { Domain, Numeric, Certificate };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& code() const { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

[[noreturn]] inline void domain_error(const std::string& code, const std::string& what) {
    throw Error(ErrorKind::Domain, code, what);
}
[[noreturn]] inline void numeric_error(const std::string& code, const std::string& what) {
    throw Error(ErrorKind::Numeric, code, what);
}
[[noreturn]] inline void certificate_error(const std::string& code, const std::string& what) {
    throw Error(ErrorKind::Certificate, code, what);
}

} // namespace tmlab
