#pragma once

#include <stdexcept>
#include <string>

namespace hk {

enum class ErrorKind {
    Arity,             // tuple length does not match the declared arity
    Domain,            // element not in the carrier
    Exponent,          // exponent not of a valid shape
    IdentityRequired,  // operation needs a declared scalar identity
    Budget,            // enumeration exceeded its node cap
    Precondition,      // documented precondition violated
    Parse,             // malformed input text
    Construction,      // construction produced an inconsistent structure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Arity: return "arity";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Exponent: return "exponent";
        case ErrorKind::IdentityRequired: return "identity-required";
        case ErrorKind::Budget: return "budget";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Construction: return "construction";
    }
    return "unknown";
}

}  // namespace hk
