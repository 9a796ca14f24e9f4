#pragma once

#include <stdexcept>
#include <string>

namespace tbk {

// Every library failure derives from Error; kind() is the stable name used
// in structured CLI error output.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define TBK_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    }

TBK_DEFINE_ERROR(DivisionByZeroPoly);
TBK_DEFINE_ERROR(NonMonicModulus);
TBK_DEFINE_ERROR(PreconditionViolation);
TBK_DEFINE_ERROR(ParseError);
TBK_DEFINE_ERROR(NumericalDrift);
TBK_DEFINE_ERROR(InvalidForm);
TBK_DEFINE_ERROR(DegenerateForm);
TBK_DEFINE_ERROR(NoConvergence);
TBK_DEFINE_ERROR(NotARepresentation);
TBK_DEFINE_ERROR(ShapeViolation);
TBK_DEFINE_ERROR(NoIsometricSphere);
TBK_DEFINE_ERROR(EmptyPattern);
TBK_DEFINE_ERROR(UsageError);

#undef TBK_DEFINE_ERROR

}  // namespace tbk
