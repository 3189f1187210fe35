#pragma once

#include <stdexcept>
#include <string>

namespace orbtop {

/// Base class for all domain errors. `kind()` is a stable machine-readable
/// tag; `what()` carries the human explanation including the violated rule.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ORBTOP_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& message)                  \
            : Error(#Name, message) {}                             \
    }

ORBTOP_DEFINE_ERROR(InvalidChain);
ORBTOP_DEFINE_ERROR(NonCoprimeModuli);
ORBTOP_DEFINE_ERROR(DegenerateConfiguration);
ORBTOP_DEFINE_ERROR(IncompatibleMultiplicities);
ORBTOP_DEFINE_ERROR(BasisNotIntegral);
ORBTOP_DEFINE_ERROR(H1NotZero);
ORBTOP_DEFINE_ERROR(MissingW2Data);
ORBTOP_DEFINE_ERROR(NotRealizable);
ORBTOP_DEFINE_ERROR(SingularSystem);
ORBTOP_DEFINE_ERROR(NotNegativeDefinite);
ORBTOP_DEFINE_ERROR(EffectivityViolation);
ORBTOP_DEFINE_ERROR(InvalidParams);
ORBTOP_DEFINE_ERROR(IncompleteLedger);
ORBTOP_DEFINE_ERROR(InvariantViolation);
ORBTOP_DEFINE_ERROR(ParseError);
ORBTOP_DEFINE_ERROR(SchemaError);

#undef ORBTOP_DEFINE_ERROR

}  // namespace orbtop
