#pragma once

#include <stdexcept>
#include <string>

namespace cyccov {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define CYCCOV_ERROR_TYPE(Name)                                   \
    struct Name : Error {                                         \
        Name() : Error(#Name) {}                                  \
        explicit Name(const std::string& what)                    \
            : Error(std::string(#Name) + ": " + what) {}          \
    }

// field construction and arithmetic
CYCCOV_ERROR_TYPE(NonPrimeModulus);
CYCCOV_ERROR_TYPE(CongruenceViolation);
CYCCOV_ERROR_TYPE(DegenerateOrder);
CYCCOV_ERROR_TYPE(DivisionByZero);
CYCCOV_ERROR_TYPE(DomainError);

// polynomials
CYCCOV_ERROR_TYPE(ZeroPolynomial);

// cyclotomic integers
CYCCOV_ERROR_TYPE(ConductorMismatch);
CYCCOV_ERROR_TYPE(NotADivisor);

// families
CYCCOV_ERROR_TYPE(NonIntegralGenus);
CYCCOV_ERROR_TYPE(NegativeGenus);
CYCCOV_ERROR_TYPE(NotCoprime);
CYCCOV_ERROR_TYPE(EmptyFamily);
CYCCOV_ERROR_TYPE(RejectionBudgetExceeded);

// character sums
CYCCOV_ERROR_TYPE(OrderNotDividing);
CYCCOV_ERROR_TYPE(NonIntegralCount);
CYCCOV_ERROR_TYPE(InvalidMember);

// asymptotics
CYCCOV_ERROR_TYPE(ShapeMismatch);
CYCCOV_ERROR_TYPE(BudgetExceeded);

// distribution model
CYCCOV_ERROR_TYPE(NormalizationFailure);
CYCCOV_ERROR_TYPE(MarginalMismatch);
CYCCOV_ERROR_TYPE(ConditionalMismatch);

// harness
CYCCOV_ERROR_TYPE(KeyspaceMismatch);

#undef CYCCOV_ERROR_TYPE

}  // namespace cyccov
