#ifndef HYPERSTAB_ERRORS_HPP
#define HYPERSTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperstab {

// Base class for all validation/domain errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfRangeError : Error {
    using Error::Error;
};
struct DuplicateEdgeError : Error {
    using Error::Error;
};
struct BadArityError : Error {
    using Error::Error;
};
struct BadLevelError : Error {
    using Error::Error;
};
struct BadParamsError : Error {
    using Error::Error;
};
struct DifferentClassError : Error {
    using Error::Error;
};
struct NotOrderedError : Error {
    using Error::Error;
};
struct OverlapError : Error {
    using Error::Error;
};
struct InfeasibleError : Error {
    using Error::Error;
};
struct TooLargeError : Error {
    using Error::Error;
};
struct NotInMatchingError : Error {
    using Error::Error;
};
struct BudgetError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace hyperstab

#endif  // HYPERSTAB_ERRORS_HPP
