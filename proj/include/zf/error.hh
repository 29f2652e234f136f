#ifndef ZF_GUARD_ERROR_HH
#define ZF_GUARD_ERROR_HH 1

#include <stdexcept>
#include <string>
#include <string_view>

namespace zf
{
    enum class ErrorKind
    {
        EmptyVertexSet,
        SelfLoop,
        EndpointOutOfRange,
        EmptySet,
        TooLarge,
        OrderTooSmall,
        BadPartition,
        CapacityExceeded,
        ArityMismatch,
        InvalidSpec,
        NotForcing,
        BudgetExceeded,
        WrongSize,
        ParseError
    };

    auto error_kind_name(ErrorKind kind) -> std::string_view;

    class Error : public std::runtime_error
    {
        public:
            Error(ErrorKind kind, const std::string & message) :
                std::runtime_error(message), _kind(kind)
            {
            }

            auto kind() const -> ErrorKind { return _kind; }

        private:
            ErrorKind _kind;
    };

    /// Thrown when the closure budget runs out. Carries the bounds known so far.
    class BudgetExceeded : public Error
    {
        public:
            BudgetExceeded(const std::string & message, int lower, int upper, long long closures) :
                Error(ErrorKind::BudgetExceeded, message), lower_bound(lower), upper_bound(upper), closures(closures)
            {
            }

            int lower_bound;
            int upper_bound;
            long long closures;
    };

    /// Parse failure with a byte offset into the input text.
    class ParseError : public Error
    {
        public:
            ParseError(const std::string & message, std::size_t pos) :
                Error(ErrorKind::ParseError, message + " at position " + std::to_string(pos)), position(pos)
            {
            }

            std::size_t position;
    };
}

#endif
