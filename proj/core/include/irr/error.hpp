#ifndef IRR_ERROR_HPP
#define IRR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace irr
{
    enum class ErrorCode
    {
        IndexOutOfRange,
        SelfLoop,
        CapacityExceeded,
        MalformedGraph6,
        MalformedEdgeList,
        NotAMember,
        NotIrredundant,
        TooManyIRSets,
        InvalidPartition,
        PreconditionViolated,
        NotIrredundantResult,
        InvalidN,
        InvalidParameter,
        InternalError
    };

    auto to_string(ErrorCode code) -> std::string_view;

    /// The one exception type thrown by the library; `code()` says which contract was broken.
    class Error : public std::runtime_error
    {
    public:
        Error(ErrorCode code, const std::string & message) :
            std::runtime_error(std::string{to_string(code)} + ": " + message),
            _code(code)
        {
        }

        auto code() const -> ErrorCode { return _code; }

    private:
        ErrorCode _code;
    };
}

#endif
