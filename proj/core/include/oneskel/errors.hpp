#ifndef ONESKEL_ERRORS_HPP
#define ONESKEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oneskel {

/**
 * Base of every domain failure raised by the library. `kind()` is the stable
 * machine-readable error name printed by the command line tool.
 */
class Error : public std::runtime_error
{
    public:
        Error(std::string kind, const std::string& what)
            : std::runtime_error(what), kind_(std::move(kind))
        {
        }

        const std::string& kind() const noexcept { return kind_; }

    private:
        std::string kind_;
};

#define ONESKEL_DECLARE_ERROR(Name)                                   \
    class Name : public Error                                         \
    {                                                                 \
        public:                                                       \
            explicit Name(const std::string& what) : Error(#Name, what) {} \
    };

ONESKEL_DECLARE_ERROR(DimensionError)
ONESKEL_DECLARE_ERROR(ZeroVectorError)
ONESKEL_DECLARE_ERROR(NotPrimitiveError)
ONESKEL_DECLARE_ERROR(NotGenericError)
ONESKEL_DECLARE_ERROR(StructureError)
ONESKEL_DECLARE_ERROR(DegenerateHullError)
ONESKEL_DECLARE_ERROR(InconsistentDataError)
ONESKEL_DECLARE_ERROR(NotSimpleError)
ONESKEL_DECLARE_ERROR(NotDelzantError)
ONESKEL_DECLARE_ERROR(NonEffectiveError)
ONESKEL_DECLARE_ERROR(InternalError)
ONESKEL_DECLARE_ERROR(MissingDegreesError)
ONESKEL_DECLARE_ERROR(AmbiguousPairingError)
ONESKEL_DECLARE_ERROR(TheoremViolationError)
ONESKEL_DECLARE_ERROR(ExtensionMismatchError)
ONESKEL_DECLARE_ERROR(ExtensionRequiredError)
ONESKEL_DECLARE_ERROR(WrongDimensionError)
ONESKEL_DECLARE_ERROR(InvalidDataError)
ONESKEL_DECLARE_ERROR(IoError)

#undef ONESKEL_DECLARE_ERROR

/// Malformed input text. Carries a location such as "line 4, column 7" or a
/// key path such as "points[2].weights[0]".
class ParseError : public Error
{
    public:
        ParseError(std::string location, const std::string& what)
            : Error("ParseError", location.empty() ? what : location + ": " + what),
              location_(std::move(location)), detail_(what)
        {
        }

        const std::string& location() const noexcept { return location_; }
        const std::string& detail() const noexcept { return detail_; }

    private:
        std::string location_;
        std::string detail_;
};

} // namespace oneskel

#endif
