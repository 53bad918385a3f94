#ifndef WHW_ERRORS_HPP
#define WHW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace whw {

// Base of every error raised by the library. Checkers never throw for a
// failing axiom; failures are report content. These are precondition and
// input errors only.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define WHW_DEFINE_ERROR(Name)                       \
    class Name : public Error {                      \
    public:                                          \
        explicit Name(const std::string& what)       \
            : Error(std::string(#Name ": ") + what) {} \
    }

WHW_DEFINE_ERROR(FieldMismatch);
WHW_DEFINE_ERROR(DivisionByZero);
WHW_DEFINE_ERROR(ShapeMismatch);
WHW_DEFINE_ERROR(NotInjective);
WHW_DEFINE_ERROR(AntipodeNotInvertible);
WHW_DEFINE_ERROR(CharacteristicDividesOrder);
WHW_DEFINE_ERROR(NotIdempotent);
WHW_DEFINE_ERROR(NotSubcoalgebra);
WHW_DEFINE_ERROR(NotDirectSum);
WHW_DEFINE_ERROR(NotSymmetric);
WHW_DEFINE_ERROR(InputNotPartialAction);
WHW_DEFINE_ERROR(InputNotGlobalization);
WHW_DEFINE_ERROR(ParseError);
WHW_DEFINE_ERROR(SchemaError);

#undef WHW_DEFINE_ERROR

// Groupoid table failed one of the defining axioms or their consequences.
class AxiomViolation : public Error {
public:
    AxiomViolation(std::string axiom, std::string witness)
        : Error("AxiomViolation(" + axiom + "): " + witness),
          axiom_(std::move(axiom)), witness_(std::move(witness)) {}

    const std::string& axiom() const { return axiom_; }
    const std::string& witness() const { return witness_; }

private:
    std::string axiom_;
    std::string witness_;
};

// Globalization preconditions on the grouplike element.
class HypothesisViolated : public Error {
public:
    enum class Which { grouplike, absorption };

    HypothesisViolated(Which which, const std::string& what)
        : Error(std::string("HypothesisViolated(") +
                (which == Which::grouplike ? "grouplike" : "absorption") + "): " + what),
          which_(which) {}

    Which which() const { return which_; }

private:
    Which which_;
};

} // namespace whw

#endif
