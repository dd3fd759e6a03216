#ifndef RACG_ERRORS_HPP_
#define RACG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace racg {

  // Base of everything the library throws on bad input or exhausted budgets.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public Error {
   public:
    enum class Kind {
      malformed,
      empty_vertex_list,
      invalid_label,
      duplicate_label,
      self_loop,
      unknown_label,
      too_many_generators,
    };

    ParseError(Kind kind, std::string token, std::string const& message)
        : Error(message), _kind(kind), _token(std::move(token)) {}

    [[nodiscard]] Kind kind() const noexcept {
      return _kind;
    }

    // The offending label / line / token, verbatim from the input.
    [[nodiscard]] std::string const& token() const noexcept {
      return _token;
    }

   private:
    Kind        _kind;
    std::string _token;
  };

  // Out-of-range generator, non-clique axis, radius out of range, ...
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  // Exact integer arithmetic would have wrapped.
  class OverflowError : public Error {
   public:
    using Error::Error;
  };

  class ResourceCapError : public Error {
   public:
    ResourceCapError(std::size_t radius_reached, std::string const& message)
        : Error(message), _radius_reached(radius_reached) {}

    // Largest radius whose sphere was completely enumerated.
    [[nodiscard]] std::size_t radius_reached() const noexcept {
      return _radius_reached;
    }

   private:
    std::size_t _radius_reached;
  };

  // Unknown output format, or a format the value kind does not support.
  class FormatError : public Error {
   public:
    using Error::Error;
  };

}  // namespace racg

#endif  // RACG_ERRORS_HPP_
