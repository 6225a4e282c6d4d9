// brauer - diagram semigroups and complexity bounds
//
// Exception hierarchy. Every error raised by the library derives from
// brauer::Error so callers can catch the whole family at once.

#ifndef BRAUER_EXCEPTION_HPP_
#define BRAUER_EXCEPTION_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brauer {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define BRAUER_DEFINE_ERROR(Name)   \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  };

  BRAUER_DEFINE_ERROR(DegreeMismatch)
  BRAUER_DEFINE_ERROR(BadIndex)
  BRAUER_DEFINE_ERROR(BadDegree)
  BRAUER_DEFINE_ERROR(NotABijection)
  BRAUER_DEFINE_ERROR(UnsupportedBlockSize)
  BRAUER_DEFINE_ERROR(BudgetExceeded)
  BRAUER_DEFINE_ERROR(NotAMonoid)
  BRAUER_DEFINE_ERROR(NotIdempotent)
  BRAUER_DEFINE_ERROR(NotAnIdeal)
  BRAUER_DEFINE_ERROR(NotASubsemigroup)
  BRAUER_DEFINE_ERROR(ChecksumMismatch)
  BRAUER_DEFINE_ERROR(VersionMismatch)

#undef BRAUER_DEFINE_ERROR

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  class SideConditionFailed : public Error {
   public:
    explicit SideConditionFailed(std::string condition)
        : Error("side condition failed: " + condition),
          _condition(std::move(condition)) {}

    std::string const& condition() const noexcept {
      return _condition;
    }

   private:
    std::string _condition;
  };

}  // namespace brauer

#endif  // BRAUER_EXCEPTION_HPP_
