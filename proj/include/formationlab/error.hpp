#ifndef FORMATIONLAB_ERROR_HPP_
#define FORMATIONLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace formationlab {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: bad cycle text, degree mismatch, non-normal subgroup
  // passed to a quotient, unparsable group file.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  // A configured bound (group order, subgroup count) was exceeded.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  // Broken internal invariant. Never expected in normal operation.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace formationlab

#endif  // FORMATIONLAB_ERROR_HPP_
