#ifndef KCOVER_ERRORS_H_
#define KCOVER_ERRORS_H_

#include <stdexcept>

namespace kcover {

// Malformed or invalid input data: unparsable text, loops, out-of-range
// endpoints, non-bijective permutation images.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called on arguments outside its domain (e.g. a polarity
// query on a non-bipartite graph).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A configured search limit (vertex count, group order) was exceeded.
class LimitExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace kcover

#endif  // KCOVER_ERRORS_H_
