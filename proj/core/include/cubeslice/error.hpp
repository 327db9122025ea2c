#ifndef CUBESLICE_ERROR_HPP
#define CUBESLICE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cubeslice {

// Base of everything the library throws. Callers that only care whether a
// stage succeeded catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was applied outside its mathematical domain (ln of a
// non-positive interval, division by an interval containing zero, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A precondition on arguments (parameter ranges, matching orders) failed.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Two enclosures of the same quantity turned out to be disjoint. This can
// only happen if something upstream is unsound, so it is never repaired.
class SoundnessError : public Error {
public:
    using Error::Error;
};

} // namespace cubeslice

#endif
