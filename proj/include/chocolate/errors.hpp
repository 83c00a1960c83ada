#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chocolate {

// Integer representation would wrap.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// simplest_between called with lo >= hi.
class BoundsViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A node whose best Left option is not strictly below its best Right option.
class NotANumber : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The engine's node budget was exhausted.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OutOfBounds : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class IllegalCut : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IllegalMove : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class WrongTurn : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Text notation error; position is the byte offset into the input.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace chocolate
