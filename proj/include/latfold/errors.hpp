#ifndef LATFOLD_ERRORS_HPP_
#define LATFOLD_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latfold {

// Base of every error the library raises for bad input. Anything else that
// escapes (std::bad_alloc, std::logic_error) is an internal failure.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArgumentError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

// Unknown lattice, model or scheme name.
struct UnknownNameError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& token_, std::size_t position_, const std::string& what)
    : Error(what + " '" + token_ + "' at position " + std::to_string(position_)),
      token(token_), position(position_) {}
  std::string token;
  std::size_t position;
};

// A walk revisits a node. `index` is the residue whose position repeats.
struct CollisionError : Error {
  explicit CollisionError(std::size_t index_)
    : Error("self-avoidance violated at residue " + std::to_string(index_)),
      index(index_) {}
  std::size_t index;
};

} // namespace latfold

#endif // LATFOLD_ERRORS_HPP_
