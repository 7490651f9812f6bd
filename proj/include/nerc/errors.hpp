#ifndef NERC_ERRORS_HPP
#define NERC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nerc {

/// Base class of everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad input text. Carries the index of the offending token where known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, std::size_t token_index = npos)
      : Error(msg), token_index_(token_index) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t token_index() const noexcept { return token_index_; }

 private:
  std::size_t token_index_;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class FitError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Model file cannot be read back (bad JSON, wrong version, shape mismatch).
class LoadError : public Error {
 public:
  using Error::Error;
};

}  // namespace nerc

#endif  // NERC_ERRORS_HPP
