#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace punctnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments, plans, manifests or configuration files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Input data that cannot be processed (empty corpora, unknown nodes, I/O).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Malformed UTF-8; carries the byte offset of the first bad sequence.
class DecodeError : public DataError {
 public:
  DecodeError(std::size_t offset, const std::string& what);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace punctnet
