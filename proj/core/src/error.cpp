#include "punctnet/error.hpp"

namespace punctnet {

DecodeError::DecodeError(std::size_t offset, const std::string& what)
    : DataError(what + " at byte offset " + std::to_string(offset)),
      offset_(offset) {}

}  // namespace punctnet
