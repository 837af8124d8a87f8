#ifndef RULEKIT_ERROR_HPP
#define RULEKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rulekit {

// Thrown for violated preconditions and malformed input anywhere in the
// library. The message is a single line suitable for a CLI diagnostic.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rulekit

#endif  // RULEKIT_ERROR_HPP
