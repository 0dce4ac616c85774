#ifndef DRINMOD_ERROR_HPP
#define DRINMOD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace drinmod {

/// Internal consistency failure (a computation reached a state that the
/// mathematics forbids).  Distinct from std::invalid_argument, which is
/// reserved for caller errors; a fault always indicates a bug or a broken
/// intermediate result and carries the offending stage in its message.
class fault : public std::runtime_error {
 public:
  explicit fault(const std::string& stage, const std::string& detail)
      : std::runtime_error("fault at " + stage + ": " + detail) {}
};

}  // namespace drinmod

#endif
