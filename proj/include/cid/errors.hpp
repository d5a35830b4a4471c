#ifndef CID_ERRORS_HPP
#define CID_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cid {

/// Input outside the supported range of an operation (e.g. isomorphism
/// beyond 8 vertices, enumeration beyond 5).
class capability_error : public std::runtime_error {
  public:
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

/// A computation hit its configured step cap. Carries how far it got so the
/// caller can report the failure instead of silently returning a wrong answer.
class resource_limit_error : public std::runtime_error {
  public:
    resource_limit_error(const std::string& what, std::size_t partial_basis_size, long steps)
        : std::runtime_error(what), partial_basis_size_(partial_basis_size), steps_(steps) {}

    std::size_t partial_basis_size() const noexcept { return partial_basis_size_; }
    long steps() const noexcept { return steps_; }

  private:
    std::size_t partial_basis_size_;
    long steps_;
};

/// Malformed serialized input; `offset` is the byte position of the defect.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

} // namespace cid

#endif
