#ifndef ADICA_ERROR_HPP
#define ADICA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace adica {

// Every failure carries a stable kind tag (e.g. "UnknownLetter") so callers
// and the CLI can report it by name without parsing message text.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace adica

#endif  // ADICA_ERROR_HPP
