#pragma once

#include <stdexcept>
#include <string>

namespace asdl::pickle {

enum class Errc {
    TruncatedStream,
    BadTag,
    MalformedVarint,
    EmptyPickle,
    IntegerRange,
    RecursionLimit,
};

class PickleError : public std::runtime_error {
public:
    PickleError(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace asdl::pickle
