#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace asdl {

/// Interned identifier. Equal text always yields the same Atom, so
/// comparison is pointer identity. Interning is thread-safe.
class Atom {
public:
    Atom() : text_(empty()) {}
    explicit Atom(std::string_view text);

    const std::string& str() const { return *text_; }
    std::string_view view() const { return *text_; }

    friend bool operator==(Atom a, Atom b) { return a.text_ == b.text_; }
    friend bool operator!=(Atom a, Atom b) { return a.text_ != b.text_; }

private:
    static const std::string* empty();

    const std::string* text_;

    friend struct std::hash<Atom>;
};

}  // namespace asdl

template <>
struct std::hash<asdl::Atom> {
    std::size_t operator()(asdl::Atom a) const noexcept {
        return std::hash<const std::string*>{}(a.text_);
    }
};
