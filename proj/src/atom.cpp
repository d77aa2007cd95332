#include <asdl/atom.hpp>

#include <mutex>
#include <unordered_set>

namespace asdl {

namespace {

// One process-wide table; insert-if-absent under a mutex. Node-based
// containers keep interned strings at stable addresses.
std::unordered_set<std::string>& table() {
    static std::unordered_set<std::string> t;
    return t;
}

std::mutex& table_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

Atom::Atom(std::string_view text) {
    std::lock_guard<std::mutex> lock(table_mutex());
    text_ = &*table().emplace(text).first;
}

const std::string* Atom::empty() {
    static const Atom e{std::string_view{}};
    return e.text_;
}

}  // namespace asdl
