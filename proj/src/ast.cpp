#include <asdl/ast.hpp>

#include <algorithm>

namespace asdl {

namespace {

template <class T>
bool all_equal(const std::vector<T>& a, const std::vector<T>& b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(),
                      [](const T& x, const T& y) {
                          return structurally_equal(x, y);
                      });
}

}  // namespace

bool structurally_equal(const RawField& a, const RawField& b) {
    return a.type_name == b.type_name && a.sequence == b.sequence &&
           a.name == b.name;
}

bool structurally_equal(const RawConstructor& a, const RawConstructor& b) {
    return a.name == b.name && all_equal(a.fields, b.fields);
}

bool structurally_equal(const RawTypeDef& a, const RawTypeDef& b) {
    if (a.name != b.name || a.is_sum() != b.is_sum()) return false;
    if (a.is_sum()) {
        return all_equal(a.sum().constructors, b.sum().constructors) &&
               all_equal(a.sum().attributes, b.sum().attributes);
    }
    return all_equal(a.product().fields, b.product().fields) &&
           all_equal(a.product().attributes, b.product().attributes);
}

bool structurally_equal(const RawSpec& a, const RawSpec& b) {
    return a.module_name == b.module_name &&
           all_equal(a.definitions, b.definitions);
}

}  // namespace asdl
