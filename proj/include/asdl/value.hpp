#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <asdl/atom.hpp>
#include <asdl/schema.hpp>

namespace asdl {

class Value;
using ValueList = std::vector<Value>;

/// Model integers are unbounded; only the wire format limits their range.
using Int = boost::multiprecision::cpp_int;

/// Generic runtime instance of any schema type. Values are immutable after
/// construction and cheap to copy.
class Value {
public:
    enum class Kind { Int, String, Identifier, List, Product, Sum };

    static Value integer(Int v);
    static Value integer(long long v) { return integer(Int(v)); }
    static Value string(std::string v);
    static Value identifier(Atom a);
    static Value identifier(std::string_view text) {
        return identifier(Atom(text));
    }
    static Value list(ValueList elements);
    static Value product(std::string type_name, ValueList fields);
    static Value sum(std::string type_name, std::string ctor_name,
                     ValueList attributes, ValueList fields);

    Kind kind() const;

    const Int& as_int() const;
    const std::string& as_string() const;
    Atom as_identifier() const;
    const ValueList& elements() const;  // lists
    const std::string& type_name() const;  // products and sums
    const ValueList& fields() const;       // products and sums
    const std::string& constructor() const;  // sums
    const ValueList& attributes() const;     // sums

private:
    struct Rep;
    explicit Value(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

    std::shared_ptr<const Rep> rep_;
};

/// Deep structural equality. Identifier comparison is interned identity,
/// which coincides with textual equality.
bool equal(const Value& a, const Value& b);
inline bool operator==(const Value& a, const Value& b) { return equal(a, b); }
inline bool operator!=(const Value& a, const Value& b) { return !equal(a, b); }

struct Violation {
    std::string path;    // field-name trail, e.g. "stm/SEQ/stm1"
    std::string reason;
};

/// Checks v recursively against the declared type. Returns an empty list
/// iff v conforms.
std::vector<Violation> validate(const SchemaEnv& env,
                                std::string_view type_name, const Value& v);

/// Thrown by the checked build helpers when the requested value would not
/// conform.
class ConformanceError : public std::runtime_error {
public:
    explicit ConformanceError(std::vector<Violation> violations);

    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Checked constructors: the result always passes validate().
Value mk_sum(const SchemaEnv& env, std::string_view type_name,
             std::string_view ctor_name, ValueList attributes,
             ValueList fields);
Value mk_product(const SchemaEnv& env, std::string_view type_name,
                 ValueList fields);

}  // namespace asdl
