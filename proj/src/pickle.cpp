#include <asdl/pickle.hpp>

#include <limits>

namespace asdl::pickle {

namespace {

constexpr int kMaxVarintBytes = 10;  // covers the full 64-bit range
constexpr int kMaxDepth = 10000;

[[noreturn]] void truncated() {
    throw PickleError(Errc::TruncatedStream, "unexpected end of pickle");
}

[[noreturn]] void malformed(const char* why) {
    throw PickleError(Errc::MalformedVarint,
                      std::string("malformed varint: ") + why);
}

}  // namespace

std::uint8_t ByteReader::take() {
    if (exhausted()) truncated();
    return data_[pos_++];
}

void write_uint(std::uint64_t n, ByteWriter& w) {
    do {
        std::uint8_t b = n & 0x7F;
        n >>= 7;
        if (n) b |= 0x80;
        w.put(b);
    } while (n);
}

std::uint64_t zigzag(std::int64_t n) {
    return (static_cast<std::uint64_t>(n) << 1) ^
           static_cast<std::uint64_t>(n >> 63);
}

std::int64_t unzigzag(std::uint64_t n) {
    return static_cast<std::int64_t>(n >> 1) ^
           -static_cast<std::int64_t>(n & 1);
}

void write_int(std::int64_t n, ByteWriter& w) { write_uint(zigzag(n), w); }

std::uint64_t read_uint(ByteReader& r) {
    std::uint64_t result = 0;
    int shift = 0;
    for (int i = 0;; ++i) {
        std::uint8_t b = r.take();
        if (i == kMaxVarintBytes - 1 && b > 0x01) {
            malformed(b & 0x80 ? "continuation past 10 bytes"
                               : "value exceeds 64 bits");
        }
        std::uint64_t group = b & 0x7F;
        result |= group << shift;
        if (!(b & 0x80)) {
            if (i > 0 && group == 0) malformed("redundant trailing zero group");
            return result;
        }
        shift += 7;
    }
}

std::int64_t read_int(ByteReader& r) { return unzigzag(read_uint(r)); }

namespace {

class ValueWriter {
public:
    ValueWriter(const SchemaEnv& env, ByteWriter& w,
                std::vector<TraceEntry>* trace)
        : env_(env), w_(w), trace_(trace) {}

    void write(std::string_view type_name, const Value& v) {
        if (trace_) path_ = std::string(type_name);
        write_type(type_name, v);
    }

private:
    void mark() {
        if (trace_) trace_->push_back({w_.size(), path_});
    }

    void put_uint(std::uint64_t n) {
        mark();
        write_uint(n, w_);
    }

    void put_int(const Int& n) {
        if (n < std::numeric_limits<std::int64_t>::min() ||
            n > std::numeric_limits<std::int64_t>::max()) {
            throw PickleError(Errc::IntegerRange,
                              "integer " + n.str() +
                                  " exceeds the pickle wire range");
        }
        mark();
        write_int(static_cast<std::int64_t>(n), w_);
    }

    void put_text(const std::string& s) {
        mark();
        write_uint(s.size(), w_);
        w_.append({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
    }

    void write_fields(const std::vector<FieldDef>& defs,
                      const ValueList& values) {
        if (defs.size() != values.size()) {
            throw std::logic_error("write_value: value arity disagrees with "
                                   "the schema; validate before writing");
        }
        for (std::size_t i = 0; i < defs.size(); ++i) {
            std::size_t m = path_.size();
            if (trace_) {
                path_ += '/';
                path_ += defs[i].name;
            }
            write_field(defs[i], values[i]);
            if (trace_) path_.resize(m);
        }
    }

    void write_field(const FieldDef& def, const Value& v) {
        if (!def.sequence) {
            write_type(def.type_name, v);
            return;
        }
        const ValueList& elems = v.elements();
        put_uint(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i) {
            std::size_t m = path_.size();
            if (trace_) path_ += '[' + std::to_string(i) + ']';
            write_type(def.type_name, elems[i]);
            if (trace_) path_.resize(m);
        }
    }

    void write_type(std::string_view type_name, const Value& v) {
        if (type_name == "int") {
            put_int(v.as_int());
            return;
        }
        if (type_name == "string") {
            put_text(v.as_string());
            return;
        }
        if (type_name == "identifier") {
            put_text(v.as_identifier().str());
            return;
        }
        const CheckedType& t = env_.type(type_name);
        if (t.kind == TypeKind::Product) {
            write_fields(t.fields, v.fields());
            return;
        }
        const ConstructorDef& ctor = env_.constructor(t.name, v.constructor());
        std::size_t m = path_.size();
        if (trace_) {
            path_ += '/';
            path_ += ctor.name;
        }
        put_uint(ctor.tag);
        write_fields(t.attributes, v.attributes());
        write_fields(ctor.fields, v.fields());
        if (trace_) path_.resize(m);
    }

    const SchemaEnv& env_;
    ByteWriter& w_;
    std::vector<TraceEntry>* trace_;
    std::string path_;
};

class ValueReader {
public:
    ValueReader(const SchemaEnv& env, ByteReader& r) : env_(env), r_(r) {}

    Value read(std::string_view type_name) { return read_type(type_name); }

private:
    Value read_type(std::string_view type_name) {
        if (++depth_ > kMaxDepth) {
            throw PickleError(Errc::RecursionLimit,
                              "pickle nests deeper than " +
                                  std::to_string(kMaxDepth) + " levels");
        }
        Value v = read_type_inner(type_name);
        --depth_;
        return v;
    }

    Value read_type_inner(std::string_view type_name) {
        if (type_name == "int") return Value::integer(Int(read_int(r_)));
        if (type_name == "string") return Value::string(read_text());
        if (type_name == "identifier") return Value::identifier(read_text());
        const CheckedType& t = env_.type(type_name);
        if (t.kind == TypeKind::Product) {
            return Value::product(t.name, read_fields(t.fields));
        }
        std::uint64_t tag = read_uint(r_);
        if (tag < 1 || tag > t.constructors.size()) {
            throw PickleError(Errc::BadTag,
                              "bad tag " + std::to_string(tag) + " for '" +
                                  t.name + "' (expected 1.." +
                                  std::to_string(t.constructors.size()) + ")");
        }
        const ConstructorDef& ctor = t.constructors[tag - 1];
        ValueList attributes = read_fields(t.attributes);
        ValueList fields = read_fields(ctor.fields);
        return Value::sum(t.name, ctor.name, std::move(attributes),
                          std::move(fields));
    }

    ValueList read_fields(const std::vector<FieldDef>& defs) {
        ValueList values;
        values.reserve(defs.size());
        for (const FieldDef& def : defs) {
            if (!def.sequence) {
                values.push_back(read_type(def.type_name));
                continue;
            }
            std::uint64_t count = read_uint(r_);
            if (count > r_.remaining()) truncated();
            ValueList elems;
            elems.reserve(count);
            for (std::uint64_t i = 0; i < count; ++i) {
                elems.push_back(read_type(def.type_name));
            }
            values.push_back(Value::list(std::move(elems)));
        }
        return values;
    }

    std::string read_text() {
        std::uint64_t len = read_uint(r_);
        if (len > r_.remaining()) truncated();
        std::string out;
        out.reserve(len);
        for (std::uint64_t i = 0; i < len; ++i) {
            out.push_back(static_cast<char>(r_.take()));
        }
        return out;
    }

    const SchemaEnv& env_;
    ByteReader& r_;
    int depth_ = 0;
};

}  // namespace

void write_value(const SchemaEnv& env, std::string_view type_name,
                 const Value& v, ByteWriter& w) {
    ValueWriter(env, w, nullptr).write(type_name, v);
}

void write_value_traced(const SchemaEnv& env, std::string_view type_name,
                        const Value& v, ByteWriter& w,
                        std::vector<TraceEntry>& trace) {
    ValueWriter(env, w, &trace).write(type_name, v);
}

Value read_value(const SchemaEnv& env, std::string_view type_name,
                 ByteReader& r) {
    return ValueReader(env, r).read(type_name);
}

std::vector<std::uint8_t> encode(const SchemaEnv& env,
                                 std::string_view type_name, const Value& v) {
    ByteWriter w;
    write_value(env, type_name, v, w);
    return w.take();
}

Value decode(const SchemaEnv& env, std::string_view type_name,
             std::span<const std::uint8_t> bytes) {
    ByteReader r(bytes);
    Value v = read_value(env, type_name, r);
    if (!r.exhausted()) {
        throw PickleError(Errc::TruncatedStream,
                          "trailing bytes after the encoded value");
    }
    return v;
}

void write_instance(const SchemaEnv& env, std::string_view type_name,
                    const Value& v, ByteWriter& w) {
    write_value(env, type_name, v, w);
}

Value read_instance(const SchemaEnv& env, std::string_view type_name,
                    ByteReader& r) {
    return read_value(env, type_name, r);
}

Value read_first(const SchemaEnv& env, std::string_view type_name,
                 std::span<const std::uint8_t> bytes) {
    if (bytes.empty()) {
        throw PickleError(Errc::EmptyPickle, "pickle file is empty");
    }
    ByteReader r(bytes);
    return read_instance(env, type_name, r);
}

std::vector<Value> read_all(const SchemaEnv& env, std::string_view type_name,
                            std::span<const std::uint8_t> bytes) {
    ByteReader r(bytes);
    std::vector<Value> instances;
    while (!r.exhausted()) {
        instances.push_back(read_instance(env, type_name, r));
    }
    return instances;
}

}  // namespace asdl::pickle
