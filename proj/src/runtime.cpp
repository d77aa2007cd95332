#include <asdl/runtime.hpp>

namespace asdl::rt {

using pickle::Errc;
using pickle::PickleError;

std::uint8_t instream_ty::take() {
    if (exhausted()) {
        throw PickleError(Errc::TruncatedStream, "unexpected end of pickle");
    }
    return data_[pos_++];
}

void write_uint(std::uint64_t n, outstream_ty& s) {
    do {
        std::uint8_t b = n & 0x7F;
        n >>= 7;
        if (n) b |= 0x80;
        s.put(b);
    } while (n);
}

void write_int(int_ty n, outstream_ty& s) {
    std::uint64_t zz = (static_cast<std::uint64_t>(n) << 1) ^
                       static_cast<std::uint64_t>(n >> 63);
    write_uint(zz, s);
}

std::uint64_t read_uint(instream_ty& s) {
    std::uint64_t result = 0;
    int shift = 0;
    for (int i = 0;; ++i) {
        std::uint8_t b = s.take();
        if (i == 9 && b > 0x01) {
            throw PickleError(Errc::MalformedVarint,
                              b & 0x80 ? "malformed varint: continuation past "
                                         "10 bytes"
                                       : "malformed varint: value exceeds 64 "
                                         "bits");
        }
        std::uint64_t group = b & 0x7F;
        result |= group << shift;
        if (!(b & 0x80)) {
            if (i > 0 && group == 0) {
                throw PickleError(Errc::MalformedVarint,
                                  "malformed varint: redundant trailing zero "
                                  "group");
            }
            return result;
        }
        shift += 7;
    }
}

int_ty read_int(instream_ty& s) {
    std::uint64_t zz = read_uint(s);
    return static_cast<int_ty>(zz >> 1) ^ -static_cast<int_ty>(zz & 1);
}

std::uint64_t read_tag(instream_ty& s, std::uint64_t constructor_count,
                       const char* type_name) {
    std::uint64_t tag = read_uint(s);
    if (tag < 1 || tag > constructor_count) {
        throw PickleError(Errc::BadTag,
                          "bad tag " + std::to_string(tag) + " for '" +
                              type_name + "' (expected 1.." +
                              std::to_string(constructor_count) + ")");
    }
    return tag;
}

void write_count(std::size_t n, outstream_ty& s) {
    write_uint(static_cast<std::uint64_t>(n), s);
}

std::size_t read_count(instream_ty& s) {
    std::uint64_t n = read_uint(s);
    if (n > s.remaining()) {
        throw PickleError(Errc::TruncatedStream,
                          "count exceeds the remaining input");
    }
    return static_cast<std::size_t>(n);
}

void write_string(const string_ty& v, outstream_ty& s) {
    write_uint(v.size(), s);
    for (char c : v) s.put(static_cast<std::uint8_t>(c));
}

string_ty read_string(instream_ty& s) {
    std::size_t len = read_count(s);
    string_ty out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(static_cast<char>(s.take()));
    }
    return out;
}

void write_identifier(identifier_ty v, outstream_ty& s) {
    write_string(v.str(), s);
}

identifier_ty read_identifier(instream_ty& s) {
    return identifier_ty(read_string(s));
}

}  // namespace asdl::rt
