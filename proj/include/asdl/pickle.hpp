#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <asdl/pickle_error.hpp>
#include <asdl/value.hpp>

namespace asdl::pickle {

/// Write side of a pickle stream: a growable byte sink.
class ByteWriter {
public:
    void put(std::uint8_t b) { buf_.push_back(b); }
    void append(std::span<const std::uint8_t> bytes) {
        buf_.insert(buf_.end(), bytes.begin(), bytes.end());
    }

    std::size_t size() const { return buf_.size(); }
    const std::vector<std::uint8_t>& bytes() const { return buf_; }
    std::vector<std::uint8_t> take() { return std::move(buf_); }

private:
    std::vector<std::uint8_t> buf_;
};

/// Read side: a byte source with a position and exhaustion reporting.
class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    bool exhausted() const { return pos_ >= data_.size(); }
    std::size_t position() const { return pos_; }
    std::size_t remaining() const { return data_.size() - pos_; }

    /// Throws PickleError(TruncatedStream) at end of input.
    std::uint8_t take();

private:
    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

// Base-128 varints, least-significant group first, high bit = continuation.
// Signed values are zigzag-mapped (n>=0 -> 2n, n<0 -> -2n-1) first. The
// writer emits minimal encodings only; the reader rejects redundant
// trailing zero groups and anything past 10 bytes.
void write_uint(std::uint64_t n, ByteWriter& w);
void write_int(std::int64_t n, ByteWriter& w);
std::uint64_t read_uint(ByteReader& r);
std::int64_t read_int(ByteReader& r);

std::uint64_t zigzag(std::int64_t n);
std::int64_t unzigzag(std::uint64_t n);

/// Compact prefix binary encoding of one value of the named type.
void write_value(const SchemaEnv& env, std::string_view type_name,
                 const Value& v, ByteWriter& w);
Value read_value(const SchemaEnv& env, std::string_view type_name,
                 ByteReader& r);

/// Offset of each scalar write paired with the field-name trail that
/// produced it. Used to map byte positions back to value paths.
struct TraceEntry {
    std::size_t offset;
    std::string path;
};
void write_value_traced(const SchemaEnv& env, std::string_view type_name,
                        const Value& v, ByteWriter& w,
                        std::vector<TraceEntry>& trace);

std::vector<std::uint8_t> encode(const SchemaEnv& env,
                                 std::string_view type_name, const Value& v);
/// Decodes exactly one value and requires the input to be fully consumed.
Value decode(const SchemaEnv& env, std::string_view type_name,
             std::span<const std::uint8_t> bytes);

// A pickle file is one or more instances concatenated with no header and
// no separators; schema identity travels out of band.
void write_instance(const SchemaEnv& env, std::string_view type_name,
                    const Value& v, ByteWriter& w);
Value read_instance(const SchemaEnv& env, std::string_view type_name,
                    ByteReader& r);

/// Reads the first instance and ignores the rest of the file.
/// Throws PickleError(EmptyPickle) on empty input.
Value read_first(const SchemaEnv& env, std::string_view type_name,
                 std::span<const std::uint8_t> bytes);

/// Reads instances until the input is exhausted; all must be of the one
/// named type.
std::vector<Value> read_all(const SchemaEnv& env, std::string_view type_name,
                            std::span<const std::uint8_t> bytes);

}  // namespace asdl::pickle
