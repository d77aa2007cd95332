#pragma once

// Support library for generated readers and writers. Generated code
// depends only on this header and the standard library.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <asdl/atom.hpp>
#include <asdl/pickle_error.hpp>

namespace asdl::rt {

using int_ty = std::int64_t;
using string_ty = std::string;
using identifier_ty = ::asdl::Atom;
template <class T>
using list_ty = std::vector<T>;

class instream_ty {
public:
    explicit instream_ty(std::span<const std::uint8_t> data) : data_(data) {}

    bool exhausted() const { return pos_ >= data_.size(); }
    std::size_t position() const { return pos_; }
    std::size_t remaining() const { return data_.size() - pos_; }
    std::uint8_t take();

private:
    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

class outstream_ty {
public:
    void put(std::uint8_t b) { buf_.push_back(b); }
    const std::vector<std::uint8_t>& bytes() const { return buf_; }
    std::vector<std::uint8_t> take() { return std::move(buf_); }

private:
    std::vector<std::uint8_t> buf_;
};

void write_uint(std::uint64_t n, outstream_ty& s);
void write_int(int_ty n, outstream_ty& s);
std::uint64_t read_uint(instream_ty& s);
int_ty read_int(instream_ty& s);

/// Reads a constructor tag and checks it lies in 1..constructor_count.
std::uint64_t read_tag(instream_ty& s, std::uint64_t constructor_count,
                       const char* type_name);

void write_count(std::size_t n, outstream_ty& s);
std::size_t read_count(instream_ty& s);

void write_string(const string_ty& v, outstream_ty& s);
string_ty read_string(instream_ty& s);

void write_identifier(identifier_ty v, outstream_ty& s);
identifier_ty read_identifier(instream_ty& s);

}  // namespace asdl::rt
