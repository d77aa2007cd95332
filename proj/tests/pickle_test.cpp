#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <asdl/pickle.hpp>
#include <minircc/rcc_schema.hpp>

#include "support/util.hpp"
#include "support/value_gen.hpp"

using namespace asdl;
using namespace asdl::pickle;
using testsupport::load_fixture_env;

namespace {

std::vector<std::uint8_t> uint_bytes(std::uint64_t n) {
    ByteWriter w;
    write_uint(n, w);
    return w.take();
}

std::vector<std::uint8_t> int_bytes(std::int64_t n) {
    ByteWriter w;
    write_int(n, w);
    return w.take();
}

Errc read_uint_errc(std::vector<std::uint8_t> bytes) {
    ByteReader r(bytes);
    try {
        read_uint(r);
    } catch (const PickleError& e) {
        return e.code();
    }
    throw std::runtime_error("expected a pickle error");
}

/// The pointer post-increment store tree over a node grammar: ASGN with
/// (suffix P, size 4), an ADDRL leaf for uid 42, and a Unary INDIR over an
/// ADDRL leaf for uid 37.
Value store_tree(const SchemaEnv& env, bool with_len_align) {
    auto attrs = [] {
        return ValueList{Value::integer(3), Value::integer(4)};
    };
    Value left = mk_sum(env, "node", "ADDRL", attrs(), {Value::integer(42)});
    Value right = mk_sum(env, "node", "Unary", attrs(),
                         {Value::integer(4),  // INDIR
                          mk_sum(env, "node", "ADDRL", attrs(),
                                 {Value::integer(37)})});
    ValueList fields = {left, right};
    if (with_len_align) {
        fields.push_back(Value::integer(4));
        fields.push_back(Value::integer(4));
    }
    return mk_sum(env, "node", "ASGN", attrs(), std::move(fields));
}

}  // namespace

TEST_CASE("unsigned varints") {
    CHECK(uint_bytes(0) == std::vector<std::uint8_t>{0x00});
    CHECK(uint_bytes(1) == std::vector<std::uint8_t>{0x01});
    CHECK(uint_bytes(127) == std::vector<std::uint8_t>{0x7F});
    CHECK(uint_bytes(128) == std::vector<std::uint8_t>{0x80, 0x01});
    CHECK(uint_bytes(300) == std::vector<std::uint8_t>{0xAC, 0x02});
    CHECK(uint_bytes(UINT64_MAX).size() == 10);
}

TEST_CASE("signed varints zigzag") {
    CHECK(int_bytes(0) == std::vector<std::uint8_t>{0x00});
    CHECK(int_bytes(-1) == std::vector<std::uint8_t>{0x01});
    CHECK(int_bytes(1) == std::vector<std::uint8_t>{0x02});
    CHECK(int_bytes(42) == std::vector<std::uint8_t>{0x54});
    CHECK(int_bytes(63) == std::vector<std::uint8_t>{0x7E});
    CHECK(int_bytes(-64) == std::vector<std::uint8_t>{0x7F});
    CHECK(int_bytes(64).size() == 2);
    CHECK(int_bytes(-65).size() == 2);
    CHECK(zigzag(INT64_MIN) == UINT64_MAX);
    CHECK(unzigzag(zigzag(INT64_MIN)) == INT64_MIN);
}

TEST_CASE("varint round trip is exhaustive near the boundaries") {
    for (std::int64_t n = -300; n <= 300; ++n) {
        ByteWriter w;
        write_int(n, w);
        ByteReader r(w.bytes());
        CHECK(read_int(r) == n);
        CHECK(r.exhausted());
    }
    for (std::uint64_t n : {0ull, 127ull, 128ull, 16383ull, 16384ull,
                            UINT64_MAX}) {
        ByteWriter w;
        write_uint(n, w);
        ByteReader r(w.bytes());
        CHECK(read_uint(r) == n);
    }
}

TEST_CASE("the reader rejects non-canonical varints") {
    CHECK(read_uint_errc({0x80, 0x00}) == Errc::MalformedVarint);
    CHECK(read_uint_errc({0xAC, 0x80, 0x00}) == Errc::MalformedVarint);
    // Continuation on and on.
    CHECK(read_uint_errc(std::vector<std::uint8_t>(11, 0xFF)) ==
          Errc::MalformedVarint);
    // A 10th byte above one bit overflows 64 bits.
    std::vector<std::uint8_t> wide(9, 0xFF);
    wide.push_back(0x02);
    CHECK(read_uint_errc(wide) == Errc::MalformedVarint);
    // Truncation inside a varint.
    CHECK(read_uint_errc({0x80}) == Errc::TruncatedStream);
}

TEST_CASE("the store tree takes 15 bytes over the reduced grammar") {
    SchemaEnv env = load_fixture_env("irt.asdl");
    std::vector<std::uint8_t> bytes = encode(env, "node", store_tree(env, false));
    CHECK(bytes == std::vector<std::uint8_t>{
                       0x04, 0x06, 0x08,              // ASGN P 4
                       0x0A, 0x06, 0x08, 0x54,        // ADDRL P 4 42
                       0x0C, 0x06, 0x08, 0x08,        // Unary P 4 INDIR
                       0x0A, 0x06, 0x08, 0x4A});      // ADDRL P 4 37
    REQUIRE(bytes.size() == 15);
    CHECK(equal(decode(env, "node", bytes), store_tree(env, false)));
}

TEST_CASE("the same tree takes 17 bytes with len and align") {
    const SchemaEnv& env = minircc::rcc_env();
    std::vector<std::uint8_t> bytes = encode(env, "node", store_tree(env, true));
    REQUIRE(bytes.size() == 17);
    // Same prefix, then the two one-byte trailing integers.
    CHECK(bytes[15] == 0x08);
    CHECK(bytes[16] == 0x08);
    CHECK(equal(decode(env, "node", bytes), store_tree(env, true)));
}

TEST_CASE("an empty print statement is two bytes") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    Value v = mk_sum(env, "stm", "PRINT", {}, {Value::list({})});
    CHECK(encode(env, "stm", v) == std::vector<std::uint8_t>{0x03, 0x00});
}

TEST_CASE("enum-like sums are a bare tag byte") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    CHECK(encode(env, "binop", mk_sum(env, "binop", "ADD", {}, {})) ==
          std::vector<std::uint8_t>{0x01});
    CHECK(encode(env, "binop", mk_sum(env, "binop", "DIV", {}, {})) ==
          std::vector<std::uint8_t>{0x04});
}

TEST_CASE("bad tags are rejected with the type name") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    for (std::uint8_t tag : {std::uint8_t(0x00), std::uint8_t(0x05)}) {
        std::vector<std::uint8_t> bytes = {tag};
        try {
            decode(env, "binop", bytes);
            FAIL_CHECK("expected a bad tag error");
        } catch (const PickleError& e) {
            CHECK(e.code() == Errc::BadTag);
            CHECK(std::string(e.what()).find("binop") != std::string::npos);
        }
    }
}

TEST_CASE("truncation is reported wherever the stream ends early") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    Value v = mk_sum(env, "stm", "ASGN", {},
                     {Value::identifier("abc"),
                      mk_sum(env, "exp", "ICON", {}, {Value::integer(1)})});
    std::vector<std::uint8_t> bytes = encode(env, "stm", v);
    for (std::size_t cut = 0; cut < bytes.size(); ++cut) {
        std::vector<std::uint8_t> prefix(bytes.begin(), bytes.begin() + cut);
        try {
            decode(env, "stm", prefix);
            FAIL_CHECK("expected an error at cut " << cut);
        } catch (const PickleError& e) {
            CHECK(e.code() == Errc::TruncatedStream);
        }
    }
}

TEST_CASE("hostile list counts do not allocate") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    // PRINT with a count far beyond the remaining bytes.
    std::vector<std::uint8_t> bytes = {0x03, 0xFF, 0xFF, 0xFF, 0x7F};
    try {
        decode(env, "stm", bytes);
        FAIL_CHECK("expected an error");
    } catch (const PickleError& e) {
        CHECK(e.code() == Errc::TruncatedStream);
    }
}

TEST_CASE("deep nesting hits the recursion guard, not the stack") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    std::vector<std::uint8_t> bytes(200000, 0x01);  // SEQ SEQ SEQ ...
    try {
        decode(env, "stm", bytes);
        FAIL_CHECK("expected an error");
    } catch (const PickleError& e) {
        CHECK(e.code() == Errc::RecursionLimit);
    }
}

TEST_CASE("integers beyond the wire range are refused at write time") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    Int huge("99999999999999999999999999");
    Value v = Value::sum("exp", "ICON", {}, {Value::integer(huge)});
    ByteWriter w;
    try {
        write_value(env, "exp", v, w);
        FAIL_CHECK("expected an error");
    } catch (const PickleError& e) {
        CHECK(e.code() == Errc::IntegerRange);
    }
}

TEST_CASE("round trip holds for random values of every type in both grammars") {
    for (const char* name : {"ir.asdl", "rcc.asdl"}) {
        SchemaEnv env = load_fixture_env(name);
        std::mt19937_64 rng(1234);
        for (const CheckedType& t : env.types()) {
            for (int i = 0; i < 150; ++i) {
                Value v = testsupport::random_value(env, t.name, rng);
                std::vector<std::uint8_t> bytes = encode(env, t.name, v);
                ByteReader r(bytes);
                Value back = read_value(env, t.name, r);
                CHECK(r.exhausted());  // consumed equals emitted
                CHECK(equal(v, back));
                // Canonical: re-encoding the decoded value is byte-identical.
                CHECK(encode(env, t.name, back) == bytes);
            }
        }
    }
}

TEST_CASE("instances concatenate with no framing") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    Value p = mk_sum(env, "stm", "PRINT", {}, {Value::list({})});
    Value q = mk_sum(env, "stm", "ASGN", {},
                     {Value::identifier("x"),
                      mk_sum(env, "exp", "ICON", {}, {Value::integer(5)})});
    ByteWriter w;
    write_instance(env, "stm", p, w);
    std::size_t first_len = w.size();
    write_instance(env, "stm", q, w);

    CHECK(equal(read_first(env, "stm", w.bytes()), p));
    std::vector<Value> all = read_all(env, "stm", w.bytes());
    REQUIRE(all.size() == 2);
    CHECK(equal(all[0], p));
    CHECK(equal(all[1], q));

    ByteReader r(w.bytes());
    read_instance(env, "stm", r);
    CHECK(r.position() == first_len);  // positioned at the next instance
}

TEST_CASE("reading the first instance of an empty pickle fails") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    try {
        read_first(env, "stm", {});
        FAIL_CHECK("expected an error");
    } catch (const PickleError& e) {
        CHECK(e.code() == Errc::EmptyPickle);
    }
}

TEST_CASE("write traces map byte offsets to value paths") {
    SchemaEnv env = load_fixture_env("ir.asdl");
    Value v = mk_sum(env, "stm", "ASGN", {},
                     {Value::identifier("x"),
                      mk_sum(env, "exp", "ICON", {}, {Value::integer(5)})});
    ByteWriter w;
    std::vector<TraceEntry> trace;
    write_value_traced(env, "stm", v, w, trace);
    REQUIRE(!trace.empty());
    CHECK(trace.front().offset == 0);
    CHECK(trace.front().path == "stm/ASGN");
    bool found = false;
    for (const TraceEntry& e : trace) {
        if (e.path == "stm/ASGN/exp1/ICON/int1") found = true;
    }
    CHECK(found);
}
