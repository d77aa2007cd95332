#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <asdl/schema.hpp>
#include <asdl/value.hpp>

namespace asdl::codegen {

struct GeneratedFile {
    std::string path;  // relative to the output directory
    std::string content;
};

struct GeneratedUnit {
    std::vector<GeneratedFile> files;

    const GeneratedFile* find(std::string_view path) const;
};

class BackendError : public std::runtime_error {
public:
    BackendError(std::string path, const std::string& reason);

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Rendering hooks for one target language. generate() drives the hooks in
/// a fixed order: begin_unit, then per type in declaration order the
/// definition, constructor functions and codec, then finish.
class Backend {
public:
    virtual ~Backend() = default;

    virtual std::string name() const = 0;

    virtual void begin_unit(const SchemaEnv& env) = 0;
    virtual void emit_enum_type(const SchemaEnv& env,
                                const CheckedType& type) = 0;
    virtual void emit_sum_type(const SchemaEnv& env,
                               const CheckedType& type) = 0;
    virtual void emit_product_type(const SchemaEnv& env,
                                   const CheckedType& type) = 0;
    virtual void emit_constructors(const SchemaEnv& env,
                                   const CheckedType& type) = 0;
    virtual void emit_codec(const SchemaEnv& env, const CheckedType& type) = 0;
    virtual GeneratedUnit finish(const SchemaEnv& env) = 0;
};

/// Deterministic: the same env and backend produce byte-identical output.
GeneratedUnit generate(const SchemaEnv& env, Backend& backend);

std::unique_ptr<Backend> make_backend(std::string_view name);
std::vector<std::string> backend_names();

/// Writes unit files under dir, creating it if needed.
/// Throws BackendError with the offending path on I/O failure.
void write_unit(const GeneratedUnit& unit, const std::filesystem::path& dir);

/// Bridge to compiled generated code for one type: reads a value from the
/// given bytes with the generated reader and re-encodes it with the
/// generated writer.
struct GeneratedCodec {
    std::function<std::vector<std::uint8_t>(std::span<const std::uint8_t>)>
        transcode;
};

struct Mismatch {
    std::size_t sample = 0;
    std::string value_path;  // deepest scalar covering the first bad byte
    std::size_t byte_offset = 0;
    std::string detail;
};

struct ConformanceReport {
    std::size_t samples = 0;
    std::vector<Mismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Checks that the generated codec reproduces the interpretive encoding
/// byte for byte on every sample.
ConformanceReport run_conformance(const SchemaEnv& env,
                                  std::string_view type_name,
                                  std::span<const Value> samples,
                                  const GeneratedCodec& codec);

}  // namespace asdl::codegen
