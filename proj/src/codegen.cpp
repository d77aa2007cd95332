#include <asdl/codegen.hpp>

#include <fstream>

#include <asdl/pickle.hpp>

namespace asdl::codegen {

const GeneratedFile* GeneratedUnit::find(std::string_view path) const {
    for (const GeneratedFile& f : files) {
        if (f.path == path) return &f;
    }
    return nullptr;
}

BackendError::BackendError(std::string path, const std::string& reason)
    : std::runtime_error(path + ": " + reason), path_(std::move(path)) {}

GeneratedUnit generate(const SchemaEnv& env, Backend& backend) {
    backend.begin_unit(env);
    for (const CheckedType& t : env.types()) {
        if (t.kind == TypeKind::Product) {
            backend.emit_product_type(env, t);
        } else if (t.enum_like) {
            backend.emit_enum_type(env, t);
        } else {
            backend.emit_sum_type(env, t);
        }
    }
    for (const CheckedType& t : env.types()) {
        backend.emit_constructors(env, t);
    }
    for (const CheckedType& t : env.types()) {
        backend.emit_codec(env, t);
    }
    return backend.finish(env);
}

void write_unit(const GeneratedUnit& unit, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw BackendError(dir.string(), ec.message());
    for (const GeneratedFile& f : unit.files) {
        std::filesystem::path path = dir / f.path;
        std::ofstream out(path, std::ios::binary);
        out.write(f.content.data(),
                  static_cast<std::streamsize>(f.content.size()));
        if (!out) throw BackendError(path.string(), "cannot write file");
    }
}

ConformanceReport run_conformance(const SchemaEnv& env,
                                  std::string_view type_name,
                                  std::span<const Value> samples,
                                  const GeneratedCodec& codec) {
    ConformanceReport report;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        ++report.samples;
        pickle::ByteWriter w;
        std::vector<pickle::TraceEntry> trace;
        pickle::write_value_traced(env, type_name, samples[k], w, trace);
        const std::vector<std::uint8_t>& oracle = w.bytes();

        std::vector<std::uint8_t> produced;
        try {
            produced = codec.transcode(oracle);
        } catch (const std::exception& e) {
            report.mismatches.push_back(
                {k, std::string(type_name), 0,
                 std::string("generated codec failed: ") + e.what()});
            continue;
        }

        std::size_t limit = std::min(produced.size(), oracle.size());
        std::size_t diff = limit;
        for (std::size_t i = 0; i < limit; ++i) {
            if (produced[i] != oracle[i]) {
                diff = i;
                break;
            }
        }
        if (diff == limit && produced.size() == oracle.size()) continue;

        // Attribute the first differing byte to the deepest scalar the
        // interpretive writer placed at or before it.
        std::string path(type_name);
        for (const pickle::TraceEntry& entry : trace) {
            if (entry.offset > diff) break;
            path = entry.path;
        }
        report.mismatches.push_back(
            {k, path, diff,
             "generated " + std::to_string(produced.size()) +
                 " byte(s), expected " + std::to_string(oracle.size())});
    }
    return report;
}

std::vector<std::string> backend_names() { return {"cpp"}; }

}  // namespace asdl::codegen
