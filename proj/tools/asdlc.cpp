// asdlc: check and compile ASDL specifications, generate code, and convert
// values between the text, binary pickle, and XML forms.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <asdl/codegen.hpp>
#include <asdl/parser.hpp>
#include <asdl/pickle.hpp>
#include <asdl/schema.hpp>
#include <asdl/text_form.hpp>
#include <asdl/xml_form.hpp>

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_stdin() {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

void write_stdout(std::string_view data) {
    std::fwrite(data.data(), 1, data.size(), stdout);
    std::fflush(stdout);
}

std::span<const std::uint8_t> as_bytes(const std::string& s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

asdl::SchemaEnv load_schema(const std::string& path) {
    try {
        return asdl::check(asdl::parse_spec(read_file(path)));
    } catch (const asdl::ParseError& e) {
        throw std::runtime_error(path + ":" + e.what());
    } catch (const asdl::CheckError& e) {
        throw std::runtime_error(path + ":" + e.what());
    }
}

/// Accepts `type` or `Module.type`; the module part must match the schema.
std::string resolve_type(const asdl::SchemaEnv& env, const std::string& name) {
    std::string type = name;
    if (auto dot = name.find('.'); dot != std::string::npos) {
        std::string module = name.substr(0, dot);
        if (module != env.module_name()) {
            throw UsageError("type '" + name + "' names module '" + module +
                             "', but the schema defines module '" +
                             env.module_name() + "'");
        }
        type = name.substr(dot + 1);
    }
    if (!asdl::is_builtin_type(type) && !env.find_type(type)) {
        throw UsageError("schema module '" + env.module_name() +
                         "' does not define type '" + type + "'");
    }
    return type;
}

int run_check(const std::string& file) {
    asdl::SchemaEnv env = load_schema(file);
    std::size_t ctors = 0;
    for (const asdl::CheckedType& t : env.types()) {
        ctors += t.constructors.size();
    }
    std::cout << file << ": module " << env.module_name() << ": "
              << env.types().size() << " types, " << ctors
              << " constructors\n";
    return 0;
}

int run_gen(const std::string& file, const std::string& backend_name,
            const std::string& out_dir) {
    asdl::SchemaEnv env = load_schema(file);
    auto backend = asdl::codegen::make_backend(backend_name);
    if (!backend) throw UsageError("unknown backend '" + backend_name + "'");
    asdl::codegen::GeneratedUnit unit = asdl::codegen::generate(env, *backend);
    asdl::codegen::write_unit(unit, out_dir);
    for (const asdl::codegen::GeneratedFile& f : unit.files) {
        std::cout << out_dir << "/" << f.path << "\n";
    }
    return 0;
}

int run_encode(const asdl::SchemaEnv& env, const std::string& type) {
    std::vector<asdl::Value> values =
        asdl::text::parse_values(env, type, read_stdin());
    asdl::pickle::ByteWriter w;
    for (const asdl::Value& v : values) {
        asdl::pickle::write_instance(env, type, v, w);
    }
    write_stdout({reinterpret_cast<const char*>(w.bytes().data()),
                  w.bytes().size()});
    return 0;
}

int run_decode(const asdl::SchemaEnv& env, const std::string& type) {
    std::string input = read_stdin();
    std::string out;
    for (const asdl::Value& v :
         asdl::pickle::read_all(env, type, as_bytes(input))) {
        out += asdl::text::print_value(env, type, v);
        out += '\n';
    }
    write_stdout(out);
    return 0;
}

int run_to_xml(const asdl::SchemaEnv& env, const std::string& type) {
    std::string input = read_stdin();
    std::vector<asdl::Value> values =
        asdl::pickle::read_all(env, type, as_bytes(input));
    write_stdout(asdl::xml::write_file(env, type, values));
    return 0;
}

int run_from_xml(const asdl::SchemaEnv& env, const std::string& type) {
    std::vector<asdl::Value> values =
        asdl::xml::read_file(env, type, read_stdin());
    asdl::pickle::ByteWriter w;
    for (const asdl::Value& v : values) {
        asdl::pickle::write_instance(env, type, v, w);
    }
    write_stdout({reinterpret_cast<const char*>(w.bytes().data()),
                  w.bytes().size()});
    return 0;
}

int run_append(const asdl::SchemaEnv& env, const std::string& type,
               const std::string& pickle_path) {
    // The target must already be a pickle; appending to nothing is not
    // appending.
    std::string existing = read_file(pickle_path);
    if (existing.empty()) {
        throw std::runtime_error(pickle_path + ": empty pickle file");
    }
    asdl::Value v = asdl::text::parse_value(env, type, read_stdin());
    asdl::pickle::ByteWriter w;
    asdl::pickle::write_instance(env, type, v, w);
    std::ofstream out(pickle_path, std::ios::binary | std::ios::app);
    out.write(reinterpret_cast<const char*>(w.bytes().data()),
              static_cast<std::streamsize>(w.bytes().size()));
    if (!out) {
        throw std::runtime_error(pickle_path + ": cannot append to file");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ASDL toolchain: check, generate, encode, decode, convert"};
    app.require_subcommand(1);

    std::string file, schema, type, backend = "cpp", out_dir, pickle_path;

    CLI::App* check = app.add_subcommand("check", "parse and check a spec");
    check->add_option("file", file, "ASDL specification")
        ->required()
        ->check(CLI::ExistingFile);

    CLI::App* gen = app.add_subcommand("gen", "generate source code");
    gen->add_option("file", file, "ASDL specification")
        ->required()
        ->check(CLI::ExistingFile);
    gen->add_option("--backend", backend, "target backend")
        ->check(CLI::IsMember(asdl::codegen::backend_names()));
    gen->add_option("-o,--out", out_dir, "output directory")->required();

    auto add_schema_type = [&](CLI::App* cmd) {
        cmd->add_option("--schema", schema, "ASDL specification")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--type", type, "instance type, Module.type or type")
            ->required();
    };

    CLI::App* encode =
        app.add_subcommand("encode", "text forms on stdin -> pickle on stdout");
    add_schema_type(encode);
    CLI::App* decode =
        app.add_subcommand("decode", "pickle on stdin -> text forms on stdout");
    add_schema_type(decode);
    CLI::App* to_xml =
        app.add_subcommand("to-xml", "pickle on stdin -> XML on stdout");
    add_schema_type(to_xml);
    CLI::App* from_xml =
        app.add_subcommand("from-xml", "XML on stdin -> pickle on stdout");
    add_schema_type(from_xml);
    CLI::App* append = app.add_subcommand(
        "append", "append one text-form instance to an existing pickle");
    add_schema_type(append);
    append->add_option("pickle", pickle_path, "pickle file to extend")
        ->required()
        ->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) return run_check(file);
        if (gen->parsed()) return run_gen(file, backend, out_dir);
        asdl::SchemaEnv env = load_schema(schema);
        std::string t = resolve_type(env, type);
        if (encode->parsed()) return run_encode(env, t);
        if (decode->parsed()) return run_decode(env, t);
        if (to_xml->parsed()) return run_to_xml(env, t);
        if (from_xml->parsed()) return run_from_xml(env, t);
        if (append->parsed()) return run_append(env, t, pickle_path);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "asdlc: " << e.what() << "\n";
        return 2;
    } catch (const asdl::ParseError& e) {
        // Only the value text on stdin still raises ParseError here.
        std::cerr << "<stdin>:" << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "asdlc: " << e.what() << "\n";
        return 1;
    }
}
