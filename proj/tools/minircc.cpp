// minircc: compile a mini-language source file to an rcc program pickle.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <minircc/frontend.hpp>
#include <minircc/pass2.hpp>

int main(int argc, char** argv) {
    CLI::App app{"mini front end: compile .mx source to a program pickle"};

    std::string source_path, out_path;
    int metrics_bits = 32;
    app.add_option("source", source_path, "mini-language source file")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("-o,--out", out_path, "output pickle file")->required();
    app.add_option("--metrics", metrics_bits, "target metrics: 32 or 64")
        ->check(CLI::IsMember({32, 64}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        std::ifstream in(source_path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();

        minircc::Metrics metrics = metrics_bits == 64
                                       ? minircc::Metrics::bits64()
                                       : minircc::Metrics::bits32();
        std::vector<std::uint8_t> pickle =
            minircc::compile(buf.str(), metrics);

        std::ofstream out(out_path, std::ios::binary);
        out.write(reinterpret_cast<const char*>(pickle.data()),
                  static_cast<std::streamsize>(pickle.size()));
        if (!out) {
            std::cerr << "minircc: " << out_path << ": cannot write pickle\n";
            return 1;
        }
        return 0;
    } catch (const minircc::FrontendError& e) {
        std::cerr << source_path << ":" << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "minircc: " << e.what() << "\n";
        return 1;
    }
}
