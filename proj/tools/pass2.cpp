// pass2: read a program pickle, rebuild the symbol and type tables, and
// emit pseudo-assembly on standard output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <minircc/pass2.hpp>

int main(int argc, char** argv) {
    CLI::App app{"mini back end: replay a program pickle as assembly"};

    std::string pickle_path;
    app.add_option("pickle", pickle_path, "program pickle file")
        ->required()
        ->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        std::ifstream in(pickle_path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string bytes = buf.str();

        std::string assembly = minircc::pass2(
            {reinterpret_cast<const std::uint8_t*>(bytes.data()),
             bytes.size()});
        std::fwrite(assembly.data(), 1, assembly.size(), stdout);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "pass2: " << pickle_path << ": " << e.what() << "\n";
        return 1;
    }
}
