// Regenerates the plain-text instances under fixtures/ from the in-code
// constructors.  Output is deterministic, so rerunning never dirties the tree.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "hardcore/fixtures.hpp"

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        std::cerr << "cannot create " << dir << ": " << ec.message() << "\n";
        return 1;
    }
    for (const hardcore::NamedFixture& f : hardcore::named_fixtures()) {
        std::filesystem::path file = dir / (f.name + ".txt");
        std::ofstream out(file);
        if (!out) {
            std::cerr << "cannot open " << file << " for writing\n";
            return 1;
        }
        out << hardcore::fixture_file_text(f);
        std::cout << file.string() << "\n";
    }
    return 0;
}
