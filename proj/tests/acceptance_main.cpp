// Acceptance runner: one line per criterion. `--only N` runs a single criterion.
#include "tqft/verify/acceptance.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    namespace acc = tqft::acceptance;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--only N]\n";
            return 2;
        }
    }
    const auto opts = acc::default_options();
    bool all = true;
    for (int id = 1; id <= acc::criterion_count; ++id) {
        if (only != 0 && id != only) continue;
        const auto r = acc::run(id, opts);
        std::cout << acc::format_line(r) << std::endl;
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
