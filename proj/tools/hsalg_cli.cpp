#include <iostream>
#include <string>
#include <vector>

#include "hsalg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool human = false;
    for (const auto& a : args) human = human || a == "--human";
    hsalg::CommandResult res = hsalg::run_cli(args);
    if (human) {
        std::cout << res.human;
    } else {
        std::cout << res.body.dump(2) << "\n";
    }
    return res.exit_code;
}
