#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    bool help_requested = false;
    try {
        const parkinv::cli::RunConfig config =
            parkinv::cli::parse_command_line(argc, argv, std::cout, help_requested);
        if (help_requested)
            return 0;
        return parkinv::cli::run(config, std::cout, std::cerr);
    } catch (const parkinv::cli::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
