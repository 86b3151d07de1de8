#include <iostream>
#include <string>

#include "hypnet/repro.hpp"

int main(int argc, char** argv)
{
    const bool smoke = argc > 1 && std::string(argv[1]) == "smoke";
    const auto results = hypnet::run_repro(smoke ? hypnet::Scale::smoke : hypnet::Scale::desk, std::cout);
    int failed = 0;
    for (const auto& c : results)
        failed += !c.pass;
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria pass\n";
    return failed ? 1 : 0;
}
