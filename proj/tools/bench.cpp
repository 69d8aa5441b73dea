// Wall-time survey of the recursion across ranks; run with [max_rank] [genus].
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "realbetti/recursion.hpp"

int main(int argc, char** argv) {
    const int max_rank = argc > 1 ? std::atoi(argv[1]) : 4;
    const int genus = argc > 2 ? std::atoi(argv[2]) : 2;

    realbetti::recursion::Engine engine;
    const auto topo = realbetti::curves::validate_topology(genus, 1);
    for (int rank = 1; rank <= max_rank; ++rank) {
        const auto start = std::chrono::steady_clock::now();
        const auto result = engine.moduli_betti(rank, 1, topo);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        std::cout << "r=" << rank << " g=" << genus << "  degree " << result.polynomial.degree()
                  << "  strata " << result.strata_count << "  order " << result.order << "  "
                  << ms << " ms\n";
    }
    return 0;
}
