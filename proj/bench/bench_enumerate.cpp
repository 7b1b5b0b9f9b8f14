// Compares the serial reference enumeration against the OpenMP path and
// checks they produce the same multiset of classes.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "wienerlab/enumerate.hpp"

using namespace wienerlab;
using clk = std::chrono::steady_clock;

namespace {

double run(int n, int workers, StreamStats& out) {
    EnumerationConfig cfg;
    cfg.n = n;
    cfg.workers = workers;
    const auto t0 = clk::now();
    out = enumerate_two_connected(cfg, [](const Graph&, const CanonicalForm&) {});
    return std::chrono::duration<double>(clk::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int max_n = argc > 1 ? std::atoi(argv[1]) : 9;
    std::cout << "n,classes,serial_s,parallel_s,speedup,digest_match\n";
    for (int n = 6; n <= max_n; ++n) {
        StreamStats serial, parallel;
        const double ts = run(n, 1, serial);
        const double tp = run(n, 0, parallel);  // 0 = all hardware threads
        const bool match = serial.same_multiset(parallel);
        std::cout << n << ',' << serial.count << ',' << ts << ',' << tp << ','
                  << (tp > 0 ? ts / tp : 0.0) << ',' << (match ? "yes" : "NO") << '\n';
        if (!match) return 1;
    }
    return 0;
}
