// Benchmark comparing the serial reference kernels against the OpenMP
// parallel paths: exhaustive root counting, weight spectra and the
// scattered-alpha sweep.
#include <chrono>
#include <iostream>

#include "linroots/kernel.hpp"
#include "linroots/linset.hpp"

using namespace linroots;
using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

template <typename F>
double time_best_of(unsigned reps, F&& fn) {
    double best = 1e300;
    for (unsigned i = 0; i < reps; ++i) {
        auto t0 = clk::now();
        fn();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

void row(const std::string& name, double serial_ms, double parallel_ms) {
    std::cout << name << ": serial " << serial_ms << " ms, parallel "
              << parallel_ms << " ms, speedup "
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x\n";
}

}  // namespace

int main() {
    {   // root counting over F_{2^18} (n=3, t=6 trinomial form)
        TowerCtx tw(2, 1, 3, 6);
        std::vector<FFElem> b(6, tw.field.zero());
        b[0] = tw.field.neg(tw.field.one());
        b[1] = tw.field.one();
        LinPoly f = embed(SigmaForm(tw, 1, b));
        uint64_t ns = 0, np = 0;
        double s = time_best_of(3, [&] { ns = count_roots_serial(f); });
        double p = time_best_of(3, [&] { np = count_roots_parallel(f); });
        if (ns != np) {
            std::cerr << "count mismatch: " << ns << " vs " << np << "\n";
            return 1;
        }
        row("count-roots F_{2^18}", s, p);
    }
    {   // weight spectrum over F_{3^8} (n=2, t=4)
        TowerCtx tw(3, 1, 2, 4);
        auto O = tw.field.one();
        LinearSetSpec L(tw, 1, {O, O, O, tw.field.zero()});
        WeightSpectrum ws, wp;
        double s = time_best_of(3, [&] { ws = weight_spectrum_serial(L); });
        double p = time_best_of(3, [&] { wp = weight_spectrum(L); });
        if (ws.counts != wp.counts || ws.size != wp.size) {
            std::cerr << "spectrum mismatch\n";
            return 1;
        }
        row("weight-spectrum F_{3^8}", s, p);
    }
    {   // scattered-alpha sweep over F_{5^6}
        TowerCtx tw(5, 1, 3, 2);
        std::vector<FFElem> as, ap;
        double s = time_best_of(1, [&] { as = search_alpha_serial(tw); });
        double p = time_best_of(1, [&] { ap = search_alpha(tw); });
        if (as != ap) {
            std::cerr << "alpha sweep mismatch\n";
            return 1;
        }
        row("search-alpha F_{5^6} (" + std::to_string(as.size()) + " hits)", s,
            p);
    }
    return 0;
}
