#include "gpc/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace gpc {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t rng_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = splitmix64(seed ^ 0x6A09E667F3BCC909ULL);
    h = splitmix64(h ^ (a * 0xD1B54A32D192ED03ULL + 1));
    return splitmix64(h ^ (b * 0x9E3779B97F4A7C15ULL + 1));
}

double uniform_unit(std::uint64_t key) {
    return static_cast<double>(key >> 11) * 0x1.0p-53;
}

double uniform_in(double lo, double hi, std::uint64_t key) {
    return lo + (hi - lo) * uniform_unit(key);
}

CMatrix random_matrix(int n, std::uint64_t seed) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::uint64_t idx = static_cast<std::uint64_t>(i) * n + j;
            m(i, j) = Complex(uniform_in(-1.0, 1.0, rng_key(seed, idx, 0)),
                              uniform_in(-1.0, 1.0, rng_key(seed, idx, 1)));
        }
    return m;
}

CMatrix random_hermitian(int n, std::uint64_t seed) {
    const CMatrix a = random_matrix(n, seed);
    CMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

CMatrix random_unitary(int n, std::uint64_t seed) {
    const CMatrix a = random_matrix(n, seed);
    CMatrix u(n);
    for (int col = 0; col < n; ++col) {
        std::vector<Complex> v(n);
        for (int r = 0; r < n; ++r) v[r] = a(r, col);
        for (int pass = 0; pass < 2; ++pass) {
            for (int prev = 0; prev < col; ++prev) {
                Complex ip(0.0, 0.0);
                for (int r = 0; r < n; ++r) ip += std::conj(u(r, prev)) * v[r];
                for (int r = 0; r < n; ++r) v[r] -= ip * u(r, prev);
            }
        }
        double nrm = 0.0;
        for (int r = 0; r < n; ++r) nrm += std::norm(v[r]);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) throw std::runtime_error("random_unitary: degenerate sample");
        for (int r = 0; r < n; ++r) u(r, col) = v[r] / nrm;
    }
    return u;
}

}  // namespace gpc
