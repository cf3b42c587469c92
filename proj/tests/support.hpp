#ifndef VLOGIC_TESTS_SUPPORT_HPP
#define VLOGIC_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "vlogic/vlogic.hpp"

namespace vlogic::fixtures {

using cd = std::complex<double>;
inline constexpr cd i1{0.0, 1.0};

/// Seeded draws for property tests.
class gen {
public:
    explicit gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    std::uint64_t seed() { return rng_(); }

    rvector real_vector(std::size_t n) {
        rvector v(n);
        for (auto& x : v) x = uniform(-1, 1);
        return v;
    }

    complex_matrix matrix(std::size_t r, std::size_t c) {
        complex_matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = {uniform(-1, 1), uniform(-1, 1)};
        return m;
    }

private:
    std::mt19937_64 rng_;
};

inline complex_matrix scaled(double f, complex_matrix m) { return cd(f) * m; }

/// Reference matrices for the 4-dimensional example, entered by hand.
namespace reference {

inline complex_matrix dim4_i() {
    return scaled(0.5, {{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}});
}
inline complex_matrix dim4_n() {
    return scaled(0.5, {{1, 0, 0, 1}, {0, -1, -1, 0}, {0, -1, -1, 0}, {1, 0, 0, 1}});
}
inline complex_matrix dim4_a() {
    return scaled(0.5, {{1, 0, 0, 1}, {0, i1, i1, 0}, {0, i1, i1, 0}, {1, 0, 0, 1}});
}
inline complex_matrix dim4_b() {
    return scaled(0.5, {{1, 0, 0, 1}, {0, -i1, -i1, 0}, {0, -i1, -i1, 0}, {1, 0, 0, 1}});
}

} // namespace reference

} // namespace vlogic::fixtures

#endif // VLOGIC_TESTS_SUPPORT_HPP
