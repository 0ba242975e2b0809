#pragma once

#include <cstdint>

#include <random>

#include "qcusp/scalar.hpp"

namespace qcusp {

// A seeded pseudo-random stream.  mt19937_64's raw output sequence is fixed
// by the standard, so derived draws are computed here directly instead of
// going through distribution objects (whose sequences are not portable);
// every sweep with the same seed visits the same cases on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    // uniform over [lo, hi], both ends included
    long range(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(gen_() % span);
    }

    bool coin() { return (gen_() & 1u) != 0; }

    // a rational p/q with p in [-num_bound, num_bound], q in [1, den_bound]
    exact::Scalar rational(long num_bound, long den_bound) {
        long p = range(-num_bound, num_bound);
        long q = range(1, den_bound);
        mpq_class v(p, q);
        v.canonicalize();
        return exact::Scalar(v);
    }

    // a + bi with both parts as above
    exact::Scalar gaussian(long num_bound, long den_bound) {
        exact::Scalar re = rational(num_bound, den_bound);
        exact::Scalar im = rational(num_bound, den_bound);
        return re + im * exact::Scalar::i();
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace qcusp
