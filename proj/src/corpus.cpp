#include "ckdual/corpus.hpp"

#include <random>

namespace ckdual {

std::vector<CKMatrix> enumerate_ck_matrices(std::size_t n) {
    std::vector<CKMatrix> out;
    const std::size_t bits = n * n;
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << bits); ++code) {
        IntMatrix m(n, n);
        for (std::size_t b = 0; b < bits; ++b)
            if (code & (std::uint64_t(1) << (bits - 1 - b))) m(b / n, b % n) = 1;
        try {
            out.push_back(CKMatrix::validate(m));
        } catch (const ValidationError&) {
        }
    }
    return out;
}

std::vector<CKMatrix> sample_ck_matrices(std::size_t n, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution bit(0.5);
    std::vector<CKMatrix> out;
    while (out.size() < count) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (bit(rng)) m(i, j) = 1;
        try {
            out.push_back(CKMatrix::validate(m));
        } catch (const ValidationError&) {
        }
    }
    return out;
}

}  // namespace ckdual
