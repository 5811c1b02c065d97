#pragma once

// Random generators shared by the property tests.

#include <random>

#include "ikeda/alaurent.hpp"
#include "ikeda/laurent.hpp"
#include "ikeda/ratfunc.hpp"
#include "ikeda/rational.hpp"

namespace ikeda::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int span = 9) {
        const int den = uniform(1, span);
        return Rational(uniform(-span, span), den);
    }

    Rational nonzero_rational(int span = 9) {
        Rational r;
        while (r.is_zero()) {
            r = rational(span);
        }
        return r;
    }

    LaurentQ laurent(int max_terms = 4, int exp_span = 4) {
        LaurentQ out;
        const int terms = uniform(0, max_terms);
        for (int i = 0; i < terms; ++i) {
            out.add_term(uniform(-exp_span, exp_span), rational());
        }
        return out;
    }

    LaurentQ nonzero_laurent(int max_terms = 4, int exp_span = 4) {
        LaurentQ out;
        while (out.is_zero()) {
            out = laurent(max_terms, exp_span);
        }
        return out;
    }

    RatFuncQ ratfunc() { return RatFuncQ::reduce(laurent(3, 3), nonzero_laurent(3, 3)); }

    template <class C, class Make>
    ALaurent<C> alaurent(Make&& make, int max_terms = 3) {
        ALaurent<C> out;
        const int terms = uniform(0, max_terms);
        for (int i = 0; i < terms; ++i) {
            out.add_term(uniform(-3, 3), make());
        }
        return out;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace ikeda::testing
