#include "cell24/rational.hpp"

namespace cell24 {

std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return root;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    auto num = exact_sqrt(r.numerator());
    auto den = exact_sqrt(r.denominator());
    if (!num || !den) return std::nullopt;
    return Rational(*num, *den);
}

} // namespace cell24
