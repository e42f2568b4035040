#include "sflab/numeric.hpp"

#include <bit>

namespace sflab {

BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    BigInt out;
    if (k > n)
        return out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt factorial(std::uint64_t n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt pow(const BigInt& base, std::uint64_t exponent)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational pow(const Rational& base, std::int64_t exponent)
{
    const std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
    Rational out(pow(BigInt(base.get_num()), e), pow(BigInt(base.get_den()), e));
    out.canonicalize();
    if (exponent < 0)
        out = 1 / out;
    return out;
}

std::uint32_t floor_log2(std::uint64_t x)
{
    return static_cast<std::uint32_t>(63 - std::countl_zero(x));
}

std::uint32_t ceil_log2(std::uint64_t x)
{
    return x <= 1 ? 0 : floor_log2(x - 1) + 1;
}

std::string to_string(const BigInt& v)
{
    return v.get_str();
}

std::string to_string(const Rational& v)
{
    return v.get_str();
}

} // namespace sflab
