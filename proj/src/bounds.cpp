#include "sflab/bounds.hpp"

#include <algorithm>
#include <cctype>

#include "sflab/errors.hpp"

namespace sflab {

std::uint32_t log_star(const BigInt& k)
{
    if (k < 1)
        throw InvalidArgument("log_star requires k >= 1");
    // tower[i] = 2^^(i+1): 2, 4, 16, 65536, 2^65536
    std::uint32_t i = 0;
    BigInt tower = 2;
    while (k > tower) {
        ++i;
        if (!tower.fits_ulong_p())
            break; // 2^tower exceeds every representable k
        tower = pow(BigInt(2), tower.get_ui());
    }
    return i;
}

std::uint32_t log_star(std::uint64_t k)
{
    return log_star(BigInt(std::to_string(k)));
}

std::string to_string(BoundId id)
{
    switch (id) {
    case BoundId::ER: return "ER";
    case BoundId::T1: return "T1";
    case BoundId::T2: return "T2";
    case BoundId::T3U: return "T3U";
    case BoundId::T3L: return "T3L";
    case BoundId::T7: return "T7";
    case BoundId::DSW: return "DSW";
    case BoundId::SS: return "SS";
    case BoundId::L3: return "L3";
    case BoundId::C1: return "C1";
    case BoundId::T4: return "T4";
    case BoundId::T6: return "T6";
    }
    return "?";
}

std::vector<BoundId> all_bound_ids()
{
    return {BoundId::ER,  BoundId::T1, BoundId::T2, BoundId::T3U, BoundId::T3L, BoundId::T7,
            BoundId::DSW, BoundId::SS, BoundId::L3, BoundId::C1,  BoundId::T4,  BoundId::T6};
}

BoundId parse_bound_id(const std::string& text)
{
    std::string upper = text;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    for (BoundId id : all_bound_ids())
        if (to_string(id) == upper)
            return id;
    throw InvalidArgument("unknown bound id '" + text + "'");
}

RationalInterval inverse_e_enclosure()
{
    const BigInt scale("100000000000000000");
    return {Rational(BigInt("36787944117144232"), scale), Rational(BigInt("36787944117144233"), scale)};
}

namespace {

std::uint64_t need(const std::optional<std::uint64_t>& v, const char* name, BoundId id)
{
    if (!v)
        throw InvalidArgument(to_string(id) + " needs parameter " + name);
    return *v;
}

void require(bool ok, BoundId id, const char* what)
{
    if (!ok)
        throw InvalidArgument(to_string(id) + " is stated for " + what);
}

std::uint64_t bit_length(const BigInt& v)
{
    return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

BigInt guarded_pow(const BigInt& base, const BigInt& exponent)
{
    if (!exponent.fits_ulong_p())
        throw BudgetExceeded("exponent " + exponent.get_str() + " is too large to evaluate");
    const std::uint64_t e = exponent.get_ui();
    if (base > 1 && e > 0 && bit_length(base) > max_bound_bits / e)
        throw BudgetExceeded("value exceeds " + std::to_string(max_bound_bits) + " bits");
    return pow(base, e);
}

BigInt u(std::uint64_t v)
{
    return BigInt(std::to_string(v));
}

// 10 k (dr)^(2 log* k)
BigInt tower_exponent(std::uint64_t d, std::uint64_t k, std::uint64_t r)
{
    const std::uint32_t ls = log_star(k);
    return u(10) * u(k) * pow(BigInt(u(d) * u(r)), std::uint64_t{2} * ls);
}

} // namespace

BoundValue evaluate_bound(BoundId id, const BoundParams& p)
{
    BoundValue out;
    out.id = id;
    out.params = p;
    switch (id) {
    case BoundId::ER: {
        const auto r = need(p.r, "r", id), k = need(p.k, "k", id);
        require(r >= 3 && k >= 1, id, "r >= 3, k >= 1");
        out.value = factorial(k) * guarded_pow(u(r - 1), u(k));
        out.formula = "k!(r-1)^k";
        break;
    }
    case BoundId::T1: {
        const auto r = need(p.r, "r", id), k = need(p.k, "k", id);
        require(r >= 3 && k >= 1, id, "r >= 3, k >= 1");
        out.value = guarded_pow(u(r), u(10) * u(k));
        out.formula = "r^(10k)";
        break;
    }
    case BoundId::T2: {
        const auto r = need(p.r, "r", id), k = need(p.k, "k", id), d = need(p.d, "d", id);
        require(d >= 2 && k >= 2 && r >= 2, id, "d, k, r >= 2");
        out.value = guarded_pow(2, tower_exponent(d, k, r));
        out.formula = "2^(10k(dr)^(2log*k))";
        break;
    }
    case BoundId::T3U: {
        const auto r = need(p.r, "r", id), k = need(p.k, "k", id), d = need(p.d, "d", id);
        require(d >= 1 && k >= 1 && r >= 1, id, "positive d, r, k");
        out.value = guarded_pow(u(r) * u(k), u(d));
        out.formula = "(rk)^d";
        break;
    }
    case BoundId::T3L: {
        const auto r = need(p.r, "r", id), k = need(p.k, "k", id), d = need(p.d, "d", id);
        require(d >= 3 && r >= 3 && k >= 4 * d, id, "d, r >= 3, k >= 4d");
        Rational base(u(r) * u(k), u(d));
        base.canonicalize();
        out.value = Rational(guarded_pow(BigInt(base.get_num()), u(d)), guarded_pow(BigInt(base.get_den()), u(d)));
        out.value.canonicalize();
        out.asymptotic = true;
        out.formula = "(rk/d)^d [asymptotic form, o(d) dropped; not a certified bound]";
        break;
    }
    case BoundId::T7: {
        const auto r = need(p.r, "r", id), k = need(p.k, "k", id), l = need(p.lambda, "lambda", id);
        require(r >= 3 && k >= 1, id, "r >= 3, k >= 1");
        out.value = guarded_pow(u(l) + u(r), u(6) * u(l) * u(k));
        out.formula = "(lambda+r)^(6 lambda k)";
        break;
    }
    case BoundId::DSW: {
        const auto l = need(p.lambda, "lambda", id), nu = need(p.nu, "nu", id);
        const BigInt c = binomial(l + nu, l);
        out.value = u(11) * u(l) * u(l) * (u(l) + u(nu) + 3) * c * c;
        out.formula = "11 lambda^2 (lambda+nu+3) C(lambda+nu, lambda)^2";
        break;
    }
    case BoundId::SS: {
        const auto n = need(p.n, "n", id), d = need(p.d, "d", id);
        BigInt total = 0;
        for (std::uint64_t i = 0; i <= std::min(n, d); ++i)
            total += binomial(n, i);
        out.value = total;
        out.formula = "sum_{i=0}^{d} C(n, i)";
        break;
    }
    case BoundId::L3: {
        const auto r = need(p.r, "r", id), k = need(p.k, "k", id), d = need(p.d, "d", id), g = need(p.g, "g", id);
        require(d >= 2 && k >= 2 && r >= 2 && g >= 1, id, "d, k, r >= 2 and g >= 1");
        out.value = Rational(1, 1) / Rational(guarded_pow(u(g), u(r - 1)));
        out.divided_by_e = true;
        out.formula = "g^(1-r)/e";
        break;
    }
    case BoundId::C1: {
        const auto r = need(p.r, "r", id), k = need(p.k, "k", id), d = need(p.d, "d", id);
        require(d >= 2 && k >= 2 && r >= 2, id, "d, k, r >= 2");
        const BigInt base = factorial(k) * guarded_pow(u(r - 1), u(k + 1)) + 1;
        out.value = Rational(1, 1) / Rational(guarded_pow(base, u(r - 1)));
        out.divided_by_e = true;
        out.formula = "(k!(r-1)^(k+1)+1)^(1-r)/e";
        break;
    }
    case BoundId::T4: {
        const auto r = need(p.r, "r", id), k = need(p.k, "k", id);
        require(r > 2 && k >= 1, id, "r > 2, k >= 1");
        out.value = guarded_pow(u(500) + u(r), u(900) * u(k));
        out.formula = "(500+r)^(900k)";
        break;
    }
    case BoundId::T6: {
        const auto r = need(p.r, "r", id), k = need(p.k, "k", id), d = need(p.d, "d", id);
        require(d >= 2 && k >= 2 && r >= 2, id, "d, k, r >= 2");
        out.value = Rational(1, 1) / Rational(guarded_pow(2, tower_exponent(d, k, r)));
        out.formula = "2^(-10k(dr)^(2log*k))";
        break;
    }
    }
    out.value.canonicalize();
    if (out.divided_by_e) {
        const RationalInterval e = inverse_e_enclosure();
        out.enclosure = {out.value * e.lo, out.value * e.hi};
    } else {
        out.enclosure = {out.value, out.value};
    }
    return out;
}

} // namespace sflab
