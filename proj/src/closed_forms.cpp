#include "chorddia/closed_forms.hpp"

#include <string>

#include "chorddia/errors.hpp"
#include "chorddia/group_algebra.hpp"

namespace chorddia {

namespace {

void require_order(unsigned n, const char* who)
{
    if (n == 0)
        throw DomainError(std::string(who) + ": n must be positive");
}

// Returns 2n/i after checking that i divides 2n.
unsigned cycle_count(unsigned n, std::uint64_t i, const char* who)
{
    require_order(n, who);
    if (i == 0 || (2 * static_cast<std::uint64_t>(n)) % i != 0)
        throw DomainError(std::string(who) + ": " + std::to_string(i) + " does not divide " +
                          std::to_string(2 * n));
    return static_cast<unsigned>(2 * static_cast<std::uint64_t>(n) / i);
}

} // namespace

BigCount nu(unsigned n, std::uint64_t i)
{
    const unsigned cycles = cycle_count(n, i, "nu");
    const BigCount len = i;
    if (i % 2 == 1)
        return power(len, cycles / 2) * odd_double_factorial(static_cast<long>(cycles) - 1);
    BigCount sum = 0;
    for (unsigned k = 0; 2 * k <= cycles; ++k)
        sum += binomial(cycles, 2 * k) * power(len, k) * odd_double_factorial(2L * k - 1);
    return sum;
}

BigCount psi(unsigned n, std::uint64_t i)
{
    const unsigned cycles = cycle_count(n, i, "psi");
    const BigCount len = i;
    const BigCount wreath_order = power(BigCount(2), n) * factorial(n);
    if (i % 2 == 1) {
        const unsigned tau_cycles = cycles / 2;
        const BigCount den = power(BigCount(2), tau_cycles) * power(len, tau_cycles) *
                             factorial(tau_cycles);
        return exact_divide(wreath_order, den, "psi (odd cycle length)");
    }
    BigRational sum = 0;
    for (unsigned k = 0; 2 * k <= cycles; ++k) {
        BigCount den = factorial(cycles - 2 * k) * power(BigCount(2), k) * factorial(k);
        sum += BigRational(power(len, k), den);
    }
    sum *= BigRational(wreath_order, power(len, cycles));
    return exact_integer(sum, "psi (even cycle length)");
}

BigCount psi_reflection(unsigned n)
{
    require_order(n, "psi_reflection");
    const BigCount nf = factorial(n);
    BigCount sum = 0;
    for (unsigned k = 0; 2 * k + 1 <= n; ++k) {
        const unsigned fixed = n - 2 * k;
        sum += exact_divide(fixed * nf, factorial(fixed) * factorial(k), "psi_reflection term");
    }
    return sum;
}

BigCount kappa(unsigned n)
{
    const BigCount nf = factorial(n);
    BigCount sum = 0;
    for (unsigned k = 0; 2 * k <= n; ++k)
        sum += exact_divide(nf, factorial(k) * factorial(n - 2 * k), "kappa term");
    return sum;
}

BigCount cyclic_count(unsigned n)
{
    require_order(n, "cyclic_count");
    const std::uint64_t points = 2 * static_cast<std::uint64_t>(n);
    BigCount sum = 0;
    for (auto i : divisors(points))
        sum += euler_phi(i) * nu(n, i);
    return exact_divide(sum, points, "cyclic_count");
}

BigCount dihedral_count(unsigned n)
{
    require_order(n, "dihedral_count");
    const BigCount reflections = exact_divide(kappa(n - 1) + kappa(n), 2, "dihedral_count (kappa)");
    return exact_divide(cyclic_count(n) + reflections, 2, "dihedral_count");
}

BigCount identity_count(unsigned n)
{
    require_order(n, "identity_count");
    return odd_double_factorial(2L * n - 1);
}

AsymptoticBound asymptotic_lower(SymmetryKind kind, unsigned n)
{
    require_order(n, "asymptotic_lower");
    AsymptoticBound bound{kind, n, identity_count(n),
                          BigCount(kind == SymmetryKind::cyclic ? 2 * n : 4 * n), 0};
    bound.exact_floor = bound.numerator / bound.denominator;
    return bound;
}

} // namespace chorddia
