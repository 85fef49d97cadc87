#pragma once

// Exact scalar types. Every quantity in the library is an integer or a
// rational with bounded denominator; there is no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hilbrel {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vector lengths, ranks or sides of operands do not agree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An integer that must be even is odd (non-characteristic input).
class ParityError : public Error {
public:
    using Error::Error;
};

/// A form lands in a degree the bookkeeping does not allow.
class DegreeError : public Error {
public:
    using Error::Error;
};

/// A value that must be integral carries a denominator.
class IntegralityError : public Error {
public:
    using Error::Error;
};

/// Two independently computed sides of an identity disagree.
class MismatchError : public Error {
public:
    using Error::Error;
};

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& x)
{
    Rational c = x;
    c.canonicalize();
    return c.get_str();
}

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

inline Integer to_integer(const Rational& x, const std::string& what)
{
    Rational c = x;
    c.canonicalize();
    if (c.get_den() != 1)
        throw IntegralityError(what + ": non-integral value " + c.get_str());
    return c.get_num();
}

/// x / 2, throwing ParityError when x is odd.
inline Integer exact_half(const Integer& x, const std::string& what)
{
    if (mpz_odd_p(x.get_mpz_t()))
        throw ParityError(what + ": odd value " + x.get_str() + " cannot be halved");
    Integer r;
    mpz_divexact_ui(r.get_mpz_t(), x.get_mpz_t(), 2);
    return r;
}

inline bool is_odd(const Integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

/// (-1)^n as an int.
inline int sign_power(const Integer& n) { return is_odd(n) ? -1 : 1; }

inline Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace hilbrel
