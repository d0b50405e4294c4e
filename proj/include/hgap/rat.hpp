#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hgap {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

/// num/den in lowest terms.
Rat ratio(const Int& num, const Int& den);

/// Lossless "num/den" form; the denominator is always printed.
std::string to_string(const Rat& x);

/// Short human form: "7", "-3/4".
std::string to_display(const Rat& x);

double to_double(const Rat& x);

/// Accepts "12", "-3/4", "0.01", "1e-9", "2.5E3" and "2^-40".
Rat parse_rat(std::string_view text);

Int floor(const Rat& x);
Int ceil(const Rat& x);

/// 2^e for any integer e.
Rat pow2(long e);

enum class Rounding { Down, Up };

/// One-sided best rational approximation with denominator <= max_den,
/// found by a Stern-Brocot (continued fraction) descent. The result is
/// <= x for Rounding::Down and >= x for Rounding::Up; x itself is returned
/// when its denominator already fits.
Rat round_to_denominator(const Rat& x, const Int& max_den, Rounding dir);

/// Exact square root when both numerator and denominator are squares.
std::optional<Rat> exact_sqrt(const Rat& x);

}  // namespace hgap
