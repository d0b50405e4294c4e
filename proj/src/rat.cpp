#include "hgap/rat.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "hgap/error.hpp"

namespace hgap {

std::string_view name(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateRoot: return "DuplicateRoot";
    case Errc::NotSquareFree: return "NotSquareFree";
    case Errc::NotEven: return "NotEven";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotEnoughSums: return "NotEnoughSums";
    case Errc::NotRealRooted: return "NotRealRooted";
    case Errc::InconsistentRank: return "InconsistentRank";
    case Errc::MultiplicityUnresolved: return "MultiplicityUnresolved";
    case Errc::SingularHankel: return "SingularHankel";
    case Errc::TooFewRoots: return "TooFewRoots";
    case Errc::PoleHit: return "PoleHit";
    case Errc::ZeroEpsilon: return "ZeroEpsilon";
    case Errc::NegativeRadicand: return "NegativeRadicand";
    case Errc::BadDegree: return "BadDegree";
    case Errc::BadEpsilon: return "BadEpsilon";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Rat ratio(const Int& num, const Int& den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_display(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return to_string(x);
}

double to_double(const Rat& x) { return x.get_d(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(Errc::ParseError, "malformed rational: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
           return std::isdigit(static_cast<unsigned char>(c));
         });
}

Int parse_int(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad(whole);
  Int v(std::string(s), 10);
  return neg ? Int(-v) : v;
}

long parse_long(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) bad(whole);
  return v;
}

Rat pow10(long e) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rat(Int(1), p) : Rat(p);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) bad(text);

  if (auto caret = s.find('^'); caret != std::string_view::npos) {
    Int base = parse_int(s.substr(0, caret), text);
    long e = parse_long(s.substr(caret + 1), text);
    if (base == 0 && e < 0) bad(text);
    Int p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    Rat r = e < 0 ? Rat(Int(1), p) : Rat(p);
    r.canonicalize();
    return r;
  }

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Int num = parse_int(s.substr(0, slash), text);
    Int den = parse_int(s.substr(slash + 1), text);
    if (den == 0) bad(text);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  std::string_view mant = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mant = s.substr(0, e);
    exponent = parse_long(s.substr(e + 1), text);
  }
  bool neg = false;
  if (!mant.empty() && (mant.front() == '-' || mant.front() == '+')) {
    neg = mant.front() == '-';
    mant.remove_prefix(1);
  }
  std::string digits;
  long frac = 0;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mant.substr(0, dot);
    std::string_view fp = mant.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      bad(text);
    digits = std::string(ip) + std::string(fp);
    frac = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mant)) bad(text);
    digits = std::string(mant);
  }
  Rat r(Int(digits, 10));
  r *= pow10(exponent - frac);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

Int floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int ceil(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rat pow2(long e) {
  Int p(1);
  p <<= static_cast<mp_bitcnt_t>(e < 0 ? -e : e);
  return e < 0 ? Rat(Int(1), p) : Rat(p);
}

Rat round_to_denominator(const Rat& x, const Int& max_den, Rounding dir) {
  if (x.get_den() <= max_den) return x;
  // Invariant: a/b <= x < c/d, both neighbours in the Stern-Brocot tree.
  Int a = floor(x), b = 1, c = a + 1, d = 1;
  for (;;) {
    bool moved = false;

    Rat gap_lo = x * Rat(b) - Rat(a);
    Rat gap_hi = Rat(c) - x * Rat(d);
    if (gap_lo == 0) break;
    Int k = floor(gap_lo / gap_hi);
    Int cap = (max_den - b) / d;
    if (k > cap) k = cap;
    if (k > 0) {
      a += k * c;
      b += k * d;
      moved = true;
    }

    gap_lo = x * Rat(b) - Rat(a);
    gap_hi = Rat(c) - x * Rat(d);
    if (gap_lo == 0) break;
    k = ceil(gap_hi / gap_lo) - 1;
    cap = (max_den - d) / b;
    if (k > cap) k = cap;
    if (k > 0) {
      c += k * a;
      d += k * b;
      moved = true;
    }
    if (!moved) break;
  }
  Rat lo(a, b), hi(c, d);
  lo.canonicalize();
  hi.canonicalize();
  if (lo == x) return x;
  return dir == Rounding::Down ? lo : hi;
}

std::optional<Rat> exact_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(x.get_den_mpz_t()) == 0)
    return std::nullopt;
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  return Rat(n, d);
}

}  // namespace hgap
