#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgap {

enum class Errc {
  DuplicateRoot,
  NotSquareFree,
  NotEven,
  ZeroPolynomial,
  NotHermitian,
  NotEnoughSums,
  NotRealRooted,
  InconsistentRank,
  MultiplicityUnresolved,
  SingularHankel,
  TooFewRoots,
  PoleHit,
  ZeroEpsilon,
  NegativeRadicand,
  BadDegree,
  BadEpsilon,
  InvalidArgument,
  ParseError,
  InternalInvariant,
};

std::string_view name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hgap
