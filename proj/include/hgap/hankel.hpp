#pragma once

#include <span>
#include <vector>

#include "hgap/enclosure.hpp"
#include "hgap/linalg.hpp"
#include "hgap/poly.hpp"

namespace hgap {

/// Power sums t_k = sum_l r_l p_l^k of the roots counted with multiplicity.
struct PowerSums {
  std::vector<Rat> t;
  unsigned n = 0;  // t[0]; the total degree
};

/// Newton's identities on the monic normalisation of p.
PowerSums power_sums_from_coeffs(const Poly& p, std::size_t count);

/// t_k = trace(A^k) for a real symmetric rational matrix.
PowerSums power_sums_from_hermitian(const Matrix& a, std::size_t count);

/// Real symmetric embedding [[Re, -Im], [Im, Re]] of the complex Hermitian
/// matrix Re + i Im. Its spectrum is that of the input with every
/// multiplicity doubled.
Matrix embed_complex_hermitian(const Matrix& re, const Matrix& im);

/// Power sums of Re + i Im computed through the embedding, halved so that
/// multiplicities refer to the original n x n matrix.
PowerSums power_sums_from_complex_hermitian(const Matrix& re, const Matrix& im,
                                            std::size_t count);

/// Monic degree-n polynomial whose roots have the given power sums
/// (inverse Newton identities, uses t_1..t_n).
Poly poly_from_power_sums(const PowerSums& sums, unsigned n);

/// H_k = [t_{i+j}], 0 <= i, j < k.
Matrix hankel_matrix(const PowerSums& sums, std::size_t k);

/// [D_1, ..., D_n] with D_k = det H_k.
std::vector<Rat> hankel_determinants(const PowerSums& sums, std::size_t n);

/// Number of distinct roots certified from the determinant sign pattern:
/// D_k > 0 up to m, D_k == 0 afterwards. Anything else means the input has
/// non-real roots and raises NotRealRooted.
unsigned distinct_root_count(std::span<const Rat> dets);

struct MinimalPolynomial {
  Poly poly;               // monic, degree m
  std::vector<Rat> sigma;  // sigma_1..sigma_m, elementary symmetric functions
};

/// Expands the bordered Hankel determinant
///   det [ H_m  t^T ; 1 x .. x^m ] / D_m
/// along its last row. Each coefficient is a signed m x m minor over D_m,
/// and sigma_k is the minor with column m-k removed, over D_m.
MinimalPolynomial minimal_polynomial(const PowerSums& sums, unsigned m);

struct HankelReport {
  PowerSums sums;
  std::vector<Rat> dets;
  unsigned m = 0;
  Poly minimal;
  std::vector<Rat> sigma;
  Poly characteristic;  // the input polynomial, or the one rebuilt from traces
};

/// Full ladder for a polynomial with real roots. The Hankel minimal
/// polynomial is checked against the square-free part of the input;
/// disagreement raises InternalInvariant.
HankelReport analyze_polynomial(const Poly& p);

/// Same, starting from 2n power sums (matrix input).
HankelReport analyze_power_sums(const PowerSums& sums);

struct MultiplicityResult {
  unsigned multiplicity = 0;
  Rat point;       // where the quadratic form was evaluated
  Rat reciprocal;  // <p H^{-1} p^T> at that point
  RootEnclosure enclosure;
};

/// Evaluates r^{-1} = <p H_m^{-1} p^T> with p = [1, x, .., x^{m-1}] at a
/// rational point of the enclosure and rounds to the nearest positive
/// integer. The enclosure is bisected on the sign of `minimal` until the
/// value is within tol of 1/r; MultiplicityUnresolved after max_refinements.
MultiplicityResult multiplicity(const RootEnclosure& enclosure, const Poly& minimal,
                                const Matrix& hm, const Rat& tol,
                                unsigned max_refinements = 256);

/// <p_i H^{-1} p_j^T>; equals delta_ij / r_i at exact distinct roots.
Rat gram_orthogonality(const Rat& pi, const Rat& pj, const Matrix& hm);

}  // namespace hgap
