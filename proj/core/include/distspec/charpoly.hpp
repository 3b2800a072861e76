#ifndef DISTSPEC_CHARPOLY_HPP
#define DISTSPEC_CHARPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "distspec/distance.hpp"
#include "distspec/graph.hpp"

namespace distspec {

using BigInt = boost::multiprecision::cpp_int;

/// Exact characteristic polynomial det(lambda I - D) of an integer symmetric
/// matrix, stored as coefficients c_0..c_n in ascending degree, monic.
struct CharPoly {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const CharPoly& other) const { return coeffs == other.coeffs; }

    /// "c0,c1,...,cn" in decimal; a stable grouping key.
    std::string decimal_key() const;
};

/// Faddeev-LeVerrier over arbitrary-precision integers. Every internal
/// division is exact; a nonzero remainder indicates a bug and aborts via
/// std::logic_error.
CharPoly char_poly(const DistanceMatrix& d);

/// Same recurrence for an arbitrary square integer matrix (row-major).
CharPoly char_poly_matrix(int n, const std::vector<long long>& entries);

/// Exact spectral comparison: same order and coefficientwise-equal
/// characteristic polynomials of the distance matrices. Inputs must be
/// connected.
bool distance_cospectral(const Graph& g1, const Graph& g2);

/// Multiplicity of the integer root r in p (0 when r is not a root).
int root_multiplicity_at_integer(const CharPoly& p, long long r);

/// Multiplicity of -1/2 as a root of p. For a monic integer polynomial this
/// is always 0, but the paper-facing checks ask for it explicitly.
int root_multiplicity_at_neg_half(const CharPoly& p);

}  // namespace distspec

#endif
