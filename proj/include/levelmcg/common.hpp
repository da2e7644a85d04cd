#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace levelmcg {

using BigInt = boost::multiprecision::cpp_int;
using Rng = std::mt19937_64;

// Base of the library's error hierarchy.  Every failure mode that callers are
// expected to catch has its own type below.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenusMismatch : Error {
  explicit GenusMismatch(const std::string& m = "operands have different genus") : Error(m) {}
};
struct NotSymplectic : Error {
  explicit NotSymplectic(const std::string& m = "matrix does not preserve the symplectic form") : Error(m) {}
};
struct NotInLevel : Error {
  explicit NotInLevel(const std::string& m = "matrix is not congruent to the identity at this level") : Error(m) {}
};
struct NotInIgusa : Error {
  explicit NotInIgusa(const std::string& m = "matrix fails the even-diagonal refinement at this level") : Error(m) {}
};
struct OddLevelIgusa : Error {
  explicit OddLevelIgusa(const std::string& m = "even-diagonal refinement requires an even level") : Error(m) {}
};
struct NonOrthogonal : Error {
  explicit NonOrthogonal(const std::string& m = "vectors are not orthogonal under the symplectic form") : Error(m) {}
};
struct SizeLimit : Error {
  explicit SizeLimit(const std::string& m = "requested genus exceeds the size guard") : Error(m) {}
};
struct ZeroClass : Error {
  explicit ZeroClass(const std::string& m = "operation requires a nonzero homology class") : Error(m) {}
};
struct DegenerateEnhancement : Error {
  explicit DegenerateEnhancement(const std::string& m = "Gauss sum carries no eighth-root phase") : Error(m) {}
};
struct DegreeOverflow : Error {
  explicit DegreeOverflow(const std::string& m = "product leaves the degree-3 truncation") : Error(m) {}
};
struct NotInKernel : Error {
  explicit NotInKernel(const std::string& m = "word abelianization is nonzero at this modulus") : Error(m) {}
};
struct NotIA : Error {
  explicit NotIA(const std::string& m = "endomorphism does not act trivially on mod-d homology") : Error(m) {}
};
struct EvenModulus : Error {
  explicit EvenModulus(const std::string& m = "operation requires an odd modulus") : Error(m) {}
};

inline BigInt binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

inline long long binom_ll(long long n, long long k) { return static_cast<long long>(binom(n, k)); }

inline BigInt pow2(long long e) {
  BigInt r = 1;
  return r << e;
}

// Euclidean remainder in [0, m).
inline BigInt emod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

inline long long emod_ll(long long a, long long m) {
  long long r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace levelmcg
