#include "planeproj/rational.hpp"

#include <cmath>

#include "planeproj/error.hpp"

namespace planeproj {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateInput: return "DEGENERATE_INPUT";
    case ErrorCode::kTooLargeForExact: return "TOO_LARGE_FOR_EXACT";
    case ErrorCode::kBadPlane: return "BAD_PLANE";
    case ErrorCode::kNotVerified: return "NOT_VERIFIED";
    case ErrorCode::kTiedCoordinates: return "TIED_COORDINATES";
    case ErrorCode::kConstructionFailed: return "CONSTRUCTION_FAILED";
    case ErrorCode::kNotACaterpillar: return "NOT_A_CATERPILLAR";
    case ErrorCode::kFailedHeuristic: return "FAILED_HEURISTIC";
    case ErrorCode::kBadDecomposition: return "BAD_DECOMPOSITION";
    case ErrorCode::kBadPlanarInput: return "BAD_PLANAR_INPUT";
    case ErrorCode::kBadLayer: return "BAD_LAYER";
    case ErrorCode::kNotPlanar: return "NOT_PLANAR";
    case ErrorCode::kBadInput: return "BAD_INPUT";
    case ErrorCode::kParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kBadInput, "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

std::optional<Rational> Rational::from_canonical(const std::string& num, const std::string& den) {
  mpz_class n;
  mpz_class d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) return std::nullopt;
  if (d <= 0) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational r;
  r.value_ = mpq_class(n, d);
  return r;
}

Rational Rational::dyadic_approx(long double value, int bits) {
  if (bits < 0 || bits > 60) throw Error(ErrorCode::kBadInput, "dyadic precision out of range");
  const long double scaled = std::ldexp(value, bits);
  const long long rounded = std::llroundl(scaled);
  mpz_class den = 1;
  den <<= bits;
  return Rational(mpq_class(mpz_class(static_cast<long>(rounded)), den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw Error(ErrorCode::kBadInput, "division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace planeproj
