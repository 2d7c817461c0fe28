#include "mmp/rational.hpp"

#include <cctype>

#include "mmp/error.hpp"

namespace mmp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::EmptyFeasible: return "EmptyFeasible";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DifferentFields: return "DifferentFields";
    case ErrorCode::NotSquareFree: return "NotSquareFree";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidFan: return "InvalidFan";
    case ErrorCode::NonIntegralDivisor: return "NonIntegralDivisor";
    case ErrorCode::EmptyLinearSystem: return "EmptyLinearSystem";
    case ErrorCode::OutsideSupport: return "OutsideSupport";
    case ErrorCode::NotKlt: return "NotKlt";
    case ErrorCode::NonEffective: return "NonEffective";
    case ErrorCode::NotCartier: return "NotCartier";
    case ErrorCode::NotNefBig: return "NotNefBig";
    case ErrorCode::AlreadyNef: return "AlreadyNef";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotExtremal: return "NotExtremal";
    case ErrorCode::NotNegative: return "NotNegative";
    case ErrorCode::NotFlipping: return "NotFlipping";
    case ErrorCode::FlipVerificationFailed: return "FlipVerificationFailed";
    case ErrorCode::ContractionFailed: return "ContractionFailed";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::ClaimViolation: return "ClaimViolation";
    case ErrorCode::InsufficientHorizon: return "InsufficientHorizon";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::SNotIrreducible: return "SNotIrreducible";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::InvalidInput, "integer out of 64-bit range: " + v.get_str());
  return v.get_si();
}

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::InvalidInput, "not an exact rational: '" + s + "'");
  return Rat(Int(num), Int(den));
}

Int Rat::floor() const {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Int Rat::ceil() const {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rat(mpq_class(1 / q_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace mmp
