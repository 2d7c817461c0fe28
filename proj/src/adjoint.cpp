#include "mmp/adjoint.hpp"

#include <algorithm>

#include "mmp/error.hpp"

namespace mmp {

std::vector<Int> truncate(const std::vector<Int>& dims, std::size_t i) {
  if (i == 0) throw Error(ErrorCode::InvalidInput, "truncation index must be positive");
  std::vector<Int> out;
  for (std::size_t n = 0; n < dims.size(); n += i) out.push_back(dims[n]);
  return out;
}

CharacteristicSequence CharacteristicSequence::from_divisor(const Fan& fan, const TorusDivisor& l,
                                                            std::size_t horizon) {
  if (l.size() != fan.num_rays()) throw Error(ErrorCode::DimensionMismatch, "divisor does not match fan");
  CharacteristicSequence seq;
  seq.fan_ = fan;
  seq.dims_.push_back(Int(1));
  for (std::size_t m = 1; m <= horizon; ++m) {
    const TorusDivisor dm = (Rat(static_cast<long long>(m)) * l).floor();
    const std::size_t h = h0(fan, dm);
    seq.dims_.push_back(Int(static_cast<unsigned long>(h)));
    if (h == 0)
      seq.mobile_.emplace_back(std::nullopt);
    else
      seq.mobile_.emplace_back(mob_fix(fan, dm).mob);
  }
  return seq;
}

CharacteristicSequence CharacteristicSequence::from_pair(const ToricPair& pair, const Int& i, std::size_t horizon) {
  if (i <= 0) throw Error(ErrorCode::InvalidInput, "I must be positive");
  return from_divisor(pair.fan(), Rat(i) * pair.log_canonical(), horizon);
}

CharacteristicSequence CharacteristicSequence::from_mobile(const Fan& fan,
                                                           std::vector<std::optional<TorusDivisor>> mobile) {
  CharacteristicSequence seq;
  seq.fan_ = fan;
  seq.dims_.push_back(Int(1));
  for (const auto& m : mobile) {
    if (!m) {
      seq.dims_.push_back(Int(0));
      continue;
    }
    if (m->size() != fan.num_rays()) throw Error(ErrorCode::DimensionMismatch, "divisor does not match fan");
    if (!m->is_integral()) throw Error(ErrorCode::NonIntegralDivisor, "mobile parts are integral");
    seq.dims_.push_back(Int(static_cast<unsigned long>(h0(fan, *m))));
  }
  seq.mobile_ = std::move(mobile);
  return seq;
}

std::optional<TorusDivisor> CharacteristicSequence::characteristic(std::size_t m) const {
  const auto& mm = mobile(m);
  if (!mm) return std::nullopt;
  return Rat(1, static_cast<long>(m)) * *mm;
}

Int CharacteristicSequence::dimension(std::size_t m) const { return dims_.at(m); }

StabilizationVerdict fg_test_stabilization(const CharacteristicSequence& seq, std::size_t horizon) {
  const std::size_t h = std::min(horizon, seq.horizon());
  StabilizationVerdict out{std::nullopt, horizon};
  for (std::size_t i = 1; 2 * i <= h; ++i) {
    const auto& mi = seq.mobile(i);
    bool stable = true;
    for (std::size_t k = 2; i * k <= h && stable; ++k) {
      const auto& mik = seq.mobile(i * k);
      if (mi.has_value() != mik.has_value())
        stable = false;
      else if (mi)
        stable = *mik == Rat(static_cast<long long>(k)) * *mi;
    }
    if (stable) {
      out.witness = i;
      break;
    }
  }
  return out;
}

RestrictedAlgebraTable restricted_dims(const Fan& fan, const TorusDivisor& d, std::size_t s, std::size_t horizon) {
  if (s >= fan.num_rays()) throw Error(ErrorCode::InvalidInput, "S is not a ray of the fan");
  const TorusDivisor sd = TorusDivisor::prime(fan.num_rays(), s);
  RestrictedAlgebraTable out;
  for (std::size_t n = 0; n <= horizon; ++n) {
    const TorusDivisor dn = (Rat(static_cast<long long>(n)) * d).floor();
    const std::size_t all = h0(fan, dn);
    const std::size_t vanishing = h0(fan, dn - sd);
    out.dims.push_back(Int(static_cast<unsigned long>(all - vanishing)));
    if (all > 0 && all == vanishing) out.s_in_fixed_locus.push_back(n);
  }
  return out;
}

RestrictedAlgebraTable restricted_dims(const ToricPair& pair, const Int& i, std::size_t horizon) {
  std::vector<std::size_t> reduced;
  for (std::size_t k = 0; k < pair.fan().num_rays(); ++k) {
    if (pair.boundary()[k] > Rat(1)) throw Error(ErrorCode::InvalidInput, "Delta is not a boundary");
    if (pair.boundary()[k] == Rat(1)) reduced.push_back(k);
  }
  if (reduced.size() != 1) throw Error(ErrorCode::SNotIrreducible, "floor(Delta) must be one prime divisor");
  if (i <= 0) throw Error(ErrorCode::InvalidInput, "I must be positive");
  return restricted_dims(pair.fan(), Rat(i) * pair.log_canonical(), reduced.front(), horizon);
}

AdjointSequenceA1 AdjointSequenceA1::make(Rat b, std::vector<Rat> d, RealNumber limit) {
  if (b.sign() < 0 || b >= Rat(1)) throw Error(ErrorCode::InvalidSequence, "b must lie in [0, 1)");
  const QuadReal lim = as_quad(limit);
  const std::size_t n = d.size();
  for (std::size_t i = 1; i <= n; ++i) {
    const Rat& di = d[i - 1];
    if (di.sign() < 0) throw Error(ErrorCode::InvalidSequence, "d_" + std::to_string(i) + " is negative");
    if (QuadReal(di) > lim) throw Error(ErrorCode::InvalidSequence, "d_" + std::to_string(i) + " exceeds the limit");
    for (std::size_t j = 1; i + j <= n; ++j) {
      const Rat lhs = Rat(static_cast<long long>(i + j)) * d[i + j - 1];
      const Rat rhs = Rat(static_cast<long long>(i)) * di + Rat(static_cast<long long>(j)) * d[j - 1];
      if (lhs < rhs)
        throw Error(ErrorCode::InvalidSequence,
                    "concavity fails at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  return AdjointSequenceA1{std::move(b), std::move(d), std::move(limit)};
}

Int AdjointSequenceA1::q() const { return (Rat(1) / (Rat(1) - b)).floor(); }

namespace {

SaturationVerdict finite_form(const AdjointSequenceA1& seq) {
  const std::size_t n = seq.horizon();
  for (std::size_t j = 1; j <= n; ++j) {
    const Rat jj(static_cast<long long>(j));
    for (std::size_t i = j; i <= n; ++i)
      if (Rat((jj * seq.at(i) - seq.b).ceil()) > jj * seq.at(j)) return {false, i, j, false};
  }
  return {};
}

// ceil(j d - b) <= j d_j
SaturationVerdict limit_form(const AdjointSequenceA1& seq) {
  const QuadReal d = as_quad(seq.limit);
  for (std::size_t j = 1; j <= seq.horizon(); ++j) {
    const Rat jj(static_cast<long long>(j));
    if (Rat((QuadReal(jj) * d - QuadReal(seq.b)).ceil()) > jj * seq.at(j)) return {false, 0, j, true};
  }
  return {};
}

}  // namespace

SaturationVerdict saturation_check_a1(const AdjointSequenceA1& seq) {
  const SaturationVerdict f = finite_form(seq);
  if (!f.saturated) return f;
  return limit_form(seq);
}

std::variant<A1Generation, RationalityRefutation> fg_a1(const AdjointSequenceA1& seq) {
  if (const auto f = finite_form(seq); !f.saturated)
    throw Error(ErrorCode::NotSaturated,
                "saturation fails at (i, j) = (" + std::to_string(f.i) + ", " + std::to_string(f.j) + ")");
  const Int q = seq.q();

  if (is_irrational(seq.limit)) {
    // The least j with {j d} > b; a convergent denominator bounds the scan.
    const QuadReal d = std::get<QuadReal>(seq.limit);
    const QuadReal b(seq.b);
    Int bound = 0;
    for (const auto& k : convergent_denominators(d, 256))
      if ((QuadReal(Rat(k)) * d).frac() > b) {
        bound = k;
        break;
      }
    if (bound == 0) throw Error(ErrorCode::InsufficientHorizon, "no j with {jd} > b among the convergents");
    for (Int j = 1; j <= bound; ++j) {
      const QuadReal f = (QuadReal(Rat(j)) * d).frac();
      if (f > b) return RationalityRefutation{j, f};
    }
  }

  const Rat d = as_quad(seq.limit).a();
  if (const auto l = limit_form(seq); !l.saturated)
    throw Error(ErrorCode::NotSaturated, "limit saturation fails at j = " + std::to_string(l.j));
  const Int u = d.num();
  const Int v = d.den();
  Int fact;
  if (q > Int(100000)) throw Error(ErrorCode::InvalidInput, "b too close to 1");
  mpz_fac_ui(fact.get_mpz_t(), q.get_ui());
  if (fact % v != 0) throw Error(ErrorCode::ClaimViolation, "denominator does not divide q!");
  if (v > Int(static_cast<unsigned long>(seq.horizon())))
    throw Error(ErrorCode::InsufficientHorizon, "the table stops before degree v");
  const std::size_t vv = v.get_ui();
  for (std::size_t k = vv; k <= seq.horizon(); k += vv)
    if (seq.at(k) != d) throw Error(ErrorCode::ClaimViolation, "d_" + std::to_string(k) + " differs from d");
  return A1Generation{v, u, q, vv, "R^(" + v.get_str() + ") = R(A^1, " + u.get_str() + "P)"};
}

SaturationVerdict saturation_check_toric(const CharacteristicSequence& seq, const TorusDivisor& f,
                                         std::size_t horizon) {
  const Fan& fan = seq.fan();
  if (f.size() != fan.num_rays()) throw Error(ErrorCode::DimensionMismatch, "F does not match fan");
  if (!f.ceil().is_effective()) throw Error(ErrorCode::InvalidInput, "ceil(F) must be effective");
  const std::size_t h = std::min(horizon, seq.horizon());
  for (std::size_t j = 1; j <= h; ++j) {
    const auto& mj = seq.mobile(j);
    for (std::size_t i = j; i <= h; ++i) {
      const auto di = seq.characteristic(i);
      if (!di) continue;
      const TorusDivisor x = (Rat(static_cast<long long>(j)) * *di + f).ceil();
      if (h0(fan, x) == 0) continue;
      const TorusDivisor mob = mob_fix(fan, x).mob;
      if (!mj || !(mob <= *mj)) return {false, i, j, false};
    }
  }
  return {};
}

Fg6Verdict fg6_pipeline(const CharacteristicSequence& seq, const TorusDivisor& f,
                        const std::optional<std::vector<RealNumber>>& limit, const Int& search_cap) {
  const Fan& fan = seq.fan();
  const std::size_t h = seq.horizon();
  if (const auto s = saturation_check_toric(seq, f, h); !s.saturated)
    throw Error(ErrorCode::NotSaturated,
                "saturation fails at (i, j) = (" + std::to_string(s.i) + ", " + std::to_string(s.j) + ")");

  std::vector<RealNumber> lim;
  if (limit) {
    if (limit->size() != fan.num_rays()) throw Error(ErrorCode::DimensionMismatch, "limit does not match fan");
    lim = *limit;
  } else {
    const auto w = fg_test_stabilization(seq, h);
    if (!w.witness) return Inconclusive{h, "no stabilization witness"};
    const auto d = seq.characteristic(*w.witness);
    if (!d) return Inconclusive{h, "stabilized degree has no sections"};
    for (const auto& x : d->coeffs()) lim.emplace_back(x);
  }

  if (std::any_of(lim.begin(), lim.end(), [](const RealNumber& x) { return is_irrational(x); })) {
    Rat eps(1, 10);
    for (const auto& x : f.coeffs()) eps = min(eps, (x + Rat(1)) / Rat(2));
    std::vector<std::vector<Int>> e(lim.size(), std::vector<Int>(lim.size(), Int(0)));
    for (std::size_t k = 0; k < lim.size(); ++k) e[k][k] = 1;
    const auto res = approximate(ApproxInstance::make(std::move(e), lim, eps), search_cap);
    if (const auto* c = std::get_if<ApproxCertificate>(&res)) return *c;
    return Inconclusive{h, "no approximation certificate up to the search cap"};
  }

  RatVec coeffs;
  for (const auto& x : lim) coeffs.push_back(std::get<Rat>(x));
  const TorusDivisor d(std::move(coeffs));
  const Int den = d.denominator();
  if (den > Int(static_cast<unsigned long>(h))) return Inconclusive{h, "limit denominator beyond the horizon"};
  const std::size_t j0 = den.get_ui();
  for (std::size_t j = j0; j <= h; j += j0) {
    const TorusDivisor jd = Rat(static_cast<long long>(j)) * d;
    const auto& mj = seq.mobile(j);
    if (!mj || *mj != jd) continue;
    if (h0(fan, jd) == 0 || mob_fix(fan, jd).mob != jd) continue;
    return FGCertificate{j, d};
  }
  return Inconclusive{h, "no degree within the horizon where D_j reaches the limit"};
}

}  // namespace mmp
