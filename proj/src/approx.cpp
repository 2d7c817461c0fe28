#include "mmp/approx.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "mmp/error.hpp"

namespace mmp {

ApproxInstance ApproxInstance::make(std::vector<std::vector<Int>> e, std::vector<RealNumber> d, Rat eps) {
  ApproxInstance inst;
  if (d.empty()) throw Error(ErrorCode::InvalidInstance, "no divisors");
  if (e.empty()) throw Error(ErrorCode::InvalidInstance, "empty basis");
  for (const auto& row : e) {
    if (row.size() != d.size()) throw Error(ErrorCode::InvalidInstance, "E has the wrong number of columns");
    for (const auto& x : row)
      if (x < 0) throw Error(ErrorCode::InvalidInstance, "E must be nonnegative");
  }
  for (std::size_t k = 0; k < d.size(); ++k) {
    const bool nonzero = std::any_of(e.begin(), e.end(), [k](const auto& row) { return row[k] != 0; });
    if (!nonzero) throw Error(ErrorCode::InvalidInstance, "E has a zero column");
  }
  if (eps.sign() <= 0) throw Error(ErrorCode::InvalidInstance, "eps must be positive");
  bool irrational = false;
  for (const auto& x : d) {
    const QuadReal q = as_quad(x);
    if (q.sign() < 0) throw Error(ErrorCode::InvalidInstance, "coefficients must be nonnegative");
    if (q.is_rational()) continue;
    if (irrational && q.disc() != inst.disc_)
      throw Error(ErrorCode::InvalidInstance, "coefficients live in different quadratic fields");
    inst.disc_ = q.disc();
    irrational = true;
  }
  if (!irrational) throw Error(ErrorCode::InvalidInstance, "D is a Q-divisor");
  inst.e = std::move(e);
  inst.d = std::move(d);
  inst.eps = std::move(eps);
  return inst;
}

namespace {

std::vector<QuadReal> residual(const ApproxInstance& inst, const Int& j, const std::vector<Int>& m) {
  std::vector<QuadReal> diff;
  for (std::size_t k = 0; k < inst.l(); ++k) diff.push_back(QuadReal(Rat(j)) * as_quad(inst.d[k]) - QuadReal(Rat(m[k])));
  std::vector<QuadReal> out;
  for (const auto& row : inst.e) {
    QuadReal s;
    for (std::size_t k = 0; k < inst.l(); ++k)
      if (row[k] != 0) s = s + QuadReal(Rat(row[k])) * diff[k];
    out.push_back(s);
  }
  return out;
}

std::optional<ApproxCertificate> try_j(const ApproxInstance& inst, const Int& j) {
  std::vector<Int> base;
  for (const auto& x : inst.d) base.push_back((QuadReal(Rat(j)) * as_quad(x) + QuadReal(Rat(1, 2))).floor());
  const std::size_t l = inst.l();
  // Offsets 0, -1, +1 per coordinate, nearest first.
  static constexpr int kOffsets[3] = {0, -1, 1};
  std::vector<int> digit(l, 0);
  while (true) {
    std::vector<Int> m(l);
    bool ok = true;
    for (std::size_t k = 0; k < l; ++k) {
      m[k] = base[k] + kOffsets[digit[k]];
      ok = ok && m[k] >= 0;
    }
    if (ok) {
      ApproxCertificate cert{j, m, residual(inst, j, m), 0, false};
      if (verify(inst, cert)) {
        for (std::size_t i = 0; i < cert.residual.size(); ++i)
          if (cert.residual[i].sign() < 0) {
            cert.negative_index = i;
            break;
          }
        return cert;
      }
    }
    std::size_t k = 0;
    while (k < l && digit[k] == 2) digit[k++] = 0;
    if (k == l) return std::nullopt;
    ++digit[k];
  }
}

}  // namespace

bool verify(const ApproxInstance& inst, const ApproxCertificate& cert) {
  if (cert.j <= 0 || cert.m.size() != inst.l()) return false;
  if (std::any_of(cert.m.begin(), cert.m.end(), [](const Int& x) { return x < 0; })) return false;
  const auto r = residual(inst, cert.j, cert.m);
  const QuadReal eps(inst.eps);
  bool negative = false;
  for (const auto& x : r) {
    if (x >= eps || x <= -eps) return false;
    negative = negative || x.sign() < 0;
  }
  return negative;
}

std::variant<ApproxCertificate, NotFoundUpTo> approximate(const ApproxInstance& inst, const Int& cap) {
  std::set<Int> convergents;
  for (const auto& x : inst.d)
    if (is_irrational(x))
      for (const auto& q : convergent_denominators(std::get<QuadReal>(x), 64))
        if (q <= cap) convergents.insert(q);
  for (const auto& j : convergents)
    if (auto c = try_j(inst, j)) {
      c->from_convergent = true;
      return *c;
    }
  for (Int j = 1; j <= cap; ++j) {
    if (convergents.count(j)) continue;
    if (auto c = try_j(inst, j)) return *c;
  }
  return NotFoundUpTo{cap};
}

}  // namespace mmp
