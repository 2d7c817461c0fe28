#include "mmp/strip.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mmp/error.hpp"
#include "mmp/pair.hpp"

namespace mmp {

Poly2 Poly2::constant(const Rat& c) { return monomial(c, 0, 0); }

Poly2 Poly2::monomial(const Rat& c, int i, int j) {
  Poly2 p;
  p.add_term({i, j}, c);
  return p;
}

Poly2 Poly2::linear(const Rat& ax, const Rat& by, const Rat& c) {
  Poly2 p;
  p.add_term({1, 0}, ax);
  p.add_term({0, 1}, by);
  p.add_term({0, 0}, c);
  return p;
}

void Poly2::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Poly2::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
  return d;
}

Rat Poly2::eval(const Rat& x, const Rat& y) const {
  Rat s(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int k = 0; k < m.first; ++k) t *= x;
    for (int k = 0; k < m.second; ++k) t *= y;
    s += t;
  }
  return s;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 p;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return p;
}

std::optional<Poly2> Poly2::divide_linear(const Rat& ax, const Rat& by, const Rat& c) const {
  if (ax.is_zero() && by.is_zero()) throw Error(ErrorCode::DivisionByZero, "divisor is constant");
  // Long division in the variable with a nonzero linear coefficient; the
  // leading term in that variable must always be reducible.
  const bool in_x = !ax.is_zero();
  const Rat lead = in_x ? ax : by;
  const Poly2 divisor = linear(ax, by, c);
  Poly2 rest = *this;
  Poly2 quotient;
  auto key = [in_x](const Monomial& m) { return in_x ? m : Monomial{m.second, m.first}; };
  while (!rest.is_zero()) {
    auto top = rest.terms_.begin();
    for (auto it = rest.terms_.begin(); it != rest.terms_.end(); ++it)
      if (key(it->first) > key(top->first)) top = it;
    const auto [i, j] = top->first;
    if ((in_x ? i : j) == 0) return std::nullopt;
    const Poly2 q = monomial(top->second / lead, in_x ? i - 1 : i, in_x ? j : j - 1);
    quotient += q;
    rest -= q * divisor;
  }
  return quotient;
}

std::string Poly2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool constant = m.first == 0 && m.second == 0;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    const Rat mag = c.abs();
    if (constant || mag != Rat(1)) os << mag << (constant ? "" : "*");
    if (m.first) os << "x" << (m.first > 1 ? "^" + std::to_string(m.first) : "");
    if (m.first && m.second) os << "*";
    if (m.second) os << "y" << (m.second > 1 ? "^" + std::to_string(m.second) : "");
  }
  return os.str();
}

LinearFactor LinearFactor::normalized(Int x, Int y, Int c) {
  Int g = gcd(gcd(x, y), c);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "zero linear form");
  if (x < 0 || (x == 0 && y < 0)) g = -g;
  return {Int(x / g), Int(y / g), Int(c / g), 1};
}

Poly2 LinearFactor::poly() const { return Poly2::linear(Rat(x), Rat(y), Rat(c)); }

std::string LinearFactor::str() const { return poly().str(); }

std::string_view to_string(StripOutcome o) {
  switch (o) {
    case StripOutcome::EmptyStrip: return "empty-strip";
    case StripOutcome::NotVanishing: return "not-vanishing";
    case StripOutcome::Factored: return "factored";
    case StripOutcome::InsufficientEvidence: return "insufficient-evidence";
  }
  return "?";
}

namespace {

// 0 <= a y - r x < eps
bool in_strip(const Int& a, const Slope& r, const Rat& eps, std::int64_t x, std::int64_t y) {
  const Rat ay = Rat(Int(a * Int(static_cast<long>(y))));
  const Rat rx_scale(static_cast<long long>(x));
  if (const Rat* q = std::get_if<Rat>(&r)) {
    const Rat t = ay - *q * rx_scale;
    return t.sign() >= 0 && t < eps;
  }
  const QuadReal t = QuadReal(ay) - std::get<QuadReal>(r) * QuadReal(rx_scale);
  return t.sign() >= 0 && (t - QuadReal(eps)).sign() < 0;
}

int multiplicity(Poly2 p, const LinearFactor& f) {
  int m = 0;
  while (!p.is_zero()) {
    auto q = p.divide_linear(Rat(f.x), Rat(f.y), Rat(f.c));
    if (!q) break;
    p = std::move(*q);
    ++m;
  }
  return m;
}

}  // namespace

StripVerdict strip_vanishing_verify(const Poly2& p, int n, const Int& a, const Slope& r, const Rat& eps,
                                    std::int64_t bound_n) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidInput, "the polynomial must be non-trivial");
  if (p.degree() > n) throw Error(ErrorCode::DegreeMismatch, "polynomial degree exceeds n");
  if (a <= 0 || eps.sign() <= 0 || bound_n < 0) throw Error(ErrorCode::InvalidInput, "need a > 0, eps > 0, N >= 0");

  StripVerdict out;
  out.bound = rationality_bound(a, Int(n), eps);
  if (const Rat* q = std::get_if<Rat>(&r)) out.bound_ok = Rat(q->den()) <= out.bound;

  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  for (std::int64_t x = 0; x <= bound_n; ++x)
    for (std::int64_t y = 0; y <= bound_n; ++y)
      if (in_strip(a, r, eps, x, y)) points.emplace_back(x, y);
  out.points = points.size();
  if (points.empty()) return out;

  for (const auto& [x, y] : points)
    if (!p.eval(Rat(static_cast<long long>(x)), Rat(static_cast<long long>(y))).is_zero()) {
      out.outcome = StripOutcome::NotVanishing;
      out.witness.emplace(x, y);
      return out;
    }

  // Lines that carry the strip points.
  std::vector<LinearFactor> candidates;
  std::set<std::tuple<Int, Int, Int>> seen;
  for (const auto& [x, y] : points) {
    const Int X(static_cast<long>(x)), Y(static_cast<long>(y));
    LinearFactor f;
    if (const Rat* q = std::get_if<Rat>(&r)) {
      // a v y - u x = c
      const Int c = a * q->den() * Y - q->num() * X;
      f = LinearFactor::normalized(q->num(), Int(-a * q->den()), c);
    } else {
      if (x == 0 && y == 0) continue;
      f = LinearFactor::normalized(Y, Int(-X), Int(0));
    }
    if (seen.insert({f.x, f.y, f.c}).second) candidates.push_back(f);
  }

  bool all = !candidates.empty();
  for (auto& f : candidates) {
    f.multiplicity = multiplicity(p, f);
    if (f.multiplicity > 0)
      out.factors.push_back(f);
    else
      all = false;
  }
  out.outcome = all ? StripOutcome::Factored : StripOutcome::InsufficientEvidence;
  return out;
}

}  // namespace mmp
