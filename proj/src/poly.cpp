#include "pblab/poly.hpp"

#include <algorithm>

namespace pblab {

void Poly::add_term(const Monomial& m, const Rational& c) {
  require(m.nvars() == nvars_, errc::nvars_mismatch, "term variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require(nvars_ == o.nvars_, errc::nvars_mismatch, "polynomial sum");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require(nvars_ == o.nvars_, errc::nvars_mismatch, "polynomial difference");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require(a.nvars_ == b.nvars_, errc::nvars_mismatch, "polynomial product");
  Poly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

Poly Poly::partial_derivative(int var) const {
  require(var >= 0 && var < nvars_, errc::index_out_of_range, "derivative variable index");
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(var);
    if (e == 0) continue;
    auto exps = m.exponents();
    exps[static_cast<size_t>(var)] = e - 1;
    r.add_term(Monomial(std::move(exps)), c * Rational(e));
  }
  return r;
}

std::vector<std::pair<int, Poly>> Poly::homogeneous_components() const {
  std::map<int, Poly> buckets;
  for (const auto& [m, c] : terms_) {
    auto [it, _] = buckets.try_emplace(m.total_degree(), Poly(nvars_));
    it->second.add_term(m, c);
  }
  std::vector<std::pair<int, Poly>> out;
  out.reserve(buckets.size());
  for (auto& [deg, p] : buckets) out.emplace_back(deg, std::move(p));
  return out;
}

Poly Poly::homogeneous_component(int deg) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.total_degree() == deg) r.add_term(m, c);
  return r;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.total_degree();
  return terms_.rbegin()->first.total_degree() == d;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  require(static_cast<int>(point.size()) == nvars_, errc::dimension_mismatch,
          "evaluation point dimension");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < nvars_; ++v)
      if (m.exponent(v) > 0) t *= pow(point[static_cast<size_t>(v)], m.exponent(v));
    total += t;
  }
  return total;
}

Poly Poly::compose(const std::vector<Poly>& args) const {
  require(static_cast<int>(args.size()) == nvars_, errc::dimension_mismatch,
          "composition argument count");
  int out_vars = args[0].nvars();
  for (const auto& a : args)
    require(a.nvars() == out_vars, errc::nvars_mismatch, "composition arguments");

  // Memoize argument powers; exponents at desk scale are small.
  std::vector<std::vector<Poly>> powers(args.size());
  auto arg_pow = [&](int v, int e) -> const Poly& {
    auto& cache = powers[static_cast<size_t>(v)];
    if (cache.empty()) cache.push_back(Poly::one(out_vars));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * args[static_cast<size_t>(v)]);
    return cache[static_cast<size_t>(e)];
  };

  Poly r(out_vars);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(out_vars, c);
    for (int v = 0; v < nvars_; ++v)
      if (m.exponent(v) > 0) t *= arg_pow(v, m.exponent(v));
    r += t;
  }
  return r;
}

Poly pow(const Poly& base, long e) {
  require(e >= 0, errc::invalid_parameters, "polynomial power must be >= 0");
  Poly acc = Poly::one(base.nvars());
  Poly b = base;
  long n = e;
  while (n > 0) {
    if (n & 1) acc *= b;
    if (n >>= 1) b *= b;
  }
  return acc;
}

std::optional<Poly> exact_divide(const Poly& divisor, const Poly& P) {
  require(!divisor.is_zero(), errc::zero_divisor, "exact division by zero polynomial");
  require(divisor.nvars() == P.nvars(), errc::nvars_mismatch, "exact division");
  Poly q(P.nvars());
  Poly r = P;
  const auto& [dm, dc] = divisor.leading_term();
  // Long division by a single divisor: in an integral domain with a term
  // order, divisor*Q = P forces LT(divisor) | LT(remainder) at every step.
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading_term();
    auto m = rm.divide(dm);
    if (!m) return std::nullopt;
    Rational c = rc / dc;
    Poly t = Poly::term(P.nvars(), *m, c);
    q += t;
    r -= t * divisor;
  }
  return q;
}

}  // namespace pblab
