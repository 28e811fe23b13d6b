#ifndef MUTWB_LAURENT_HPP
#define MUTWB_LAURENT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "integer.hpp"

namespace mutwb {

/// Exponent vector of a Laurent monomial; entries may be negative.
using Exponent = std::vector<int>;

/// Laurent polynomial in a fixed number of variables with integer
/// coefficients. Terms are kept in a map keyed by exponent vector, so the
/// representation is canonical: no zero coefficients are stored and the zero
/// polynomial is the empty map.
class LaurentPoly {
public:
  using TermMap = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Integer& c) {
    LaurentPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static LaurentPoly monomial(const Exponent& e, const Integer& c = 1) {
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
  }

  /// The i-th variable (0-based).
  static LaurentPoly variable(std::size_t nvars, std::size_t i) {
    Exponent e(nvars, 0);
    e.at(i) = 1;
    return monomial(e);
  }

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_monomial() const noexcept { return terms_.size() == 1; }

  void add_term(const Exponent& e, const Integer& c) {
    if (e.size() != nvars_)
      throw DomainError("exponent length does not match variable count");
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  /// Componentwise minimum of the exponents (zero vector for p = 0).
  Exponent min_exponent() const {
    if (terms_.empty())
      return Exponent(nvars_, 0);
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < nvars_; ++i)
        m[i] = std::min(m[i], e[i]);
    return m;
  }

  /// Multiplies by the monomial x^shift.
  LaurentPoly shifted(const Exponent& shift) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      for (std::size_t i = 0; i < nvars_; ++i)
        f[i] += shift[i];
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_)
      c = -c;
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& q) {
    check_same_ring(q);
    for (const auto& [e, c] : q.terms_)
      add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& q) {
    check_same_ring(q);
    for (const auto& [e, c] : q.terms_)
      add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) {
    return p += q;
  }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) {
    return p -= q;
  }

  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    p.check_same_ring(q);
    LaurentPoly out(p.nvars_);
    Exponent e(p.nvars_);
    for (const auto& [ep, cp] : p.terms_)
      for (const auto& [eq, cq] : q.terms_) {
        for (std::size_t i = 0; i < p.nvars_; ++i)
          e[i] = ep[i] + eq[i];
        out.add_term(e, cp * cq);
      }
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_)
      return a.nvars_ < b.nvars_;
    return a.terms_ < b.terms_;
  }

  std::size_t hash() const {
    std::size_t seed = nvars_;
    for (const auto& [e, c] : terms_) {
      for (int x : e)
        hash_combine(seed, std::hash<int>{}(x));
      hash_combine(seed, hash_integer(c));
    }
    return seed;
  }

  /// Human-readable form, e.g. "x1^-1 + x1^-1*x2".
  std::string to_string() const {
    if (terms_.empty())
      return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Integer coeff = c;
      if (!first)
        out += coeff < 0 ? " - " : " + ";
      else if (coeff < 0)
        out += "-";
      first = false;
      coeff = abs(coeff);
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0)
          continue;
        if (!mono.empty())
          mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (e[i] != 1)
          mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        out += coeff.str();
      else if (coeff == 1)
        out += mono;
      else
        out += coeff.str() + "*" + mono;
    }
    return out;
  }

private:
  void check_same_ring(const LaurentPoly& q) const {
    if (q.nvars_ != nvars_)
      throw DomainError("Laurent polynomials live in different rings");
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

inline LaurentPoly pow(const LaurentPoly& p, unsigned long exponent) {
  LaurentPoly result = LaurentPoly::constant(p.nvars(), 1);
  LaurentPoly base = p;
  while (exponent) {
    if (exponent & 1)
      result = result * base;
    exponent >>= 1;
    if (exponent)
      base = base * base;
  }
  return result;
}

namespace detail {

// Graded lexicographic order on exponent vectors.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db)
      return da < db;
    return a < b;
  }
};

// Exact division of ordinary polynomials (all exponents >= 0) by leading-term
// elimination under grlex.
inline LaurentPoly divide_polynomials(const LaurentPoly& num,
                                      const LaurentPoly& den) {
  const std::size_t n = num.nvars();
  std::map<Exponent, Integer, GrlexLess> rem(num.terms().begin(),
                                             num.terms().end());
  std::map<Exponent, Integer, GrlexLess> divisor(den.terms().begin(),
                                                 den.terms().end());
  const auto& [lead_e, lead_c] = *divisor.rbegin();

  LaurentPoly quotient(n);
  Exponent shift(n);
  while (!rem.empty()) {
    const auto& [re, rc] = *rem.rbegin();
    for (std::size_t i = 0; i < n; ++i) {
      shift[i] = re[i] - lead_e[i];
      if (shift[i] < 0)
        throw NotDivisible();
    }
    if (rc % lead_c != 0)
      throw NotDivisible();
    const Integer factor = rc / lead_c;
    quotient.add_term(shift, factor);
    Exponent e(n);
    for (const auto& [de, dc] : divisor) {
      for (std::size_t i = 0; i < n; ++i)
        e[i] = de[i] + shift[i];
      auto [it, inserted] = rem.try_emplace(e, -factor * dc);
      if (!inserted) {
        it->second -= factor * dc;
        if (it->second == 0)
          rem.erase(it);
      }
    }
  }
  return quotient;
}

} // namespace detail

/// Returns r with q * r == p, or throws NotDivisible when p/q is not a
/// Laurent polynomial with integer coefficients. Both sides are shifted by
/// monomials (units of the Laurent ring) to ordinary polynomials with no
/// monomial factor, then divided by leading-term elimination under grlex.
inline LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero())
    throw DomainError("division by the zero polynomial");
  if (p.nvars() != q.nvars())
    throw DomainError("Laurent polynomials live in different rings");
  if (p.is_zero())
    return LaurentPoly(p.nvars());
  const std::size_t n = p.nvars();
  Exponent mp = p.min_exponent();
  Exponent mq = q.min_exponent();
  Exponent neg_mp(n), neg_mq(n), net(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_mp[i] = -mp[i];
    neg_mq[i] = -mq[i];
    net[i] = mp[i] - mq[i];
  }
  return detail::divide_polynomials(p.shifted(neg_mp), q.shifted(neg_mq))
      .shifted(net);
}

} // namespace mutwb

template <>
struct std::hash<mutwb::LaurentPoly> {
  std::size_t operator()(const mutwb::LaurentPoly& p) const {
    return p.hash();
  }
};

#endif
