#include "quiverforge/polynomial.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <optional>
#include <tuple>
#include <sstream>
#include <stdexcept>

namespace quiverforge::groebner {

Monomial::Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    const unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
    if (e > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
    out.exps_[i] = static_cast<std::uint16_t>(e);
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  out.degree_ = 0;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  for (std::size_t i = a.exps_.size(); i-- > 0;)
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i];
  return false;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (sgn(c) != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Polynomial p(nvars);
  std::vector<std::uint16_t> e(nvars, 0);
  e.at(i) = 1;
  p.terms_.push_back({Monomial(std::move(e)), 1});
  return p;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

namespace {

// Merges two descending term lists, b scaled by `scale`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, const Rational& scale) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && b[j].monomial < a[i].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || a[i].monomial < b[j].monomial) {
      out.push_back({b[j].monomial, scale * b[j].coeff});
      ++j;
    } else {
      Rational c = a[i].coeff + scale * b[j].coeff;
      if (sgn(c) != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  terms_ = merge(terms_, other.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::map<Monomial, Rational, bool (*)(const Monomial&, const Monomial&)> acc(
      [](const Monomial& x, const Monomial& y) { return y < x; });
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coeff * t.coeff;
  Polynomial out(a.nvars_);
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.terms_.push_back({m, c});
  return out;
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  Polynomial out(a.nvars_);
  if (sgn(s) == 0) return out;
  out.terms_ = a.terms_;
  for (auto& t : out.terms_) t.coeff *= s;
  return out;
}

void Polynomial::subtract_multiple(const Rational& c, const Monomial& m, const Polynomial& other) {
  std::vector<Term> shifted;
  shifted.reserve(other.terms_.size());
  for (const auto& t : other.terms_) shifted.push_back({t.monomial * m, t.coeff});
  terms_ = merge(terms_, shifted, -c);
}

void Polynomial::make_monic() {
  if (terms_.empty()) return;
  const Rational inv = 1 / terms_.front().coeff;
  for (auto& t : terms_) t.coeff *= inv;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < t.monomial[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    os << (k && sgn(t.coeff) > 0 ? "+" : "") << format_rational(t.coeff);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.monomial[i] == 0) continue;
      os << "*x" << i;
      if (t.monomial[i] > 1) os << "^" << t.monomial[i];
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Term Polynomial::pop_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

void Polynomial::append_smaller(Term t) {
  if (!terms_.empty() && !(t.monomial < terms_.back().monomial))
    throw std::invalid_argument("append_smaller: term order violated");
  terms_.push_back(std::move(t));
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g) {
  Polynomial p = f;
  Polynomial remainder(f.nvars());
  while (!p.is_zero()) {
    const Term& lead = p.leading();
    const Polynomial* divisor = nullptr;
    for (const auto& q : g)
      if (!q.is_zero() && q.leading().monomial.divides(lead.monomial)) {
        divisor = &q;
        break;
      }
    if (divisor) {
      const Rational c = lead.coeff / divisor->leading().coeff;
      const Monomial m = lead.monomial / divisor->leading().monomial;
      p.subtract_multiple(c, m, *divisor);
    } else {
      remainder.append_smaller(p.pop_leading());
    }
  }
  return remainder;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;  // j is the newer element
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(std::size_t nvars, const GroebnerLimits& limits) : nvars_(nvars), limits_(limits) {}

  GroebnerResult run(const std::vector<Polynomial>& generators) {
    for (const auto& f : generators) {
      if (auto stop = insert(f)) return *stop;
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        if (a.lcm < b.lcm) return true;
        if (b.lcm < a.lcm) return false;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      const Pair p = *best;
      pairs_.erase(best);
      if (p.lcm.degree() > limits_.max_degree) {
        return undecided("S-polynomial degree " + std::to_string(p.lcm.degree()) + " exceeds cap " +
                         std::to_string(limits_.max_degree));
      }
      if (auto stop = insert(s_polynomial(p))) return *stop;
    }
    GroebnerResult r;
    r.verdict = IdealVerdict::proper;
    for (std::size_t k : active_) r.basis.push_back(polys_[k]);
    return r;
  }

 private:
  Polynomial s_polynomial(const Pair& p) const {
    const Polynomial& f = polys_[p.i];
    const Polynomial& g = polys_[p.j];
    Polynomial s(nvars_);
    s.subtract_multiple(-1 / f.leading().coeff, p.lcm / f.leading().monomial, f);
    s.subtract_multiple(1 / g.leading().coeff, p.lcm / g.leading().monomial, g);
    return s;
  }

  std::vector<Polynomial> active_polys() const {
    std::vector<Polynomial> out;
    out.reserve(active_.size());
    for (std::size_t k : active_) out.push_back(polys_[k]);
    return out;
  }

  GroebnerResult undecided(std::string why) const {
    GroebnerResult r;
    r.verdict = IdealVerdict::undecided;
    r.detail = std::move(why);
    return r;
  }

  std::optional<GroebnerResult> insert(const Polynomial& f) {
    Polynomial h = normal_form(f, active_polys());
    if (h.is_zero()) return std::nullopt;
    h.make_monic();
    if (h.is_unit()) {
      GroebnerResult r;
      r.verdict = IdealVerdict::unit;
      r.basis.push_back(h);
      return r;
    }
    if (h.degree() > limits_.max_degree)
      return undecided("basis element degree " + std::to_string(h.degree()) + " exceeds cap");
    polys_.push_back(std::move(h));
    if (polys_.size() > limits_.max_basis)
      return undecided("basis size exceeds cap " + std::to_string(limits_.max_basis));
    update(polys_.size() - 1);
    return std::nullopt;
  }

  const Monomial& lm(std::size_t k) const { return polys_[k].leading().monomial; }

  void update(std::size_t h) {
    std::list<Pair> candidates;
    for (std::size_t g : active_) candidates.push_back({g, h, lcm(lm(g), lm(h))});
    std::vector<Pair> kept;
    while (!candidates.empty()) {
      Pair p = candidates.front();
      candidates.pop_front();
      bool keep = lm(p.i).coprime(lm(h));
      if (!keep) {
        keep = true;
        for (const auto& q : candidates)
          if (q.lcm.divides(p.lcm)) { keep = false; break; }
        if (keep)
          for (const auto& q : kept)
            if (q.lcm.divides(p.lcm)) { keep = false; break; }
      }
      if (keep) kept.push_back(std::move(p));
    }
    std::vector<Pair> fresh;
    for (auto& p : kept)
      if (!lm(p.i).coprime(lm(h))) fresh.push_back(std::move(p));

    std::vector<Pair> old;
    for (auto& p : pairs_) {
      const bool drop = lm(h).divides(p.lcm) && !(lcm(lm(p.i), lm(h)) == p.lcm) &&
                        !(lcm(lm(p.j), lm(h)) == p.lcm);
      if (!drop) old.push_back(std::move(p));
    }
    pairs_ = std::move(old);
    for (auto& p : fresh) pairs_.push_back(std::move(p));

    std::vector<std::size_t> next;
    for (std::size_t g : active_)
      if (!lm(h).divides(lm(g))) next.push_back(g);
    next.push_back(h);
    active_ = std::move(next);
  }

  std::size_t nvars_;
  GroebnerLimits limits_;
  std::vector<Polynomial> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerResult groebner_basis(const std::vector<Polynomial>& generators, const GroebnerLimits& limits) {
  std::size_t nvars = 0;
  for (const auto& f : generators) nvars = std::max(nvars, f.nvars());
  for (const auto& f : generators)
    if (!f.is_zero() && f.nvars() != nvars) throw std::invalid_argument("generators live in different rings");
  return Buchberger(nvars, limits).run(generators);
}

}  // namespace quiverforge::groebner
