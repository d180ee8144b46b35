#include "witt/laurent.hpp"

#include <algorithm>
#include <map>

#include "witt/error.hpp"

namespace witt {

namespace {

std::optional<long long> min_precision(const std::optional<long long>& a, const std::optional<long long>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

LaurentPoly LaurentPoly::monomial(FieldPtr field, Code coeff, long long exponent) {
  LaurentPoly r(std::move(field));
  if (coeff != 0) r.terms_.emplace_back(exponent, coeff);
  return r;
}

LaurentPoly LaurentPoly::from_terms(FieldPtr field, std::vector<Term> terms, std::optional<long long> precision) {
  LaurentPoly r(std::move(field));
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (const auto& [e, c] : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == e) {
      r.terms_.back().second = r.field_->add(r.terms_.back().second, c);
      if (r.terms_.back().second == 0) r.terms_.pop_back();
    } else if (c != 0) {
      r.terms_.emplace_back(e, c);
    }
  }
  r.precision_ = precision;
  r.normalize_precision();
  return r;
}

void LaurentPoly::normalize_precision() {
  if (!precision_) return;
  const long long n = *precision_;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), n,
                             [](const Term& t, long long v) { return t.first < v; });
  terms_.erase(it, terms_.end());
}

LaurentPoly::Code LaurentPoly::coeff(long long exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, long long v) { return t.first < v; });
  return (it != terms_.end() && it->first == exponent) ? it->second : 0;
}

Valuation LaurentPoly::valuation() const {
  if (!terms_.empty()) return Valuation::finite(terms_.front().first);
  if (precision_) return Valuation::bounded_below(*precision_);
  return Valuation::infinite();
}

std::optional<long long> LaurentPoly::valuation_lower_bound() const {
  if (!terms_.empty()) return terms_.front().first;
  return precision_;
}

FqElement LaurentPoly::leading_coeff() const {
  if (terms_.empty()) fail(ErrorCode::ZeroOperand, "leading coefficient of zero");
  return {field_, terms_.front().second};
}

long long LaurentPoly::max_exponent() const {
  if (terms_.empty()) fail(ErrorCode::ZeroOperand, "degree of zero");
  return terms_.back().first;
}

LaurentPoly LaurentPoly::truncated(long long n) const {
  LaurentPoly r = *this;
  r.precision_ = min_precision(precision_, n);
  r.normalize_precision();
  return r;
}

LaurentPoly LaurentPoly::without_precision() const {
  LaurentPoly r = *this;
  r.precision_.reset();
  return r;
}

LaurentPoly LaurentPoly::slice(long long lo, long long hi) const {
  LaurentPoly r(field_);
  for (const auto& t : terms_) {
    if (t.first >= lo && t.first <= hi) r.terms_.push_back(t);
  }
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  require_same_field(*field_, *rhs.field_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      const Code c = field_->add(a->second, b->second);
      if (c != 0) merged.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  precision_ = min_precision(precision_, rhs.precision_);
  normalize_precision();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = field_->neg(t.second);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_field(*a.field_, *b.field_);
  const FqField& f = *a.field_;
  LaurentPoly r(a.field_);

  // Precision: min(v(a) + N_b, v(b) + N_a), using lower bounds of valuations.
  std::optional<long long> prec;
  const auto va = a.valuation_lower_bound();
  const auto vb = b.valuation_lower_bound();
  if (b.precision_ && va) prec = *va + *b.precision_;
  if (a.precision_ && vb) prec = min_precision(prec, *vb + *a.precision_);
  r.precision_ = prec;

  if (a.terms_.empty() || b.terms_.empty()) return r;

  const long long lo = a.terms_.front().first + b.terms_.front().first;
  const long long hi = a.terms_.back().first + b.terms_.back().first;
  const auto span = static_cast<unsigned long long>(hi - lo) + 1;
  const auto products = static_cast<unsigned long long>(a.terms_.size()) * b.terms_.size();
  if (span <= 4 * products + 64) {
    std::vector<LaurentPoly::Code> dense(span, 0);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        auto& slot = dense[static_cast<std::size_t>(ea + eb - lo)];
        slot = f.add(slot, f.mul(ca, cb));
      }
    }
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i] != 0) r.terms_.emplace_back(lo + static_cast<long long>(i), dense[i]);
    }
  } else {
    std::map<long long, LaurentPoly::Code> acc;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        auto& slot = acc[ea + eb];
        slot = f.add(slot, f.mul(ca, cb));
      }
    }
    for (const auto& [e, c] : acc) {
      if (c != 0) r.terms_.emplace_back(e, c);
    }
  }
  r.normalize_precision();
  return r;
}

LaurentPoly LaurentPoly::scaled(Code c) const {
  LaurentPoly r(field_);
  r.precision_ = precision_;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [e, x] : terms_) r.terms_.emplace_back(e, field_->mul(x, c));
  return r;
}

LaurentPoly LaurentPoly::shifted(long long k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  if (r.precision_) *r.precision_ += k;
  return r;
}

LaurentPoly LaurentPoly::frobenius() const {
  const long long p = field_->p();
  LaurentPoly r(field_);
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) r.terms_.emplace_back(e * p, field_->frobenius(c));
  if (precision_) r.precision_ = *precision_ * p;
  return r;
}

LaurentPoly LaurentPoly::pow(std::uint64_t k) const {
  const unsigned p = field_->p();
  LaurentPoly base = *this;
  while (k > 0 && k % p == 0) {
    base = base.frobenius();
    k /= p;
  }
  LaurentPoly result = constant(field_, 1);
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.field_->same_as(*b.field_) && a.terms_ == b.terms_ && a.precision_ == b.precision_;
}

std::string LaurentPoly::to_string() const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    const std::string cs = field_->format(c);
    const bool compound = cs.find('+') != std::string::npos;
    if (e == 0) {
      out += compound ? "(" + cs + ")" : cs;
      continue;
    }
    if (cs != "1") out += (compound ? "(" + cs + ")" : cs) + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  if (precision_) {
    if (!out.empty()) out += " + ";
    out += "O(t^" + std::to_string(*precision_) + ")";
  }
  return out.empty() ? "0" : out;
}

LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op) {
  switch (op) {
    case LaurentOp::Add: return a + b;
    case LaurentOp::Mul: return a * b;
    case LaurentOp::Neg: return -a;
  }
  return a;
}

Valuation valuation(const LaurentPoly& a) { return a.valuation(); }
FqElement leading_coeff(const LaurentPoly& a) { return a.leading_coeff(); }

LaurentPoly laurent_pth_root(const LaurentPoly& a) {
  const FqField& f = *a.field();
  const long long p = f.p();
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(a.terms().size());
  for (const auto& [e, c] : a.terms()) {
    if (e % p != 0) {
      fail(ErrorCode::NotAPthPower, "exponent " + std::to_string(e) + " is not divisible by " + std::to_string(p));
    }
    terms.emplace_back(e / p, f.pth_root(c));
  }
  std::optional<long long> prec;
  if (a.precision()) {
    // Known terms of the root: exponents e with p*e < N.
    const long long n = *a.precision();
    prec = n >= 0 ? (n + p - 1) / p : -((-n) / p);
  }
  return LaurentPoly::from_terms(a.field(), std::move(terms), prec);
}

LaurentPoly wp_inverse_positive(const LaurentPoly& a, std::optional<long long> precision) {
  if (!precision) fail(ErrorCode::PrecisionRequired, "inverting the Artin-Schreier map needs a precision bound");
  const long long n = *precision;
  const auto v = a.valuation_lower_bound();
  if (v && *v < 1) {
    fail(ErrorCode::NegativeValuation, "argument must lie in the maximal ideal (valuation >= 1)");
  }
  LaurentPoly c = LaurentPoly(a.field()).truncated(n);
  LaurentPoly power = a.truncated(n);
  while (!power.is_zero()) {
    c -= power;
    power = power.frobenius().truncated(n);
  }
  return c.truncated(n);
}

}  // namespace witt
