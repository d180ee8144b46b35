#include "witt/int_polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "witt/error.hpp"

namespace witt {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

IntPolynomial IntPolynomial::constant(std::size_t num_vars, const BigInt& c) {
  IntPolynomial r(num_vars);
  r.add_term(Exponents(num_vars, 0), c);
  return r;
}

IntPolynomial IntPolynomial::variable(std::size_t num_vars, std::size_t index) {
  Exponents e(num_vars, 0);
  e.at(index) = 1;
  return monomial(std::move(e), 1);
}

IntPolynomial IntPolynomial::monomial(Exponents exps, const BigInt& c) {
  IntPolynomial r(exps.size());
  r.add_term(exps, c);
  return r;
}

void IntPolynomial::add_term(const Exponents& exps, const BigInt& c) {
  if (exps.size() != num_vars_) {
    fail(ErrorCode::ShapeMismatch, "exponent vector arity differs from polynomial arity");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt IntPolynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint64_t IntPolynomial::total_degree() const {
  if (terms_.empty()) return 0;
  return witt::total_degree(terms_.rbegin()->first);
}

Exponents IntPolynomial::max_exponents() const {
  Exponents m(num_vars_, 0);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i) m[i] = std::max(m[i], e[i]);
  }
  return m;
}

void IntPolynomial::check_arity(const IntPolynomial& other) const {
  if (other.num_vars_ != num_vars_) {
    fail(ErrorCode::ShapeMismatch, "polynomials have different variable counts");
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  check_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  check_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  a.check_arity(b);
  IntPolynomial r(a.num_vars_);
  Exponents e(a.num_vars_);
  BigInt prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      auto [it, inserted] = r.terms_.try_emplace(e, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

IntPolynomial IntPolynomial::pow(std::uint64_t k) const {
  IntPolynomial result = constant(num_vars_, 1);
  IntPolynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

IntPolynomial IntPolynomial::divide_exact(const BigInt& d) const {
  IntPolynomial r = *this;
  for (auto& [e, c] : r.terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      fail(ErrorCode::InexactDivision,
           "coefficient " + to_decimal(c) + " is not divisible by " + to_decimal(d));
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

IntPolynomial IntPolynomial::reduce_mod(unsigned long m) const {
  IntPolynomial r(num_vars_);
  for (const auto& [e, c] : terms_) {
    const unsigned long res = mod_ui(c, m);
    if (res != 0) r.terms_.emplace_hint(r.terms_.end(), e, BigInt(res));
  }
  return r;
}

std::string IntPolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) mono << "*";
      mono << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (e[i] > 1) mono << "^" << e[i];
      any_var = true;
    }
    if (!any_var) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << mono.str();
    } else {
      out << mag.get_str() << "*" << mono.str();
    }
  }
  return out.str();
}

std::vector<std::string> witt_variable_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("X_" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) names.push_back("Y_" + std::to_string(i));
  return names;
}

}  // namespace witt
