#include "witt/fq.hpp"

#include <cctype>

#include "witt/error.hpp"

namespace witt {

namespace {

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

PrimePoly digits_of(std::uint64_t code, unsigned p, unsigned len) {
  PrimePoly d(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    d[i] = static_cast<unsigned>(code % p);
    code /= p;
  }
  return d;
}

}  // namespace

bool is_irreducible_mod_p(const PrimePoly& f_in, unsigned p) {
  PrimePoly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned e = static_cast<unsigned>(f.size() - 1);
  if (e == 1) return true;
  // Trial division by every monic polynomial of degree 1..e/2.
  for (unsigned d = 1; d <= e / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      PrimePoly g = digits_of(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::shared_ptr<const FqField> FqField::create(unsigned p, unsigned degree, std::optional<PrimePoly> modulus) {
  if (!is_prime(p)) fail(ErrorCode::ValidationError, std::to_string(p) + " is not prime");
  if (degree < 1) fail(ErrorCode::ValidationError, "field degree must be at least 1");
  long double size = 1;
  for (unsigned i = 0; i < degree; ++i) size *= p;
  if (size > static_cast<long double>(kMaxOrder)) {
    fail(ErrorCode::ExtensionTooLarge, "field of order " + std::to_string(p) + "^" +
                                           std::to_string(degree) + " exceeds the supported size");
  }
  bool given = modulus.has_value();
  PrimePoly mod;
  if (modulus) {
    mod = *modulus;
    for (auto& c : mod) {
      if (c >= p) fail(ErrorCode::ValidationError, "modulus coefficient out of range");
    }
    if (degree == 1 && mod.empty()) {
      given = false;
    } else {
      if (mod.size() != degree + 1 || mod.back() != 1) {
        fail(ErrorCode::ValidationError, "modulus must be monic of degree " + std::to_string(degree));
      }
      if (!is_irreducible_mod_p(mod, p)) fail(ErrorCode::ValidationError, "modulus is reducible");
    }
  } else if (degree > 1) {
    const std::uint64_t count = ipow(p, degree);
    for (std::uint64_t code = 0; code < count; ++code) {
      PrimePoly g = digits_of(code, p, degree);
      g.push_back(1);
      if (is_irreducible_mod_p(g, p)) {
        mod = std::move(g);
        break;
      }
    }
  }
  if (degree == 1) mod.clear();
  auto field = std::shared_ptr<FqField>(new FqField(p, degree, std::move(mod), given));
  field->build_tables();
  return field;
}

FqField::FqField(unsigned p, unsigned degree, PrimePoly modulus, bool given)
    : p_(p),
      degree_(degree),
      order_(static_cast<std::uint32_t>(ipow(p, degree))),
      modulus_(std::move(modulus)),
      modulus_given_(given) {}

bool FqField::same_as(const FqField& other) const {
  return this == &other || (p_ == other.p_ && degree_ == other.degree_ && modulus_ == other.modulus_);
}

std::vector<unsigned> FqField::digits(Code a) const { return digits_of(a, p_, degree_); }

FqField::Code FqField::from_digits(std::span<const unsigned> digits) const {
  Code code = 0;
  Code place = 1;
  for (std::size_t i = 0; i < degree_; ++i) {
    const unsigned d = i < digits.size() ? digits[i] % p_ : 0;
    code += d * place;
    place *= p_;
  }
  return code;
}

FqField::Code FqField::from_integer(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Code>(r);
}

FqField::Code FqField::slow_mul(Code a, Code b) const {
  const PrimePoly da = digits(a);
  const PrimePoly db = digits(b);
  PrimePoly prod(2 * degree_, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    for (unsigned j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  if (degree_ > 1) prod = poly_mod(prod, modulus_, p_);
  return from_digits(prod);
}

void FqField::build_tables() {
  neg_.resize(order_);
  for (Code a = 0; a < order_; ++a) {
    PrimePoly d = digits(a);
    for (auto& x : d) x = (p_ - x) % p_;
    neg_[a] = from_digits(d);
  }
  if (order_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(order_) * order_);
    for (Code a = 0; a < order_; ++a) {
      const PrimePoly da = digits(a);
      for (Code b = 0; b < order_; ++b) {
        PrimePoly db = digits(b);
        for (unsigned i = 0; i < degree_; ++i) db[i] = (db[i] + da[i]) % p_;
        add_table_[static_cast<std::size_t>(a) * order_ + b] = from_digits(db);
      }
    }
  }
  const std::uint32_t group = order_ - 1;
  exp_.assign(group, 0);
  log_.assign(order_, 0);
  for (Code w = 1; w < order_; ++w) {
    Code x = 1;
    std::uint32_t k = 0;
    bool primitive = true;
    do {
      exp_[k] = x;
      x = slow_mul(x, w);
      ++k;
      if (x == 1 && k < group) {
        primitive = false;
        break;
      }
    } while (k < group);
    if (primitive && x == 1) {
      for (std::uint32_t i = 0; i < group; ++i) log_[exp_[i]] = i;
      return;
    }
  }
  fail(ErrorCode::ValidationError, "no primitive element found; modulus is not irreducible");
}

FqField::Code FqField::add(Code a, Code b) const {
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
  Code result = 0;
  Code place = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    result += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return result;
}

FqField::Code FqField::neg(Code a) const { return neg_[a]; }

FqField::Code FqField::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
  return exp_[s % (order_ - 1)];
}

FqField::Code FqField::inv(Code a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(order_));
  const std::uint32_t group = order_ - 1;
  return exp_[(group - log_[a]) % group];
}

FqField::Code FqField::pow(Code a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = order_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (k % group)) % group];
}

FqField::Code FqField::pth_root(Code a) const { return pow(a, ipow(p_, degree_ - 1)); }

unsigned FqField::trace(Code a) const {
  Code acc = 0;
  Code x = a;
  for (unsigned i = 0; i < degree_; ++i) {
    acc = add(acc, x);
    x = frobenius(x);
  }
  if (acc >= p_) fail(ErrorCode::IdentityViolation, "trace left the prime field");
  return acc;
}

std::string FqField::format(Code a) const {
  if (a == 0) return "0";
  const PrimePoly d = digits(a);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]);
    out += "g";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

FqField::Code FqField::parse(std::string_view text) const {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_number = [&](unsigned long long& out) {
    const std::size_t start = pos;
    unsigned long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<unsigned>(text[pos] - '0');
      if (value > (1ULL << 40)) fail(ErrorCode::ParseError, "number too large in coefficient '" + std::string(text) + "'");
      ++pos;
    }
    if (pos > start) out = value;
    return pos > start;
  };
  std::vector<long long> raw(1, 0);
  bool any = false;
  skip_ws();
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (any) {
      fail(ErrorCode::ParseError, "expected '+' or '-' at position " + std::to_string(pos) + " in '" +
                                      std::string(text) + "'");
    }
    unsigned long long coeff = 1;
    const bool has_coeff = read_number(coeff);
    skip_ws();
    unsigned long long power = 0;
    if (pos < text.size() && text[pos] == '*') {
      if (!has_coeff) fail(ErrorCode::ParseError, "dangling '*' in '" + std::string(text) + "'");
      ++pos;
      skip_ws();
      if (pos >= text.size() || text[pos] != 'g') fail(ErrorCode::ParseError, "expected 'g' after '*'");
    }
    if (pos < text.size() && text[pos] == 'g') {
      ++pos;
      power = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        if (!read_number(power)) fail(ErrorCode::ParseError, "expected exponent after '^'");
        skip_ws();
      }
    } else if (!has_coeff) {
      fail(ErrorCode::ParseError, "expected a term at position " + std::to_string(pos) + " in '" +
                                      std::string(text) + "'");
    }
    if (power > 0 && degree_ == 1) {
      fail(ErrorCode::ValidationError, "generator g is not defined in the prime field F_" + std::to_string(p_));
    }
    if (raw.size() <= power) raw.resize(power + 1, 0);
    const long long c = static_cast<long long>(coeff % p_);
    raw[power] = (raw[power] + sign * c) % static_cast<long long>(p_);
    any = true;
  }
  if (!any) fail(ErrorCode::ParseError, "empty coefficient string");
  // Reduce g^k for k >= degree through the modulus.
  PrimePoly poly(raw.size(), 0);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    long long r = raw[i] % static_cast<long long>(p_);
    if (r < 0) r += p_;
    poly[i] = static_cast<unsigned>(r);
  }
  if (degree_ > 1) {
    poly = poly_mod(poly, modulus_, p_);
  } else {
    poly.resize(1);
  }
  return from_digits(poly);
}

void require_same_field(const FqField& a, const FqField& b) {
  if (!a.same_as(b)) fail(ErrorCode::FieldMismatch, "operands belong to different fields");
}

FqElement operator+(const FqElement& a, const FqElement& b) {
  require_same_field(*a.field_, *b.field_);
  return {a.field_, a.field_->add(a.code_, b.code_)};
}

FqElement operator-(const FqElement& a, const FqElement& b) {
  require_same_field(*a.field_, *b.field_);
  return {a.field_, a.field_->sub(a.code_, b.code_)};
}

FqElement operator*(const FqElement& a, const FqElement& b) {
  require_same_field(*a.field_, *b.field_);
  return {a.field_, a.field_->mul(a.code_, b.code_)};
}

bool operator==(const FqElement& a, const FqElement& b) {
  return a.code_ == b.code_ && a.field_->same_as(*b.field_);
}

FqElement fq_arith(const FqElement& a, const FqElement& b, FqOp op) {
  switch (op) {
    case FqOp::Add: return a + b;
    case FqOp::Mul: return a * b;
    case FqOp::Neg: return -a;
    case FqOp::Inv: return fq_inverse(a);
  }
  return a;
}

FqElement fq_inverse(const FqElement& a) { return {a.field(), a.field()->inv(a.code())}; }
FqElement fq_pth_root(const FqElement& a) { return {a.field(), a.field()->pth_root(a.code())}; }
unsigned fq_trace(const FqElement& a) { return a.field()->trace(a.code()); }

FqEmbedding FqEmbedding::make(FieldPtr small, FieldPtr big) {
  if (small->p() != big->p()) fail(ErrorCode::FieldMismatch, "embedding across characteristics");
  std::vector<FqField::Code> table(small->order(), 0);
  if (small->degree() == 1) {
    for (FqField::Code a = 0; a < small->order(); ++a) table[a] = big->from_integer(static_cast<long long>(a));
    return FqEmbedding(std::move(small), std::move(big), 0, std::move(table));
  }
  const PrimePoly& mod = small->modulus();
  std::optional<FqField::Code> root;
  for (FqField::Code r = 0; r < big->order() && !root; ++r) {
    FqField::Code acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) {
      acc = big->add(big->mul(acc, r), big->from_integer(static_cast<long long>(mod[i])));
    }
    if (acc == 0) root = r;
  }
  if (!root) {
    fail(ErrorCode::NoRootFound, "F_" + std::to_string(small->order()) + " does not embed in F_" +
                                     std::to_string(big->order()));
  }
  for (FqField::Code a = 0; a < small->order(); ++a) {
    const PrimePoly d = small->digits(a);
    FqField::Code acc = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
      acc = big->add(big->mul(acc, *root), big->from_integer(static_cast<long long>(d[i])));
    }
    table[a] = acc;
  }
  return FqEmbedding(std::move(small), std::move(big), *root, std::move(table));
}

FqElement FqEmbedding::operator()(const FqElement& a) const {
  require_same_field(*a.field(), *small_);
  return {big_, apply(a.code())};
}

FieldPtr extension_field(const FqField& base, unsigned factor) {
  return FqField::create(base.p(), base.degree() * factor);
}

}  // namespace witt
