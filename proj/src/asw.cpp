#include "witt/asw.hpp"

#include <string>

namespace witt {

namespace {

void require_exact(const CharacterVec& a) {
  for (const auto& c : a.components()) {
    if (!c.is_exact()) fail(ErrorCode::PrecisionPresent, "component known only modulo t^" + std::to_string(*c.precision()));
  }
}

// The vector with w in slot i and zero elsewhere.
CharacterVec single_slot(const CharacterVec& shape, std::size_t i, LaurentPoly w) {
  return CharacterVec::zero(shape.ring(), shape.p(), shape.length()).with_component(i, std::move(w));
}

// F(s) - s
CharacterVec wp_of(const CharacterVec& s) { return wsub(frobenius(s), s); }

// Solves c^p - c = alpha in F_q, if possible.
std::optional<FqField::Code> solve_artin_schreier(const FqField& f, FqField::Code alpha) {
  if (f.trace(alpha) != 0) return std::nullopt;
  for (FqField::Code c = 0; c < f.order(); ++c) {
    if (f.sub(f.pow(c, f.p()), c) == alpha) return c;
  }
  fail(ErrorCode::NoRootFound, "trace zero but no Artin-Schreier root found");
}

constexpr int kMaxReductionSteps = 100000;

}  // namespace

CharacterVec make_character(const FieldPtr& field, std::vector<LaurentPoly> components) {
  return CharacterVec(LaurentRing(field), field->p(), std::move(components));
}

bool is_reduced(const CharacterVec& a) {
  require_exact(a);
  for (const auto& c : a.components()) {
    if (c.is_zero()) continue;
    const long long v = c.valuation().value;
    if (v < 0 && v % static_cast<long long>(a.p()) == 0) return false;
  }
  return true;
}

bool is_strongly_reduced(const CharacterVec& a, bool allow_precision) {
  if (!allow_precision) require_exact(a);
  for (const auto& c : a.components()) {
    if (c.is_zero()) continue;
    if (c.valuation().value % static_cast<long long>(a.p()) == 0) return false;
  }
  return true;
}

CharacterVec artin_schreier_twist(const CharacterVec& a, const CharacterVec& c) { return wadd(a, wp_of(c)); }

ReductionCertificate reduce(const CharacterVec& a) {
  require_exact(a);
  const auto& field = a.ring().field();
  const auto p = static_cast<long long>(a.p());
  CharacterVec cur = a;
  CharacterVec witness = CharacterVec::zero(a.ring(), a.p(), a.length());
  for (std::size_t i = 0; i < a.length(); ++i) {
    for (int step = 0;; ++step) {
      if (step > kMaxReductionSteps) fail(ErrorCode::NonTermination, "reduction does not terminate");
      const LaurentPoly& ai = cur[i];
      if (ai.is_zero()) break;
      const long long v = ai.valuation().value;
      if (v >= 0 || v % p != 0) break;
      const FqField::Code u = ai.leading_coeff().code();
      const auto s = single_slot(cur, i, LaurentPoly::monomial(field, field->pth_root(u), v / p));
      cur = wsub(cur, wp_of(s));
      witness = wadd(witness, wneg(s));
    }
  }
  ReductionCertificate cert{a, cur, witness, false};
  if (!(artin_schreier_twist(a, witness) == cur)) {
    fail(ErrorCode::CertificateFailure, "reduced vector does not match a + F(c) - c");
  }
  cert.verified = true;
  return cert;
}

LaurentPoly embed_laurent(const LaurentPoly& a, const FqEmbedding& emb) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(a.terms().size());
  for (const auto& [e, c] : a.terms()) terms.emplace_back(e, emb.apply(c));
  return LaurentPoly::from_terms(emb.target(), std::move(terms), a.precision());
}

CharacterVec embed_character(const CharacterVec& a, const FqEmbedding& emb) {
  std::vector<LaurentPoly> comps;
  comps.reserve(a.length());
  for (const auto& c : a.components()) comps.push_back(embed_laurent(c, emb));
  return make_character(emb.target(), std::move(comps));
}

StrongReduction strongly_reduce(const CharacterVec& a, std::optional<long long> precision) {
  if (!precision) fail(ErrorCode::PrecisionRequired, "strong reduction needs a precision bound");
  const long long N = *precision;
  if (!is_reduced(a)) fail(ErrorCode::NotReduced, "strong reduction expects a reduced vector");
  const auto p = static_cast<long long>(a.p());

  FieldPtr field = a.ring().field();
  CharacterVec original = a;
  CharacterVec cur = a;
  CharacterVec witness = CharacterVec::zero(a.ring(), a.p(), a.length());

  auto extend = [&] {
    const auto emb = FqEmbedding::make(field, extension_field(*field, a.p()));
    field = emb.target();
    original = embed_character(original, emb);
    cur = embed_character(cur, emb);
    witness = embed_character(witness, emb);
  };

  for (std::size_t i = 0; i < a.length(); ++i) {
    for (int step = 0;; ++step) {
      if (step > kMaxReductionSteps) fail(ErrorCode::NonTermination, "strong reduction does not terminate");
      const LaurentPoly& ai = cur[i];
      if (ai.is_zero()) break;
      const long long v = ai.valuation().value;
      if (v < 0 && v % p != 0) break;
      LaurentPoly s(field);
      if (v < 0) {
        // Carries from lower slots can reintroduce p-divisible poles.
        s = LaurentPoly::monomial(field, field->pth_root(ai.leading_coeff().code()), v / p);
      } else if (v >= N) {
        cur = cur.with_component(i, ai.truncated(N));
        break;
      } else {
        const FqField::Code alpha = ai.coeff(0);
        std::optional<FqField::Code> root = FqField::Code{0};
        if (alpha != 0) root = solve_artin_schreier(*field, alpha);
        if (!root) {
          extend();
          continue;
        }
        s = LaurentPoly::constant(field, *root) + wp_inverse_positive(ai.slice(1, N), N);
      }
      const auto slot = single_slot(cur, i, s);
      cur = wsub(cur, wp_of(slot));
      witness = wadd(witness, wneg(slot));
    }
  }

  StrongReduction out{field, original, cur, witness, N, false};
  const auto twisted = artin_schreier_twist(original, witness);
  bool ok = is_strongly_reduced(cur, true);
  for (std::size_t i = 0; ok && i < cur.length(); ++i) ok = congruent(cur[i], twisted[i]);
  out.verified = ok;
  return out;
}

bool wp_member_unit(const LaurentPoly& a0) {
  if (a0.is_zero()) return true;
  const long long v = a0.valuation().value;
  if (v < 0) fail(ErrorCode::NegativeValuation, "membership test needs v(a0) >= 0");
  if (a0.precision() && *a0.precision() < 1) fail(ErrorCode::PrecisionPresent, "constant term unknown");
  return a0.field()->trace(a0.coeff(0)) == 0;
}

CharacterVec shift_char(const CharacterVec& c, std::size_t i) {
  std::vector<LaurentPoly> comps(i, c.ring().zero());
  comps.insert(comps.end(), c.components().begin(), c.components().end());
  return CharacterVec(c.ring(), c.p(), std::move(comps));
}

}  // namespace witt
