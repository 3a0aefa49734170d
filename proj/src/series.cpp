#include "abmod/series.hpp"

#include <algorithm>

#include "abmod/errors.hpp"

namespace abmod {

bool val_less(const Valuation& a, const Valuation& b) {
  if (!a.finite) return false;  // AtLeastCap is never below anything here
  if (b.finite) return a.q < b.q;
  return true;  // finite q < cap by invariant
}

std::string to_string(const Valuation& v) {
  if (v.finite) return rat_string(v.q);
  return ">=" + rat_string(v.q);
}

TruncSeriesCtx::TruncSeriesCtx(ExtFieldPtr field, unsigned e, Rat cap,
                               std::size_t slots)
    : field_(std::move(field)), e_(e), cap_(std::move(cap)), slots_(slots) {}

SeriesCtxPtr TruncSeriesCtx::make(ExtFieldPtr field, unsigned e,
                                  const Rat& cap) {
  if (!field) throw InputError("null field for series context");
  if (sgn(cap) <= 0) throw InputError("series cap must be positive");
  Int pe = int_pow(Int(static_cast<unsigned long>(field->p())), e);
  Rat slots_q = cap * Rat(pe);
  if (slots_q.get_den() != 1)
    throw InputError("series cap denominator must divide p^e");
  Int slots = slots_q.get_num();
  if (!slots.fits_ulong_p() || slots.get_ui() > (1u << 24))
    throw ResourceError("series context too large");
  return SeriesCtxPtr(new TruncSeriesCtx(std::move(field), e, cap,
                                         slots.get_ui()));
}

SeriesCtxPtr TruncSeriesCtx::make(std::uint64_t p, unsigned k, unsigned e,
                                  const Rat& cap, std::uint64_t seed) {
  return make(ExtField::make(p, k, seed), e, cap);
}

Rat TruncSeriesCtx::exponent_of_slot(std::size_t i) const {
  Int pe = int_pow(Int(static_cast<unsigned long>(p())), e_);
  Rat r(Int(static_cast<unsigned long>(i)), pe);
  r.canonicalize();
  return r;
}

void TruncSeriesCtx::check(const TruncSeries& a) const {
  if (!a.ctx()) throw InputError("uninitialized series element");
  if (a.ctx().get() == this) return;
  if (!same_structure(*a.ctx())) throw InputError("mixed series contexts");
}

bool TruncSeriesCtx::same_structure(const TruncSeriesCtx& o) const {
  return e_ == o.e_ && cap_ == o.cap_ && slots_ == o.slots_ &&
         field_->same_structure(*o.field_);
}

TruncSeries TruncSeriesCtx::zero() const {
  return TruncSeries(shared_from_this(),
                     std::vector<Fq>(slots_, field_->zero()));
}

TruncSeries TruncSeriesCtx::one() const { return from_field(field_->one()); }

TruncSeries TruncSeriesCtx::from_int(const Int& v) const {
  return from_field(field_->from_int(v));
}

TruncSeries TruncSeriesCtx::from_field(const Fq& a) const {
  auto z = zero();
  z.coeffs()[0] = a;
  return z;
}

TruncSeries TruncSeriesCtx::t_power(const Rat& r) const {
  return t_power(r, field_->one());
}

TruncSeries TruncSeriesCtx::t_power(const Rat& r, const Fq& coeff) const {
  if (sgn(r) < 0) throw InputError("negative t exponent");
  Int pe = int_pow(Int(static_cast<unsigned long>(p())), e_);
  Rat slot_q = r * Rat(pe);
  if (slot_q.get_den() != 1)
    throw InputError("t exponent denominator must divide p^e");
  auto z = zero();
  Int slot = slot_q.get_num();
  if (slot < Int(static_cast<unsigned long>(slots_)))
    z.coeffs()[slot.get_ui()] = coeff;
  return z;
}

TruncSeries TruncSeriesCtx::t() const { return t_power(Rat(1)); }

TruncSeries TruncSeriesCtx::add(const TruncSeries& a,
                                const TruncSeries& b) const {
  check(a);
  check(b);
  std::vector<Fq> c = a.coeffs();
  for (std::size_t i = 0; i < slots_; ++i) c[i] = c[i] + b.coeffs()[i];
  return TruncSeries(a.ctx(), std::move(c));
}

TruncSeries TruncSeriesCtx::sub(const TruncSeries& a,
                                const TruncSeries& b) const {
  check(a);
  check(b);
  std::vector<Fq> c = a.coeffs();
  for (std::size_t i = 0; i < slots_; ++i) c[i] = c[i] - b.coeffs()[i];
  return TruncSeries(a.ctx(), std::move(c));
}

TruncSeries TruncSeriesCtx::neg(const TruncSeries& a) const {
  check(a);
  std::vector<Fq> c = a.coeffs();
  for (auto& x : c) x = -x;
  return TruncSeries(a.ctx(), std::move(c));
}

TruncSeries TruncSeriesCtx::mul(const TruncSeries& a,
                                const TruncSeries& b) const {
  check(a);
  check(b);
  std::vector<Fq> c(slots_, field_->zero());
  for (std::size_t i = 0; i < slots_; ++i) {
    if (abmod::is_zero(a.coeffs()[i])) continue;
    for (std::size_t j = 0; j + i < slots_; ++j) {
      if (abmod::is_zero(b.coeffs()[j])) continue;
      c[i + j] = c[i + j] + a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return TruncSeries(a.ctx(), std::move(c));
}

bool TruncSeriesCtx::eq(const TruncSeries& a, const TruncSeries& b) const {
  check(a);
  check(b);
  for (std::size_t i = 0; i < slots_; ++i)
    if (!(a.coeffs()[i] == b.coeffs()[i])) return false;
  return true;
}

bool TruncSeriesCtx::is_zero(const TruncSeries& a) const {
  check(a);
  return a.is_zero();
}

Int TruncSeriesCtx::size() const {
  return int_pow(field_->size(), static_cast<unsigned long>(slots_));
}

TruncSeries TruncSeriesCtx::element_at(std::uint64_t i) const {
  auto z = zero();
  Int fsz = field_->size();
  if (!fsz.fits_ulong_p())
    throw ResourceError("field too large for enumeration");
  std::uint64_t base = fsz.get_ui();
  for (std::size_t s = 0; s < slots_ && i > 0; ++s) {
    z.coeffs()[s] = field_->element_at(i % base);
    i /= base;
  }
  return z;
}

std::uint64_t TruncSeriesCtx::index_of(const TruncSeries& a) const {
  check(a);
  Int fsz = field_->size();
  std::uint64_t base = fsz.fits_ulong_p() ? fsz.get_ui() : 0;
  unsigned __int128 acc = 0, scale = 1;
  for (std::size_t s = 0; s < slots_; ++s) {
    acc += scale * field_->index_of(a.coeffs()[s]);
    scale *= base;
  }
  const unsigned __int128 cap = ~std::uint64_t{0};
  return acc > cap ? ~std::uint64_t{0} : static_cast<std::uint64_t>(acc);
}

std::string TruncSeriesCtx::to_string(const TruncSeries& a) const {
  check(a);
  std::string out;
  for (std::size_t i = 0; i < slots_; ++i) {
    const Fq& cf = a.coeffs()[i];
    if (abmod::is_zero(cf)) continue;
    if (!out.empty()) out += " + ";
    std::string cs = field_->to_string(cf);
    bool needs_paren = cs.find(' ') != std::string::npos;
    if (i == 0) {
      out += needs_paren ? "(" + cs + ")" : cs;
      continue;
    }
    Rat ex = exponent_of_slot(i);
    std::string ts = "t";
    if (!(ex == Rat(1))) {
      if (ex.get_den() == 1) {
        ts += "^" + ex.get_num().get_str();
      } else {
        ts += "^(" + rat_string(ex) + ")";
      }
    }
    if (cs == "1") {
      out += ts;
    } else if (needs_paren) {
      out += "(" + cs + ")*" + ts;
    } else {
      out += cs + "*" + ts;
    }
  }
  return out.empty() ? "0" : out;
}

TruncSeries::TruncSeries(SeriesCtxPtr ctx, std::vector<Fq> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  if (!ctx_) throw InputError("null series context");
  if (c_.size() != ctx_->slots())
    throw InternalError("series coefficient vector has wrong length");
}

bool TruncSeries::is_zero() const {
  for (const auto& x : c_)
    if (!abmod::is_zero(x)) return false;
  return true;
}

Valuation TruncSeries::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!abmod::is_zero(c_[i]))
      return Valuation::finite_val(ctx_->exponent_of_slot(i));
  return Valuation::at_least_cap(ctx_->cap());
}

namespace {
const TruncSeriesCtx& sctx(const TruncSeries& a) {
  if (!a.ctx()) throw InputError("uninitialized series element");
  return *a.ctx();
}
}  // namespace

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  return sctx(a).add(a, b);
}
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  return sctx(a).sub(a, b);
}
TruncSeries operator-(const TruncSeries& a) { return sctx(a).neg(a); }
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  return sctx(a).mul(a, b);
}
bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return sctx(a).eq(a, b);
}

SeriesCtxPtr rescaled_ctx(const SeriesCtxPtr& ctx, const Rat& q) {
  if (!ctx) throw InputError("null series context");
  if (sgn(q) <= 0) throw InputError("rescale factor must be positive");
  unsigned extra_e = 0;
  if (!p_power_denominator(q, ctx->p(), &extra_e))
    throw InputError("rescale factor denominator must be a power of p");
  return TruncSeriesCtx::make(ctx->field(), ctx->e() + extra_e,
                              ctx->cap() * q);
}

TruncSeries rescale(const TruncSeries& a, const Rat& q) {
  const auto& ctx = a.ctx();
  if (!ctx) throw InputError("uninitialized series element");
  auto nctx = rescaled_ctx(ctx, q);
  auto out = nctx->zero();
  // slot i at denominator p^e maps to exponent q*i/p^e; with the new
  // denominator p^(e+d) this is the integer slot i * num(q) * p^(d - d_q)
  for (std::size_t i = 0; i < ctx->slots(); ++i) {
    if (abmod::is_zero(a.coeffs()[i])) continue;
    Rat new_exp = ctx->exponent_of_slot(i) * q;
    Int pe = int_pow(Int(static_cast<unsigned long>(nctx->p())), nctx->e());
    Rat slot_q = new_exp * Rat(pe);
    if (slot_q.get_den() != 1)
      throw InternalError("rescale: exponent does not land on a slot");
    Int slot = slot_q.get_num();
    if (slot >= Int(static_cast<unsigned long>(nctx->slots())))
      throw InternalError("rescale: exponent escaped the safe cap");
    out.coeffs()[slot.get_ui()] = a.coeffs()[i];
  }
  return out;
}

namespace {

// minimal recursive-descent parser for the series printer's output
struct SeriesParser {
  const std::string& s;
  std::size_t pos = 0;
  const TruncSeriesCtx& ctx;

  explicit SeriesParser(const std::string& str, const TruncSeriesCtx& c)
      : s(str), ctx(c) {}

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::uint64_t parse_uint() {
    skip_ws();
    if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos])))
      throw InputError("series parse: expected number at offset " +
                       std::to_string(pos));
    std::uint64_t v = 0;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      ++pos;
    }
    return v;
  }

  Rat parse_exponent() {
    // "t", "t^3", or "t^(a/b)"
    if (!eat('t')) throw InputError("series parse: expected t");
    if (!eat('^')) return Rat(1);
    if (eat('(')) {
      std::uint64_t num = parse_uint();
      Rat r(Int(static_cast<unsigned long>(num)));
      if (eat('/')) {
        std::uint64_t den = parse_uint();
        r = Rat(Int(static_cast<unsigned long>(num)),
                Int(static_cast<unsigned long>(den)));
        r.canonicalize();
      }
      if (!eat(')')) throw InputError("series parse: expected )");
      return r;
    }
    return Rat(Int(static_cast<unsigned long>(parse_uint())));
  }

  Fq parse_field_atom() {
    skip_ws();
    if (eat('w')) {
      std::uint64_t e = 1;
      if (eat('^')) e = parse_uint();
      return ctx.field()->pow(ctx.field()->gen(),
                              Int(static_cast<unsigned long>(e)));
    }
    std::uint64_t v = parse_uint();
    return ctx.field()->from_int(Int(static_cast<unsigned long>(v)));
  }

  Fq parse_field_term() {
    Fq acc = parse_field_atom();
    while (true) {
      skip_ws();
      if (eat('*')) {
        acc = acc * parse_field_atom();
      } else {
        break;
      }
    }
    return acc;
  }

  Fq parse_field_sum() {
    Fq acc = parse_field_term();
    while (eat('+')) acc = acc + parse_field_term();
    return acc;
  }

  TruncSeries parse() {
    auto out = ctx.zero();
    bool first = true;
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (!first && !eat('+'))
        throw InputError("series parse: expected + at offset " +
                         std::to_string(pos));
      first = false;
      skip_ws();
      Fq coeff = ctx.field()->one();
      bool have_coeff = false;
      if (pos < s.size() && s[pos] == '(') {
        ++pos;
        coeff = parse_field_sum();
        if (!eat(')')) throw InputError("series parse: expected )");
        have_coeff = true;
      } else if (pos < s.size() &&
                 (isdigit(static_cast<unsigned char>(s[pos])) ||
                  s[pos] == 'w')) {
        coeff = parse_field_term();
        have_coeff = true;
      }
      skip_ws();
      bool have_t = false;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        have_t = true;
      } else if (pos < s.size() && s[pos] == 't') {
        have_t = true;
      }
      if (have_t) {
        Rat ex = parse_exponent();
        out = ctx.add(out, ctx.t_power(ex, coeff));
      } else {
        if (!have_coeff)
          throw InputError("series parse: empty term at offset " +
                           std::to_string(pos));
        out = ctx.add(out, ctx.from_field(coeff));
      }
      skip_ws();
    }
    return out;
  }
};

}  // namespace

TruncSeries parse_series(const SeriesCtxPtr& ctx, const std::string& text) {
  if (!ctx) throw InputError("null series context");
  std::string trimmed = text;
  if (trimmed == "0") return ctx->zero();
  SeriesParser parser(trimmed, *ctx);
  return parser.parse();
}

}  // namespace abmod
