#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "abmod/bigint.hpp"
#include "abmod/ext_field.hpp"

namespace abmod {

class TruncSeriesCtx;
using SeriesCtxPtr = std::shared_ptr<const TruncSeriesCtx>;

// Valuation of a truncated series element. Finite(q) means the element's
// lowest term sits at exponent q, 0 <= q < cap. AtLeastCap means the element
// vanished in the truncation: its true valuation is >= cap, possibly
// infinite, and the two cases cannot be told apart at this level.
struct Valuation {
  bool finite;
  Rat q;  // exponent if finite, else the cap

  static Valuation at_least_cap(const Rat& cap) { return {false, cap}; }
  static Valuation finite_val(const Rat& v) { return {true, v}; }
};

// Strict order: every Finite(q) with q < cap sits below AtLeastCap(cap).
bool val_less(const Valuation& a, const Valuation& b);
std::string to_string(const Valuation& v);

class TruncSeries;

// F_{p^k}[t^(1/p^e)] / (t^cap), realized as polynomials in the uniformizer
// v = t^(1/p^e) of degree < slots, slots = p^e * cap. cap is a positive
// rational whose denominator divides p^e, so slots is a positive integer.
class TruncSeriesCtx : public std::enable_shared_from_this<TruncSeriesCtx> {
 public:
  using Elem = TruncSeries;

  static SeriesCtxPtr make(ExtFieldPtr field, unsigned e, const Rat& cap);
  static SeriesCtxPtr make(std::uint64_t p, unsigned k, unsigned e,
                           const Rat& cap, std::uint64_t seed = kDefaultSeed);

  std::uint64_t p() const { return field_->p(); }
  unsigned k() const { return field_->k(); }
  unsigned e() const { return e_; }
  const Rat& cap() const { return cap_; }
  std::size_t slots() const { return slots_; }
  const ExtFieldPtr& field() const { return field_; }

  Rat exponent_of_slot(std::size_t i) const;

  TruncSeries zero() const;
  TruncSeries one() const;
  TruncSeries from_int(const Int& v) const;
  TruncSeries from_field(const Fq& a) const;
  // coeff * t^r; zero if r >= cap. r must be >= 0 with denominator | p^e.
  TruncSeries t_power(const Rat& r) const;
  TruncSeries t_power(const Rat& r, const Fq& coeff) const;
  // The marked element t = v^(p^e); equals zero when p^e >= slots.
  TruncSeries t() const;

  TruncSeries add(const TruncSeries& a, const TruncSeries& b) const;
  TruncSeries sub(const TruncSeries& a, const TruncSeries& b) const;
  TruncSeries mul(const TruncSeries& a, const TruncSeries& b) const;
  TruncSeries neg(const TruncSeries& a) const;
  bool eq(const TruncSeries& a, const TruncSeries& b) const;
  bool is_zero(const TruncSeries& a) const;

  Int size() const;  // (p^k)^slots
  TruncSeries element_at(std::uint64_t i) const;
  std::uint64_t index_of(const TruncSeries& a) const;

  std::string to_string(const TruncSeries& a) const;

  bool same_structure(const TruncSeriesCtx& o) const;

 private:
  TruncSeriesCtx(ExtFieldPtr field, unsigned e, Rat cap, std::size_t slots);
  void check(const TruncSeries& a) const;

  ExtFieldPtr field_;
  unsigned e_;
  Rat cap_;
  std::size_t slots_;
};

// Element: coefficient vector over F_{p^k} indexed by v-exponent,
// c.size() == ctx->slots() always.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(SeriesCtxPtr ctx, std::vector<Fq> coeffs);

  const SeriesCtxPtr& ctx() const { return ctx_; }
  const std::vector<Fq>& coeffs() const { return c_; }
  std::vector<Fq>& coeffs() { return c_; }

  Valuation valuation() const;
  bool is_zero() const;

 private:
  SeriesCtxPtr ctx_;
  std::vector<Fq> c_;
};

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
bool operator==(const TruncSeries& a, const TruncSeries& b);
inline bool operator!=(const TruncSeries& a, const TruncSeries& b) {
  return !(a == b);
}

inline Valuation series_valuation(const TruncSeries& a) {
  return a.valuation();
}

// Context for the image of rescaling by q: exponents scale by q, the cap
// scales along, so no term below the old cap is lost.
SeriesCtxPtr rescaled_ctx(const SeriesCtxPtr& ctx, const Rat& q);

// Field embedding fixing F_{p^k}, t -> t^q. q > 0 with p-power denominator.
TruncSeries rescale(const TruncSeries& a, const Rat& q);

// Inverse of TruncSeriesCtx::to_string, for the CLI witness roundtrip.
TruncSeries parse_series(const SeriesCtxPtr& ctx, const std::string& text);

}  // namespace abmod
