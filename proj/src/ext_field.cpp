#include "abmod/ext_field.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "abmod/errors.hpp"
#include "abmod/factor.hpp"

namespace abmod {

namespace {

// View an element's coefficient vector as a UPoly<Fp>.
UPoly<Fp> as_upoly(const PrimeField& base, const std::vector<std::uint64_t>& c) {
  UPoly<Fp> f;
  f.c.reserve(c.size());
  for (auto v : c) f.c.push_back(base.from_uint(v));
  upoly_trim(base, f);
  return f;
}

}  // namespace

ExtField::ExtField(std::uint64_t p, unsigned k, UPoly<Fp> h)
    : base_(p), k_(k), modulus_(std::move(h)) {}

ExtFieldPtr ExtField::with_modulus(std::uint64_t p, UPoly<Fp> h) {
  PrimeField base(p);
  if (h.degree() < 1) throw InputError("extension modulus must be nonconstant");
  if (!base.eq(h.c.back(), base.one()))
    throw InputError("extension modulus must be monic");
  if (!is_irreducible(base, h))
    throw InputError("extension modulus is not irreducible");
  unsigned k = static_cast<unsigned>(h.degree());
  return ExtFieldPtr(new ExtField(p, k, std::move(h)));
}

ExtFieldPtr ExtField::make(std::uint64_t p, unsigned k, std::uint64_t seed) {
  if (k < 1) throw InputError("extension degree must be >= 1");
  static std::mutex mu;
  static std::map<std::tuple<std::uint64_t, unsigned, std::uint64_t>,
                  ExtFieldPtr>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, k, seed);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  PrimeField base(p);  // validates primality
  UPoly<Fp> h;
  if (k == 1) {
    h = upoly_x(base);
  } else {
    Rng rng(mix_seed(seed, p, k));
    while (true) {
      std::vector<Fp> cs;
      for (unsigned i = 0; i < k; ++i)
        cs.push_back(base.element_at(rng.below(p)));
      cs.push_back(base.one());
      UPoly<Fp> cand{std::move(cs)};
      if (is_irreducible(base, cand)) {
        h = std::move(cand);
        break;
      }
    }
  }
  ExtFieldPtr F(new ExtField(p, k, std::move(h)));
  cache.emplace(key, F);
  return F;
}

bool ExtField::same_structure(const ExtField& o) const {
  if (p() != o.p() || k_ != o.k_) return false;
  return upoly_eq(base_, modulus_, o.modulus_);
}

void ExtField::check(const Fq& a) const {
  if (!a.F) throw InputError("uninitialized extension-field element");
  if (a.F.get() == this) return;
  if (!same_structure(*a.F))
    throw InputError("mixed extension-field contexts");
}

void ExtField::check2(const Fq& a, const Fq& b) const {
  check(a);
  check(b);
}

Int ExtField::size() const {
  return int_pow(Int(static_cast<unsigned long>(p())), k_);
}

Fq ExtField::zero() const {
  return {shared_from_this(), std::vector<std::uint64_t>(k_, 0)};
}

Fq ExtField::one() const {
  auto z = zero();
  if (p() > 1) z.c[0] = 1 % p();
  return z;
}

Fq ExtField::gen() const {
  auto z = zero();
  if (k_ >= 2) z.c[1] = 1;
  return z;  // for k == 1, x = 0 modulo h = x
}

Fq ExtField::from_int(const Int& v) const {
  auto z = zero();
  z.c[0] = base_.from_int(v).v;
  return z;
}

Fq ExtField::from_base(const Fp& v) const {
  if (v.p != p()) throw InputError("base-field element from wrong prime");
  auto z = zero();
  z.c[0] = v.v;
  return z;
}

Fq ExtField::from_coeffs(std::vector<std::uint64_t> coeffs) const {
  if (coeffs.size() > k_) throw InputError("coefficient vector too long");
  coeffs.resize(k_, 0);
  for (auto& v : coeffs) v %= p();
  return {shared_from_this(), std::move(coeffs)};
}

Fq ExtField::add(const Fq& a, const Fq& b) const {
  check2(a, b);
  Fq r = a;
  for (unsigned i = 0; i < k_; ++i) {
    r.c[i] += b.c[i];
    if (r.c[i] >= p()) r.c[i] -= p();
  }
  return r;
}

Fq ExtField::sub(const Fq& a, const Fq& b) const {
  check2(a, b);
  Fq r = a;
  for (unsigned i = 0; i < k_; ++i) {
    r.c[i] = r.c[i] >= b.c[i] ? r.c[i] - b.c[i] : r.c[i] + p() - b.c[i];
  }
  return r;
}

Fq ExtField::neg(const Fq& a) const {
  check(a);
  Fq r = a;
  for (unsigned i = 0; i < k_; ++i) r.c[i] = r.c[i] == 0 ? 0 : p() - r.c[i];
  return r;
}

Fq ExtField::mul(const Fq& a, const Fq& b) const {
  check2(a, b);
  UPoly<Fp> fa = as_upoly(base_, a.c);
  UPoly<Fp> fb = as_upoly(base_, b.c);
  UPoly<Fp> prod = upoly_mod(base_, upoly_mul(base_, fa, fb), modulus_);
  Fq r = zero();
  for (std::size_t i = 0; i < prod.c.size(); ++i) r.c[i] = prod.c[i].v;
  return r;
}

Fq ExtField::inv(const Fq& a) const {
  check(a);
  if (is_zero(a)) throw InputError("division by zero in F_{p^k}");
  UPoly<Fp> fa = as_upoly(base_, a.c);
  auto g = upoly_ext_gcd(base_, fa, modulus_);
  if (g.d.degree() != 0)
    throw InternalError("extension modulus not irreducible");
  UPoly<Fp> r = upoly_mod(base_, g.u, modulus_);
  Fq out = zero();
  for (std::size_t i = 0; i < r.c.size(); ++i) out.c[i] = r.c[i].v;
  return out;
}

Fq ExtField::pow(const Fq& a, const Int& e) const {
  check(a);
  if (sgn(e) < 0) return pow(inv(a), -e);
  Fq acc = one();
  Fq base = a;
  if (sgn(e) == 0) return acc;
  const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (mp_bitcnt_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = mul(acc, base);
    if (i + 1 < bits) base = mul(base, base);
  }
  return acc;
}

Fq ExtField::frobenius(const Fq& a) const {
  return pow(a, Int(static_cast<unsigned long>(p())));
}

bool ExtField::eq(const Fq& a, const Fq& b) const {
  check2(a, b);
  return a.c == b.c;
}

bool ExtField::is_zero(const Fq& a) const {
  check(a);
  return abmod::is_zero(a);
}

Fq ExtField::element_at(std::uint64_t i) const {
  Fq r = zero();
  for (unsigned d = 0; d < k_ && i > 0; ++d) {
    r.c[d] = i % p();
    i /= p();
  }
  return r;
}

std::uint64_t ExtField::index_of(const Fq& a) const {
  check(a);
  unsigned __int128 acc = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    acc += scale * a.c[i];
    scale *= p();
  }
  const unsigned __int128 cap = ~std::uint64_t{0};
  return acc > cap ? ~std::uint64_t{0} : static_cast<std::uint64_t>(acc);
}

std::string ExtField::to_string(const Fq& a) const {
  check(a);
  if (k_ == 1) return std::to_string(a.c[0]);
  std::string out;
  for (unsigned i = k_; i-- > 0;) {
    if (a.c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(a.c[i]);
    } else {
      if (a.c[i] != 1) out += std::to_string(a.c[i]) + "*";
      out += "w";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {
const ExtField& ctx_of(const Fq& a) {
  if (!a.F) throw InputError("uninitialized extension-field element");
  return *a.F;
}
}  // namespace

Fq operator+(const Fq& a, const Fq& b) { return ctx_of(a).add(a, b); }
Fq operator-(const Fq& a, const Fq& b) { return ctx_of(a).sub(a, b); }
Fq operator-(const Fq& a) { return ctx_of(a).neg(a); }
Fq operator*(const Fq& a, const Fq& b) { return ctx_of(a).mul(a, b); }
Fq operator/(const Fq& a, const Fq& b) {
  return ctx_of(a).mul(a, ctx_of(b).inv(b));
}
bool operator==(const Fq& a, const Fq& b) { return ctx_of(a).eq(a, b); }

}  // namespace abmod
