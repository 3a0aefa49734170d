#include "abmod/ratpoly.hpp"

#include "abmod/errors.hpp"

namespace abmod {

PrimitiveForm primitive_form(const UPoly<Rat>& f) {
  PrimitiveForm out;
  if (f.is_zero()) return out;
  Int den_lcm = 1;
  for (const auto& c : f.c)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  UPoly<Int> zf;
  zf.c.reserve(f.c.size());
  for (const auto& c : f.c) {
    Rat scaled = c * Rat(den_lcm);
    if (scaled.get_den() != 1) throw InternalError("primitive_form: lcm bug");
    zf.c.push_back(scaled.get_num());
  }
  Int content = 0;
  for (const auto& c : zf.c)
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (sgn(zf.c.back()) < 0) content = -content;
  for (auto& c : zf.c) c /= content;
  out.num = content;
  out.den = den_lcm;
  out.prim = std::move(zf);
  return out;
}

UPoly<Rat> upoly_rat_from_int(const UPoly<Int>& f) {
  UPoly<Rat> r;
  r.c.reserve(f.c.size());
  for (const auto& c : f.c) r.c.push_back(Rat(c));
  return r;
}

UPoly<Int> upoly_int_from_z(const UPoly<Int>& f) { return f; }

std::vector<std::pair<UPoly<Rat>, unsigned>> yun_squarefree(
    const UPoly<Rat>& f) {
  RatField Q;
  std::vector<std::pair<UPoly<Rat>, unsigned>> out;
  if (f.degree() <= 0) return out;
  UPoly<Rat> monic = upoly_make_monic(Q, f);
  UPoly<Rat> df = upoly_derivative(Q, monic);
  UPoly<Rat> a0 = upoly_gcd(Q, monic, df);
  if (a0.degree() == 0) {
    out.emplace_back(monic, 1);
    return out;
  }
  UPoly<Rat> b = upoly_div(Q, monic, a0);
  UPoly<Rat> c = upoly_div(Q, df, a0);
  UPoly<Rat> d = upoly_sub(Q, c, upoly_derivative(Q, b));
  unsigned i = 1;
  while (b.degree() > 0) {
    UPoly<Rat> a = upoly_gcd(Q, b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = upoly_div(Q, b, a);
    c = upoly_div(Q, d, a);
    d = upoly_sub(Q, c, upoly_derivative(Q, b));
    ++i;
  }
  return out;
}

std::vector<UPoly<Rat>> coprime_refine(std::vector<UPoly<Rat>> polys) {
  RatField Q;
  std::vector<UPoly<Rat>> work;
  for (auto& p : polys)
    if (p.degree() > 0) work.push_back(upoly_make_monic(Q, p));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
        if (upoly_eq(Q, work[i], work[j])) {
          work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          break;
        }
        UPoly<Rat> g = upoly_gcd(Q, work[i], work[j]);
        if (g.degree() == 0) continue;
        UPoly<Rat> qi = upoly_div(Q, work[i], g);
        UPoly<Rat> qj = upoly_div(Q, work[j], g);
        std::vector<UPoly<Rat>> next;
        for (std::size_t t = 0; t < work.size(); ++t)
          if (t != i && t != j) next.push_back(work[t]);
        if (qi.degree() > 0) next.push_back(qi);
        if (qj.degree() > 0) next.push_back(qj);
        next.push_back(g);
        work = std::move(next);
        changed = true;
      }
    }
  }
  // canonical deterministic order: degree then coefficient text
  std::sort(work.begin(), work.end(),
            [&](const UPoly<Rat>& a, const UPoly<Rat>& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              for (std::size_t i = a.c.size(); i-- > 0;) {
                if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
              }
              return false;
            });
  return work;
}

RatOrdProfile rat_ord_profile(const std::vector<UPoly<Rat>>& inputs) {
  RatField Q;
  RatOrdProfile out;
  std::vector<UPoly<Rat>> components;
  for (const auto& f : inputs) {
    out.input_is_zero.push_back(f.is_zero());
    if (f.is_zero() || f.degree() == 0) continue;
    for (auto& [s, m] : yun_squarefree(f)) components.push_back(s);
  }
  out.basis = coprime_refine(std::move(components));
  for (const auto& f : inputs) {
    std::vector<unsigned> row(out.basis.size(), 0);
    Rat residual = Rat(0);
    if (!f.is_zero()) {
      UPoly<Rat> rest = f;
      for (std::size_t j = 0; j < out.basis.size(); ++j) {
        unsigned m = 0;
        while (true) {
          auto [q, r] = upoly_divmod(Q, rest, out.basis[j]);
          if (!r.is_zero()) break;
          rest = q;
          ++m;
        }
        row[j] = m;
      }
      if (rest.degree() != 0)
        throw InternalError("ord profile: basis does not exhaust an input");
      residual = rest.c[0];
    }
    out.mult.push_back(std::move(row));
    out.residual.push_back(residual);
  }
  return out;
}

namespace {

Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(m[swap_row][k]) == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        Int q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = q;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

Int resultant_int(const UPoly<Int>& a, const UPoly<Int>& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  if (m == 0) return int_pow(a.c[0], static_cast<unsigned long>(n));
  if (n == 0) return int_pow(b.c[0], static_cast<unsigned long>(m));
  const std::size_t dim = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Int>> sylv(dim, std::vector<Int>(dim, Int(0)));
  for (int row = 0; row < n; ++row)
    for (int i = 0; i <= m; ++i)
      sylv[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + i)] =
          a.c[static_cast<std::size_t>(m - i)];
  for (int row = 0; row < m; ++row)
    for (int i = 0; i <= n; ++i)
      sylv[static_cast<std::size_t>(n + row)]
          [static_cast<std::size_t>(row + i)] =
              b.c[static_cast<std::size_t>(n - i)];
  return bareiss_det(std::move(sylv));
}

Int discriminant_int(const UPoly<Int>& f) {
  const int d = f.degree();
  if (d <= 1) return 1;
  IntRing Z;
  UPoly<Int> df;
  df.c.resize(f.c.size() - 1, Int(0));
  for (std::size_t i = 1; i < f.c.size(); ++i)
    df.c[i - 1] = f.c[i] * Int(static_cast<unsigned long>(i));
  upoly_trim(Z, df);
  Int res = resultant_int(f, df);
  Int q;
  mpz_divexact(q.get_mpz_t(), res.get_mpz_t(), f.c.back().get_mpz_t());
  int s = (d * (d - 1) / 2) % 2;
  return s == 0 ? q : -q;
}

}  // namespace abmod
