#include "abmod/mpoly.hpp"

namespace abmod {

ZPoly zpoly_from_upoly(const UPoly<Int>& f, unsigned nvars, unsigned var) {
  ZPoly r(nvars);
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (sgn(f.c[i]) == 0) continue;
    Exp e(nvars, 0);
    e[var] = static_cast<std::uint32_t>(i);
    r.add_term(std::move(e), f.c[i]);
  }
  return r;
}

std::optional<UPoly<Int>> zpoly_to_upoly(const ZPoly& f, unsigned var) {
  UPoly<Int> out;
  for (const auto& [e, c] : f.terms()) {
    for (unsigned i = 0; i < f.nvars(); ++i) {
      if (i != var && e[i] != 0) return std::nullopt;
    }
    std::uint32_t d = var < f.nvars() ? e[var] : 0;
    if (out.c.size() <= d) out.c.resize(d + 1, Int(0));
    out.c[d] = c;
  }
  return out;
}

Int zpoly_content(const ZPoly& f) {
  Int g(0);
  for (const auto& [e, c] : f.terms()) {
    Int a = abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  return g;
}

std::string zpoly_to_string(const ZPoly& f,
                            const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string out;
  // print from the leading term down
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = abs(c);
    bool neg = sgn(c) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (unsigned i = 0; i < f.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "v" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace abmod
