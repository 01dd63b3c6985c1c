#include "ffmoment/poly.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "ffmoment/field.hpp"

namespace ffm {

namespace {

void trim(std::vector<std::uint32_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_same_field(const Poly& a, const Poly& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("polynomials over different fields (q=" +
                                std::to_string(a.modulus()) + " vs q=" +
                                std::to_string(b.modulus()) + ")");
}

std::vector<std::uint32_t> to_vec(const Poly& p) {
  return {p.coeffs().begin(), p.coeffs().end()};
}

}  // namespace

Poly::Poly(std::uint32_t q) : q_(q) {}

Poly::Poly(std::uint32_t q, std::vector<std::uint32_t> coeffs) : q_(q), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= q_;
  trim(c_);
}

Poly Poly::constant(std::uint32_t q, std::uint32_t c) { return Poly(q, {c}); }

Poly Poly::t(std::uint32_t q) { return Poly(q, {0, 1}); }

MonicPoly::MonicPoly(Poly p) : p_(std::move(p)) {
  if (!p_.is_monic()) throw std::invalid_argument("polynomial is not monic: " + to_canonical(p_));
}

MonicPoly MonicPoly::one(std::uint32_t q) { return MonicPoly(Poly::constant(q, 1)); }

MonicPoly MonicPoly::from_low(std::uint32_t q, std::vector<std::uint32_t> low) {
  low.push_back(1);
  return MonicPoly(Poly(q, std::move(low)));
}

Poly poly_add(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const auto& f = field_for(a.modulus());
  std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(a.modulus(), std::move(c));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const auto& f = field_for(a.modulus());
  std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(a.modulus(), std::move(c));
}

Poly poly_scale(const Poly& a, std::uint32_t s) {
  const auto& f = field_for(a.modulus());
  auto c = to_vec(a);
  for (auto& x : c) x = f.mul(x, s % a.modulus());
  return Poly(a.modulus(), std::move(c));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.modulus());
  const std::uint64_t q = a.modulus();
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  std::vector<std::uint64_t> acc(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) acc[i + j] = (acc[i + j] + ac[i] * std::uint64_t{bc[j]}) % q;
  }
  return Poly(a.modulus(), std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

MonicPoly poly_mul(const MonicPoly& a, const MonicPoly& b) {
  return MonicPoly(poly_mul(a.poly(), b.poly()));
}

MonicPoly poly_pow(const MonicPoly& a, unsigned e) {
  MonicPoly r = MonicPoly::one(a.modulus());
  MonicPoly x = a;
  while (e) {
    if (e & 1) r = poly_mul(r, x);
    e >>= 1;
    if (e) x = poly_mul(x, x);
  }
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& f = field_for(a.modulus());
  auto r = to_vec(a);
  const int db = b.degree();
  if (a.degree() < db) return {Poly(a.modulus()), a};
  std::vector<std::uint32_t> quot(a.degree() - db + 1, 0);
  const std::uint32_t inv_lead = f.inv(b.lead());
  auto bc = b.coeffs();
  for (int i = a.degree(); i >= db; --i) {
    const std::uint32_t c = f.mul(r[i], inv_lead);
    quot[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, bc[j]));
  }
  return {Poly(a.modulus(), std::move(quot)), Poly(a.modulus(), std::move(r))};
}

Poly poly_rem(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

MonicPoly poly_exact_div(const MonicPoly& a, const MonicPoly& b) {
  auto [quot, rem] = poly_divmod(a.poly(), b.poly());
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return MonicPoly(std::move(quot));
}

Poly make_monic(const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(a, field_for(a.modulus()).inv(a.lead()));
}

MonicPoly poly_gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = poly_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return MonicPoly(make_monic(x));
}

bool divides(const Poly& d, const Poly& a) { return poly_rem(a, d).is_zero(); }

Poly derivative(const Poly& a) {
  if (a.degree() < 1) return Poly(a.modulus());
  const auto& f = field_for(a.modulus());
  std::vector<std::uint32_t> c(a.degree(), 0);
  for (int i = 1; i <= a.degree(); ++i) c[i - 1] = f.mul(a.coeff(i), static_cast<std::uint32_t>(i) % a.modulus());
  return Poly(a.modulus(), std::move(c));
}

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly r = poly_rem(Poly::constant(base.modulus(), 1), m);
  Poly x = poly_rem(base, m);
  while (e) {
    if (e & 1) r = poly_rem(poly_mul(r, x), m);
    e >>= 1;
    if (e) x = poly_rem(poly_mul(x, x), m);
  }
  return r;
}

std::string to_canonical(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const bool digits = p.modulus() < 10;
  for (int i = p.degree(); i >= 0; --i) {
    if (digits) {
      out.push_back(static_cast<char>('0' + p.coeff(i)));
    } else {
      if (i != p.degree()) out.push_back(',');
      out += std::to_string(p.coeff(i));
    }
  }
  return out;
}

Poly parse_poly(std::uint32_t q, std::string_view text) {
  auto bad = [&](const char* why) {
    return std::invalid_argument("bad polynomial string '" + std::string(text) + "': " + why);
  };
  if (text.empty()) throw bad("empty");
  std::vector<std::uint32_t> msb_first;
  if (q < 10) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw bad("expected digits");
      std::uint32_t d = static_cast<std::uint32_t>(ch - '0');
      if (d >= q) throw bad("digit out of range");
      msb_first.push_back(d);
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      auto tok = text.substr(pos, next - pos);
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) throw bad("expected comma-separated integers");
      if (v >= q) throw bad("coefficient out of range");
      msb_first.push_back(v);
      pos = next + 1;
    }
  }
  if (msb_first.size() > 1 && msb_first.front() == 0) throw bad("leading zero");
  std::reverse(msb_first.begin(), msb_first.end());
  return Poly(q, std::move(msb_first));
}

MonicPoly parse_monic(std::uint32_t q, std::string_view text) {
  Poly p = parse_poly(q, text);
  if (!p.is_monic()) throw std::invalid_argument("polynomial string '" + std::string(text) + "' is not monic");
  return MonicPoly(std::move(p));
}

bool is_irreducible(const MonicPoly& f) {
  const int d = f.degree();
  if (d < 1) throw std::domain_error("irreducibility of a constant polynomial");
  if (d == 1) return true;
  const std::uint32_t q = f.modulus();
  const Poly t = Poly::t(q);
  Poly frob = poly_rem(t, f);  // t^{q^i} mod f
  for (int i = 1; i <= d / 2; ++i) {
    frob = poly_powmod(frob, q, f);
    Poly diff = poly_sub(frob, t);
    if (diff.is_zero()) return false;  // f | t^{q^i} - t with i < d
    if (poly_gcd(f, diff).degree() > 0) return false;
  }
  return true;
}

bool is_irreducible_by_trial_division(const MonicPoly& f) {
  const int d = f.degree();
  if (d < 1) throw std::domain_error("irreducibility of a constant polynomial");
  const std::uint32_t q = f.modulus();
  for (int k = 1; k <= d / 2; ++k) {
    std::vector<std::uint32_t> low(k, 0);
    while (true) {
      if (divides(MonicPoly::from_low(q, low), f)) return false;
      int i = 0;
      while (i < k && ++low[i] == q) low[i++] = 0;
      if (i == k) break;
    }
  }
  return true;
}

namespace {

// p-th root of a polynomial whose derivative vanishes: f(t) = g(t^p) = g(t)^p
// over a prime field.
MonicPoly pth_root(const MonicPoly& f) {
  const std::uint32_t p = f.modulus();
  std::vector<std::uint32_t> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
  return MonicPoly(Poly(p, std::move(c)));
}

void squarefree_rec(const MonicPoly& f, int scale, std::vector<std::pair<MonicPoly, int>>& out) {
  if (f.is_one()) return;
  MonicPoly c = poly_gcd(f, derivative(f));
  MonicPoly w = poly_exact_div(f, c);
  int i = 1;
  while (!w.is_one()) {
    MonicPoly y = poly_gcd(w, c);
    MonicPoly z = poly_exact_div(w, y);
    if (!z.is_one()) out.emplace_back(z, i * scale);
    ++i;
    w = y;
    c = poly_exact_div(c, y);
  }
  if (!c.is_one()) squarefree_rec(pth_root(c), scale * static_cast<int>(f.modulus()), out);
}

}  // namespace

std::vector<std::pair<MonicPoly, int>> squarefree_factorization(const MonicPoly& l) {
  std::vector<std::pair<MonicPoly, int>> out;
  squarefree_rec(l, 1, out);
  return out;
}

SquarefreeDecomposition squarefree_decompose(const MonicPoly& l) {
  const std::uint32_t q = l.modulus();
  MonicPoly l1 = MonicPoly::one(q);
  MonicPoly l2 = MonicPoly::one(q);
  for (const auto& [s, mult] : squarefree_factorization(l)) {
    if (mult % 2) l1 = poly_mul(l1, s);
    if (mult / 2) l2 = poly_mul(l2, poly_pow(s, static_cast<unsigned>(mult / 2)));
  }
  return {std::move(l1), std::move(l2)};
}

bool is_square(const MonicPoly& f) {
  for (const auto& fac : squarefree_factorization(f))
    if (fac.second % 2) return false;
  return true;
}

bool is_squarefree(const MonicPoly& f) {
  if (f.degree() < 1) return true;
  return poly_gcd(f, derivative(f)).is_one();
}

}  // namespace ffm
