#include "ffmoment/lfunc.hpp"

#include <charconv>
#include <stdexcept>

namespace ffm {

namespace {

void check_prime_modulus(const MonicPoly& P) {
  if (P.degree() < 3 || P.degree() % 2 == 0)
    throw std::invalid_argument("l_polynomial: P must have odd degree >= 3, got degree " +
                                std::to_string(P.degree()));
  if (!is_irreducible(P)) throw std::invalid_argument("l_polynomial: P is reducible: " + to_canonical(P));
}

}  // namespace

LPolynomial l_polynomial(const MonicPoly& P, CharSumStrategy strategy, IrreducibleCatalog& catalog) {
  check_prime_modulus(P);
  const int g = (P.degree() - 1) / 2;
  checked_pow(P.modulus(), 2 * g);
  LPolynomial L{P.modulus(), g, char_sums(P, 2 * g, strategy, catalog)};
  return L;
}

LPolynomial l_polynomial_from_characters(std::uint32_t q, int g,
                                         std::span<const std::vector<std::int8_t>> chars_by_degree) {
  checked_pow(q, 2 * g);
  return LPolynomial{q, g, newton_coefficients(chars_by_degree, 2 * g)};
}

bool check_functional_equation(const LPolynomial& L) {
  if (L.g < 0 || L.coeffs.size() != static_cast<std::size_t>(2 * L.g + 1)) return false;
  if (L.coeffs[0] != 1) return false;
  for (int n = 0; n <= L.g; ++n) {
    const BigInt rhs = BigInt(static_cast<long>(L.coeffs[n])) * pow(BigInt(L.q), static_cast<unsigned>(L.g - n));
    if (BigInt(static_cast<long>(L.coeffs[2 * L.g - n])) != rhs) return false;
  }
  return true;
}

QSqrtValue central_derivative(const LPolynomial& L, int k, DerivativeMethod method) {
  if (k < 0) throw std::invalid_argument("central_derivative: negative order");
  const std::uint32_t q = L.q;
  const int g = L.g;
  if (L.coeffs.size() != static_cast<std::size_t>(2 * g + 1))
    throw std::invalid_argument("central_derivative: malformed L-polynomial");
  auto term = [&](int n, const BigInt& weight) {
    return QSqrtValue::q_power_neg_half(q, n) * BigRational(weight * L.coeffs[n]);
  };
  QSqrtValue total(q);
  if (method == DerivativeMethod::direct) {
    for (int n = 0; n <= 2 * g; ++n) total += term(n, pow(BigInt(-n), static_cast<unsigned>(k)));
    return total;
  }
  const BigInt sign = (k % 2) ? -1 : 1;
  for (int n = 0; n <= g; ++n) total += term(n, sign * pow(BigInt(n), static_cast<unsigned>(k)));
  for (int m = 0; m <= k; ++m) {
    QSqrtValue inner(q);
    for (int n = 0; n < g; ++n) inner += term(n, pow(BigInt(n), static_cast<unsigned>(m)));
    total += inner * BigRational(binomial(k, m) * pow(BigInt(-2 * g), static_cast<unsigned>(k - m)));
  }
  return total;
}

std::string format_lpoly_record(const MonicPoly& P, const LPolynomial& L) {
  std::string out = "P=" + to_canonical(P) + " c=";
  for (std::size_t i = 0; i < L.coeffs.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(L.coeffs[i]);
  }
  return out;
}

std::pair<MonicPoly, LPolynomial> parse_lpoly_record(std::uint32_t q, const std::string& line) {
  auto bad = [&] { return std::invalid_argument("bad L-polynomial record '" + line + "'"); };
  if (line.rfind("P=", 0) != 0) throw bad();
  const auto sep = line.find(" c=");
  if (sep == std::string::npos) throw bad();
  MonicPoly P = parse_monic(q, line.substr(2, sep - 2));
  if (P.degree() % 2 == 0) throw bad();
  LPolynomial L{q, (P.degree() - 1) / 2, {}};
  std::string_view rest(line);
  rest.remove_prefix(sep + 3);
  while (true) {
    const auto comma = rest.find(',');
    auto tok = rest.substr(0, comma);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) throw bad();
    L.coeffs.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (L.coeffs.size() != static_cast<std::size_t>(2 * L.g + 1)) throw bad();
  return {std::move(P), std::move(L)};
}

}  // namespace ffm
