#include "cgsb/normal_form.hpp"

#include <unordered_map>

namespace cgsb {

mpz_class falling_factorial(std::uint64_t n, std::uint64_t i) {
  if (i > n) return 0;
  mpz_class r = 1;
  for (std::uint64_t t = 0; t < i; ++t) r *= mpz_class(std::to_string(n - t));
  return r;
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

NormalWord decrement_join(const NormalWord& u, std::size_t j) {
  std::vector<Letter> ls(u.letters().begin(), u.letters().end());
  std::vector<std::uint32_t> js(u.joins().begin(), u.joins().end());
  --js[j];
  return NormalWord(std::move(ls), std::move(js), u.dpow());
}

// D(b1(n1) X) = -n1 b1(n1-1) X + b1(n1) DX, unrolled along the word.
void add_D_once(Polynomial& out, const Rational& c, const NormalWord& u) {
  out.add_term(c, append_D(u, 1));
  for (std::size_t j = 0; j < u.joins().size(); ++j) {
    std::uint32_t n = u.join(j);
    if (n > 0) out.add_term(-c * n, decrement_join(u, j));
  }
}

struct ProductKey {
  std::uint64_t sig;
  std::uint64_t letter;
  std::uint64_t n;
  NormalWord v;
  bool operator==(const ProductKey&) const = default;
};

struct ProductKeyHash {
  std::size_t operator()(const ProductKey& k) const {
    std::size_t h = k.v.hash();
    h ^= std::hash<std::uint64_t>{}(k.letter) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint64_t>{}(k.n) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint64_t>{}(k.sig) + (h << 6) + (h >> 2);
    return h;
  }
};

constexpr std::size_t kCacheLimit = 1 << 18;

std::unordered_map<ProductKey, Polynomial, ProductKeyHash>& product_cache() {
  thread_local std::unordered_map<ProductKey, Polynomial, ProductKeyHash> cache;
  return cache;
}

Polynomial word_prefix(Letter b, std::uint32_t n, const Polynomial& p) { return prefix(NormalWord(b), n, p); }

Polynomial generator_product(const Signature& sig, Letter b, std::uint64_t n, const NormalWord& v);

Polynomial generator_product_uncached(const Signature& sig, Letter b, std::uint64_t n, const NormalWord& v) {
  const unsigned N = sig.locality();
  if (n < N) return Polynomial(concat(NormalWord(b), static_cast<std::uint32_t>(n), v));

  if (v.length() == 1) {
    // b(n) b' = 0 by locality; b(n) D^j b' = D(b(n) D^{j-1} b') + n b(n-1) D^{j-1} b'.
    if (v.dpow() == 0) return {};
    NormalWord lower(v.tail(), v.dpow() - 1);
    Polynomial r = apply_D(generator_product(sig, b, n, lower), 1);
    r.add_scaled(Rational(mpz_class(std::to_string(n))), generator_product(sig, b, n - 1, lower));
    return r;
  }

  // n >= N: b(n)(b'(m) V) = -sum_{k>=1} (-1)^k C(n,k) b(n-k)(b'(m+k) V).
  Letter b2 = v.head();
  std::uint64_t m = v.join(0);
  NormalWord rest = v.slice(1, v.length());
  Polynomial r;
  for (std::uint64_t k = 1; k <= n; ++k) {
    Polynomial inner = generator_product(sig, b2, m + k, rest);
    if (inner.is_zero()) continue;
    mpz_class c = binomial(n, k);
    if (k % 2 == 0) c = -c;
    Rational coeff(c);
    for (const auto& t : inner.terms()) r.add_scaled(coeff * t.coeff, generator_product(sig, b, n - k, t.word));
  }
  return r;
}

Polynomial generator_product(const Signature& sig, Letter b, std::uint64_t n, const NormalWord& v) {
  if (n < sig.locality()) return generator_product_uncached(sig, b, n, v);
  auto& cache = product_cache();
  ProductKey key{sig.id(), b.key, n, v};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Polynomial r = generator_product_uncached(sig, b, n, v);
  if (cache.size() >= kCacheLimit) cache.clear();
  cache.emplace(std::move(key), r);
  return r;
}

}  // namespace

void clear_product_cache() { product_cache().clear(); }

Polynomial apply_D(const NormalWord& u, std::uint32_t j) { return apply_D(Polynomial(u), j); }

Polynomial apply_D(const Polynomial& p, std::uint32_t j) {
  Polynomial cur = p;
  for (std::uint32_t s = 0; s < j; ++s) {
    Polynomial next;
    for (const auto& t : cur.terms()) add_D_once(next, t.coeff, t.word);
    cur = std::move(next);
  }
  return cur;
}

Polynomial prefix(const NormalWord& a, std::uint32_t n, const Polynomial& p) {
  if (a.empty()) return p;
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({concat(a, n, t.word), t.coeff});
  return Polynomial::from_terms(std::move(out));
}

Polynomial multiply(const Signature& sig, const NormalWord& u, std::uint64_t n, const NormalWord& v) {
  if (u.length() == 1) {
    // D^i b (n) X = (-1)^i n!/(n-i)! b(n-i) X.
    const std::uint32_t i = u.dpow();
    if (i > n) return {};
    mpz_class c = falling_factorial(n, i);
    if (i % 2 == 1) c = -c;
    Polynomial r = generator_product(sig, u.tail(), n - i, v);
    return Rational(c) * std::move(r);
  }
  // (b(m) U)(n) V = sum_{k=0..m} (-1)^k C(m,k) b(m-k)(U(n+k) V).
  const Letter b = u.head();
  const std::uint32_t m = u.join(0);
  NormalWord rest = u.slice(1, u.length());
  Polynomial r;
  for (std::uint32_t k = 0; k <= m; ++k) {
    Polynomial inner = multiply(sig, rest, n + k, v);
    if (inner.is_zero()) continue;
    mpz_class c = binomial(m, k);
    if (k % 2 == 1) c = -c;
    r.add_scaled(Rational(c), word_prefix(b, m - k, inner));
  }
  return r;
}

Polynomial multiply(const Signature& sig, const Polynomial& f, std::uint64_t n, const NormalWord& v) {
  Polynomial r;
  for (const auto& t : f.terms()) r.add_scaled(t.coeff, multiply(sig, t.word, n, v));
  return r;
}

Polynomial multiply(const Signature& sig, const Polynomial& f, std::uint64_t n, const Polynomial& g) {
  Polynomial r;
  for (const auto& s : f.terms())
    for (const auto& t : g.terms()) r.add_scaled(s.coeff * t.coeff, multiply(sig, s.word, n, t.word));
  return r;
}

Polynomial normalize(const RawExpr& e, const Signature& sig) {
  return std::visit(
      [&sig](const auto& node) -> Polynomial {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, RawExpr::Gen>) {
          if (!sig.contains(node.letter)) throw SignatureError("unknown generator in expression");
          return Polynomial(NormalWord(node.letter));
        } else if constexpr (std::is_same_v<T, RawExpr::Deriv>) {
          return apply_D(normalize(*node.arg, sig), node.power);
        } else if constexpr (std::is_same_v<T, RawExpr::Prod>) {
          Polynomial left = normalize(*node.left, sig);
          Polynomial right = normalize(*node.right, sig);
          return multiply(sig, left, node.n, right);
        } else {
          Polynomial r;
          for (const auto& [c, sub] : node.terms) r.add_scaled(c, normalize(*sub, sig));
          return r;
        }
      },
      e.node());
}

std::uint64_t locality_bound(const Signature& sig, const NormalWord& u, const NormalWord& v) {
  const std::uint64_t N = sig.locality();
  return v.length() * (N - 1) + 1 + v.dpow() + u.dpow();
}

}  // namespace cgsb
