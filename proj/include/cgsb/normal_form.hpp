#pragma once

#include <cstdint>

#include "cgsb/polynomial.hpp"
#include "cgsb/raw_expr.hpp"
#include "cgsb/signature.hpp"

namespace cgsb {

/// D^j applied to a normal word or polynomial, written in normal words.
Polynomial apply_D(const NormalWord& u, std::uint32_t j = 1);
Polynomial apply_D(const Polynomial& p, std::uint32_t j = 1);

/// Normal form of the right-normed product [u](n)[v].
Polynomial multiply(const Signature& sig, const NormalWord& u, std::uint64_t n, const NormalWord& v);
Polynomial multiply(const Signature& sig, const Polynomial& f, std::uint64_t n, const NormalWord& v);
Polynomial multiply(const Signature& sig, const Polynomial& f, std::uint64_t n, const Polynomial& g);

/// [a(n) p] for a D-free word a (empty allowed, then p is returned) and n < N.
Polynomial prefix(const NormalWord& a, std::uint32_t n, const Polynomial& p);

/// Rewrites an arbitrary expression into the normal-word basis of C(B,N).
/// Throws SignatureError on foreign generators.
Polynomial normalize(const RawExpr& e, const Signature& sig);

/// M with multiply(u, n, v) = 0 for every n >= M:
///   M = |v|(N-1) + 1 + ind(v) + ind(u).
std::uint64_t locality_bound(const Signature& sig, const NormalWord& u, const NormalWord& v);

/// Exact n!/(n-i)!, zero when i > n.
mpz_class falling_factorial(std::uint64_t n, std::uint64_t i);
mpz_class binomial(std::uint64_t n, std::uint64_t k);

/// Clears the per-thread product cache (used by benchmarks).
void clear_product_cache();

}  // namespace cgsb
