#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "cgsb/signature.hpp"

namespace cgsb {

/// An associative normal word b1(n1) b2(n2) ... bk(nk) D^i b(k+1).
///
/// letters() holds b1..b(k+1); joins() holds n1..nk; the D-power sits on the
/// last letter only. Joins are checked against N by the functions that know
/// the signature, not by the constructor.
class NormalWord {
 public:
  NormalWord() = default;
  explicit NormalWord(Letter tail, std::uint32_t dpow = 0) : letters_{tail}, dpow_(dpow) {}
  NormalWord(std::vector<Letter> letters, std::vector<std::uint32_t> joins, std::uint32_t dpow);

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  std::span<const std::uint32_t> joins() const { return joins_; }
  Letter letter(std::size_t i) const { return letters_[i]; }
  std::uint32_t join(std::size_t i) const { return joins_[i]; }
  Letter head() const { return letters_.front(); }
  Letter tail() const { return letters_.back(); }
  std::uint32_t dpow() const { return dpow_; }
  bool d_free() const { return dpow_ == 0; }

  /// Letters [from, to) with their inner joins; D-power only if `to` is the end.
  NormalWord slice(std::size_t from, std::size_t to) const;

  std::size_t hash() const;

  friend std::strong_ordering operator<=>(const NormalWord& u, const NormalWord& v);
  friend bool operator==(const NormalWord& u, const NormalWord& v) = default;

 private:
  std::vector<Letter> letters_;
  std::vector<std::uint32_t> joins_;
  std::uint32_t dpow_ = 0;
};

struct NormalWordHash {
  std::size_t operator()(const NormalWord& w) const { return w.hash(); }
};

/// wt(u) = (|u|, b1, n1, ..., bk, nk, b(k+1), ind(u)) with generators as order keys.
std::vector<std::uint64_t> weight(const NormalWord& u);

/// Lexicographic weight comparison; throws SignatureError if either word uses
/// a generator or join index foreign to `sig`.
std::strong_ordering compare_words(const Signature& sig, const NormalWord& u, const NormalWord& v);

/// True if every letter belongs to `sig` and every join is below N.
bool is_normal(const Signature& sig, const NormalWord& u);
void require_normal(const Signature& sig, const NormalWord& u);

/// u^{\D}: u with the tail D-power removed.
NormalWord strip_tail_D(const NormalWord& u);

/// u D^l.
NormalWord append_D(const NormalWord& u, std::uint32_t l);

/// u^{\D} joined to v with every junction index equal to N-1.
NormalWord splice(const NormalWord& u, const NormalWord& v, unsigned locality);

/// a(n) v for D-free a (possibly empty) and n < N.
NormalWord concat(const NormalWord& a, std::uint32_t n, const NormalWord& v);

}  // namespace cgsb
