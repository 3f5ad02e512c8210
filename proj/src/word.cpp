#include "cgsb/word.hpp"

#include <stdexcept>

namespace cgsb {

NormalWord::NormalWord(std::vector<Letter> letters, std::vector<std::uint32_t> joins, std::uint32_t dpow)
    : letters_(std::move(letters)), joins_(std::move(joins)), dpow_(dpow) {
  if (letters_.empty()) throw std::invalid_argument("normal word needs at least one letter");
  if (joins_.size() + 1 != letters_.size()) throw std::invalid_argument("normal word join count mismatch");
}

NormalWord NormalWord::slice(std::size_t from, std::size_t to) const {
  std::vector<Letter> ls(letters_.begin() + from, letters_.begin() + to);
  std::vector<std::uint32_t> js(joins_.begin() + from, joins_.begin() + (to - 1));
  return NormalWord(std::move(ls), std::move(js), to == letters_.size() ? dpow_ : 0);
}

std::size_t NormalWord::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ letters_.size();
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    mix(letters_[i].key);
    if (i < joins_.size()) mix(joins_[i]);
  }
  mix(dpow_);
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const NormalWord& u, const NormalWord& v) {
  if (auto c = u.letters_.size() <=> v.letters_.size(); c != 0) return c;
  const std::size_t n = u.letters_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = u.letters_[i] <=> v.letters_[i]; c != 0) return c;
    if (i + 1 < n)
      if (auto c = u.joins_[i] <=> v.joins_[i]; c != 0) return c;
  }
  return u.dpow_ <=> v.dpow_;
}

std::vector<std::uint64_t> weight(const NormalWord& u) {
  std::vector<std::uint64_t> wt{u.length()};
  for (std::size_t i = 0; i < u.length(); ++i) {
    wt.push_back(u.letter(i).key);
    if (i + 1 < u.length()) wt.push_back(u.join(i));
  }
  wt.push_back(u.dpow());
  return wt;
}

bool is_normal(const Signature& sig, const NormalWord& u) {
  if (u.empty()) return false;
  for (Letter l : u.letters())
    if (!sig.contains(l)) return false;
  for (auto n : u.joins())
    if (n >= sig.locality()) return false;
  return true;
}

void require_normal(const Signature& sig, const NormalWord& u) {
  if (!is_normal(sig, u)) throw SignatureError("word is not a normal word over this signature");
}

std::strong_ordering compare_words(const Signature& sig, const NormalWord& u, const NormalWord& v) {
  require_normal(sig, u);
  require_normal(sig, v);
  return u <=> v;
}

NormalWord strip_tail_D(const NormalWord& u) {
  return NormalWord(std::vector<Letter>(u.letters().begin(), u.letters().end()),
                    std::vector<std::uint32_t>(u.joins().begin(), u.joins().end()), 0);
}

NormalWord append_D(const NormalWord& u, std::uint32_t l) {
  return NormalWord(std::vector<Letter>(u.letters().begin(), u.letters().end()),
                    std::vector<std::uint32_t>(u.joins().begin(), u.joins().end()), u.dpow() + l);
}

NormalWord splice(const NormalWord& u, const NormalWord& v, unsigned locality) {
  std::vector<Letter> ls(u.letters().begin(), u.letters().end());
  std::vector<std::uint32_t> js(u.joins().begin(), u.joins().end());
  ls.insert(ls.end(), v.letters().begin(), v.letters().end());
  js.push_back(locality - 1);
  js.insert(js.end(), v.length() - 1, locality - 1);
  return NormalWord(std::move(ls), std::move(js), v.dpow());
}

NormalWord concat(const NormalWord& a, std::uint32_t n, const NormalWord& v) {
  if (a.empty()) return v;
  std::vector<Letter> ls(a.letters().begin(), a.letters().end());
  std::vector<std::uint32_t> js(a.joins().begin(), a.joins().end());
  ls.insert(ls.end(), v.letters().begin(), v.letters().end());
  js.push_back(n);
  js.insert(js.end(), v.joins().begin(), v.joins().end());
  return NormalWord(std::move(ls), std::move(js), v.dpow());
}

}  // namespace cgsb
