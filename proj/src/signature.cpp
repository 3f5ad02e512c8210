#include "cgsb/signature.hpp"

#include <memory>

namespace cgsb {

namespace {

constexpr std::uint64_t kIndexMask = (std::uint64_t{1} << Signature::kIndexBits) - 1;

std::uint64_t fingerprint(unsigned locality, const std::vector<GeneratorName>& names, IndexOrder order) {
  // FNV-1a over the defining data; two signatures built from the same data compare equal.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(locality);
  mix(static_cast<std::uint64_t>(order));
  for (const auto& n : names) {
    for (char c : n.name) mix(static_cast<unsigned char>(c));
    mix(n.indexed ? 0xabcd : 0x1234);
  }
  return h;
}

}  // namespace

Signature::Signature(unsigned locality, std::vector<GeneratorName> names_ascending, IndexOrder order)
    : locality_(locality), names_(std::move(names_ascending)), order_(order) {
  if (locality_ < 1) throw SignatureError("locality bound N must be at least 1");
  if (names_.empty()) throw SignatureError("signature has no generators");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].name.empty()) throw SignatureError("empty generator name");
    if (names_[i].name == "D") throw SignatureError("'D' is reserved for the derivation");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j].name == names_[i].name) throw SignatureError("duplicate generator name '" + names_[i].name + "'");
  }
  id_ = fingerprint(locality_, names_, order_);
}

Signature Signature::plain(unsigned locality, const std::vector<std::string>& ascending) {
  std::vector<GeneratorName> names;
  for (const auto& n : ascending) names.push_back({n, false});
  return Signature(locality, std::move(names));
}

void Signature::set_custom_order(CustomIndexOrder order) {
  order_ = IndexOrder::Custom;
  custom_ = std::make_shared<CustomIndexOrder>(std::move(order));
  id_ = fingerprint(locality_, names_, order_) ^ reinterpret_cast<std::uintptr_t>(custom_.get());
}

std::uint64_t Signature::encode_index(std::int64_t i) const {
  if (i > kMaxIndex || i < -kMaxIndex) throw SignatureError("generator index out of supported range");
  switch (order_) {
    case IndexOrder::AbsThenSigned: {
      // 0, -1, 1, -2, 2, ... ascending
      std::uint64_t a = static_cast<std::uint64_t>(i < 0 ? -i : i);
      return i < 0 ? 2 * a - 1 : 2 * a;
    }
    case IndexOrder::Natural:
      return static_cast<std::uint64_t>(i + kMaxIndex);
    case IndexOrder::Custom: {
      std::uint64_t r = custom_->rank(i);
      if (r > kIndexMask) throw SignatureError("custom rank out of range");
      return r;
    }
  }
  return 0;
}

std::int64_t Signature::decode_index(std::uint64_t bits) const {
  switch (order_) {
    case IndexOrder::AbsThenSigned:
      return (bits & 1) ? -static_cast<std::int64_t>((bits + 1) / 2) : static_cast<std::int64_t>(bits / 2);
    case IndexOrder::Natural:
      return static_cast<std::int64_t>(bits) - kMaxIndex;
    case IndexOrder::Custom:
      return custom_->unrank(bits);
  }
  return 0;
}

std::optional<std::size_t> Signature::find_name(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i].name == name) return i;
  return std::nullopt;
}

Letter Signature::letter(std::string_view name, std::optional<std::int64_t> index) const {
  auto rank = find_name(name);
  if (!rank) throw SignatureError("unknown generator '" + std::string(name) + "'");
  const auto& g = names_[*rank];
  if (g.indexed != index.has_value())
    throw SignatureError(g.indexed ? "generator family '" + g.name + "' needs an index"
                                   : "generator '" + g.name + "' takes no index");
  std::uint64_t low = index ? encode_index(*index) : 0;
  return Letter{(static_cast<std::uint64_t>(*rank) << kIndexBits) | low};
}

bool Signature::contains(Letter l) const {
  std::uint64_t rank = l.key >> kIndexBits;
  if (rank >= names_.size()) return false;
  if (!names_[rank].indexed) return (l.key & kIndexMask) == 0;
  return true;
}

Generator Signature::decode(Letter l) const {
  if (!contains(l)) throw SignatureError("letter does not belong to this signature");
  const auto& g = names_[l.key >> kIndexBits];
  if (!g.indexed) return {g.name, std::nullopt};
  return {g.name, decode_index(l.key & kIndexMask)};
}

std::optional<std::int64_t> Signature::index_of(Letter l) const { return decode(l).index; }

const std::string& Signature::name_of(Letter l) const {
  if (!contains(l)) throw SignatureError("letter does not belong to this signature");
  return names_[l.key >> kIndexBits].name;
}

bool Signature::is_indexed(Letter l) const {
  if (!contains(l)) throw SignatureError("letter does not belong to this signature");
  return names_[l.key >> kIndexBits].indexed;
}

std::string Signature::spell(Letter l) const {
  Generator g = decode(l);
  if (!g.index) return g.name;
  return g.name + "_" + std::to_string(*g.index);
}

}  // namespace cgsb
