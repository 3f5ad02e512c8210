#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cgsb {

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator encoded so that integer comparison of `key` realizes the
/// signature's generator order. The high bits hold the rank of the generator
/// name, the low 47 bits hold the order position of the index inside a family.
struct Letter {
  std::uint64_t key = 0;

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// How the members of an indexed family are ordered among themselves.
enum class IndexOrder {
  /// L_i > L_j iff |i| > |j|, or |i| = |j| and i > j.
  AbsThenSigned,
  /// Plain integer order.
  Natural,
  /// User-supplied injective rank function together with its inverse.
  Custom,
};

struct CustomIndexOrder {
  std::function<std::uint64_t(std::int64_t)> rank;
  std::function<std::int64_t(std::uint64_t)> unrank;
};

struct GeneratorName {
  std::string name;
  bool indexed = false;
};

/// Decoded form of a Letter.
struct Generator {
  std::string name;
  std::optional<std::int64_t> index;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Generators, their order, and the uniform locality bound N.
///
/// Names are kept in ascending rank: names()[0] is the smallest. Plain names
/// stand for a single generator; indexed names stand for a family b_i, i in Z.
class Signature {
 public:
  static constexpr unsigned kIndexBits = 47;
  static constexpr std::int64_t kMaxIndex = (std::int64_t{1} << 45) - 1;

  Signature() = default;
  Signature(unsigned locality, std::vector<GeneratorName> names_ascending,
            IndexOrder order = IndexOrder::AbsThenSigned);

  /// Plain generators, listed in ascending order.
  static Signature plain(unsigned locality, const std::vector<std::string>& ascending);

  void set_custom_order(CustomIndexOrder order);

  unsigned locality() const { return locality_; }
  IndexOrder index_order() const { return order_; }
  const std::vector<GeneratorName>& names() const { return names_; }
  std::uint64_t id() const { return id_; }

  Letter letter(std::string_view name, std::optional<std::int64_t> index = std::nullopt) const;
  Generator decode(Letter l) const;
  bool contains(Letter l) const;
  std::optional<std::int64_t> index_of(Letter l) const;
  const std::string& name_of(Letter l) const;
  bool is_indexed(Letter l) const;
  /// Text form used by the printer: `a`, `L_3`, `L_-1`.
  std::string spell(Letter l) const;

  std::optional<std::size_t> find_name(std::string_view name) const;

  friend bool operator==(const Signature& a, const Signature& b) { return a.id_ == b.id_; }

 private:
  std::uint64_t encode_index(std::int64_t i) const;
  std::int64_t decode_index(std::uint64_t bits) const;

  unsigned locality_ = 1;
  std::vector<GeneratorName> names_;
  IndexOrder order_ = IndexOrder::AbsThenSigned;
  std::shared_ptr<CustomIndexOrder> custom_;
  std::uint64_t id_ = 0;
};

}  // namespace cgsb
