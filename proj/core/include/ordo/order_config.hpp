#ifndef ORDO_ORDER_CONFIG_HPP
#define ORDO_ORDER_CONFIG_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ordo {

/// Expansion rules in IAOEFLG order: Id, And, Or, Exists, ForAll,
/// Less-or-equal (at-most), Greater-or-equal (at-least).
enum class Rule : std::uint8_t { Id = 0, And, Or, Exists, ForAll, AtMost, AtLeast };

inline constexpr std::size_t kRuleCount = 7;
inline constexpr std::size_t kPriorityLevels = 7;

std::string_view rule_name(Rule rule);

class InvalidConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rule priorities decoded from a digit string; 0 is the highest priority.
///
/// Seven digits map positionally to I,A,O,E,F,L,G. Six digits map to
/// A,O,E,F,L,G and Id shares the And digit.
class OrderConfig {
 public:
  static OrderConfig parse(std::string_view digits);

  std::uint8_t priority(Rule rule) const noexcept {
    return priority_[static_cast<std::size_t>(rule)];
  }
  const std::array<std::uint8_t, kRuleCount>& priorities() const noexcept { return priority_; }
  const std::string& source() const noexcept { return source_; }

  bool operator==(const OrderConfig& other) const { return priority_ == other.priority_; }

 private:
  OrderConfig() = default;

  std::array<std::uint8_t, kRuleCount> priority_{};
  std::string source_;
};

inline constexpr std::size_t kOrderSetCount = 7;

/// The seven labeled order sets; element i has label i+1.
std::span<const OrderConfig, kOrderSetCount> standard_order_sets();

/// Order set by 1-based label.
const OrderConfig& order_set(int label);

/// The stock JFact ordering, "1263005".
const OrderConfig& jfact_default_order();

}  // namespace ordo

#endif  // ORDO_ORDER_CONFIG_HPP
