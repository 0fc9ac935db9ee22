#include "ordo/order_config.hpp"

namespace ordo {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::Id: return "id";
    case Rule::And: return "and";
    case Rule::Or: return "or";
    case Rule::Exists: return "exists";
    case Rule::ForAll: return "forall";
    case Rule::AtMost: return "atmost";
    case Rule::AtLeast: return "atleast";
  }
  return "?";
}

OrderConfig OrderConfig::parse(std::string_view digits) {
  if (digits.size() != 6 && digits.size() != 7) {
    throw InvalidConfig("order config must have 6 or 7 digits, got '" + std::string(digits) + "'");
  }
  std::array<std::uint8_t, kRuleCount> values{};
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c < '0' || c > '6') {
      throw InvalidConfig("order config digits must be 0..6, got '" + std::string(digits) + "'");
    }
    values[i] = static_cast<std::uint8_t>(c - '0');
  }
  OrderConfig cfg;
  if (digits.size() == 7) {
    cfg.priority_ = values;
  } else {
    cfg.priority_[0] = values[0];
    for (std::size_t i = 0; i < 6; ++i) cfg.priority_[i + 1] = values[i];
  }
  cfg.source_ = std::string(digits);
  return cfg;
}

std::span<const OrderConfig, kOrderSetCount> standard_order_sets() {
  static const std::array<OrderConfig, kOrderSetCount> sets = {
      OrderConfig::parse("012312"), OrderConfig::parse("013213"), OrderConfig::parse("000000"),
      OrderConfig::parse("032132"), OrderConfig::parse("031231"), OrderConfig::parse("021321"),
      OrderConfig::parse("023123"),
  };
  return sets;
}

const OrderConfig& order_set(int label) {
  if (label < 1 || label > static_cast<int>(kOrderSetCount)) {
    throw InvalidConfig("order set label must be 1..7");
  }
  return standard_order_sets()[static_cast<std::size_t>(label - 1)];
}

const OrderConfig& jfact_default_order() {
  static const OrderConfig cfg = OrderConfig::parse("1263005");
  return cfg;
}

}  // namespace ordo
