#pragma once

// Monomials, block monomial orders and polynomial ring descriptors.

#include "qgor/scalar.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgor {

inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector with its support bitmask and total degree cached.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, std::uint32_t power = 1) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }

  void set(std::size_t i, std::uint32_t e) {
    if (i >= kMaxVariables) throw std::out_of_range("variable index out of range");
    if (e > UINT16_MAX) throw std::overflow_error("exponent overflow");
    total_ = total_ - exp_[i] + e;
    exp_[i] = static_cast<std::uint16_t>(e);
    if (e) {
      mask_ |= (1u << i);
    } else {
      mask_ &= ~(1u << i);
    }
  }

  std::uint32_t total_degree() const { return total_; }
  std::uint32_t support() const { return mask_; }
  bool is_one() const { return mask_ == 0; }

  bool divides(const Monomial& o) const {
    if ((mask_ & ~o.mask_) != 0 || total_ > o.total_) return false;
    for (std::uint32_t m = mask_; m; m &= m - 1) {
      int i = __builtin_ctz(m);
      if (exp_[i] > o.exp_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& o) const { return (mask_ & o.mask_) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::uint32_t m = b.mask_; m; m &= m - 1) {
      int i = __builtin_ctz(m);
      std::uint32_t e = std::uint32_t{a.exp_[i]} + b.exp_[i];
      if (e > UINT16_MAX) throw std::overflow_error("exponent overflow");
      r.exp_[i] = static_cast<std::uint16_t>(e);
    }
    r.mask_ |= b.mask_;
    r.total_ += b.total_;
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::uint32_t m = b.mask_; m; m &= m - 1) {
      int i = __builtin_ctz(m);
      r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] - b.exp_[i]);
      if (r.exp_[i] == 0) r.mask_ &= ~(1u << i);
    }
    r.total_ -= b.total_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::uint32_t m = b.mask_; m; m &= m - 1) {
      int i = __builtin_ctz(m);
      if (b.exp_[i] > r.exp_[i]) {
        r.total_ += b.exp_[i] - r.exp_[i];
        r.exp_[i] = b.exp_[i];
      }
    }
    r.mask_ |= b.mask_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t m = mask_; m; m &= m - 1) {
      int i = __builtin_ctz(m);
      h = (h ^ (static_cast<std::size_t>(i) << 16 ^ exp_[i])) * 1099511628211ull;
    }
    return h;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint32_t mask_ = 0;
  std::uint32_t total_ = 0;
};

enum class BlockKind { GRevLex, Lex };

/// One block of a block order: the variables it covers and how it compares.
struct OrderBlock {
  std::uint32_t variables = 0;
  BlockKind kind = BlockKind::GRevLex;

  friend bool operator==(const OrderBlock&, const OrderBlock&) = default;
};

/// Block monomial order. Blocks are compared in sequence; a graded reverse
/// lexicographic block compares weighted degree, then total degree, then
/// reverse lexicographically. The total-degree step keeps the order a
/// well-order when some weights are zero.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  static MonomialOrder grevlex(std::size_t nvars) { return MonomialOrder({{all(nvars), BlockKind::GRevLex}}); }
  static MonomialOrder lex(std::size_t nvars) { return MonomialOrder({{all(nvars), BlockKind::Lex}}); }

  /// `dominant` variables form a leading graded reverse lexicographic block;
  /// the remaining variables keep the block structure of `base`.
  static MonomialOrder elimination(std::uint32_t dominant, const MonomialOrder& base) {
    std::vector<OrderBlock> blocks{{dominant, BlockKind::GRevLex}};
    for (const OrderBlock& b : base.blocks_) {
      std::uint32_t rest = b.variables & ~dominant;
      if (rest) blocks.push_back({rest, b.kind});
    }
    return MonomialOrder(std::move(blocks));
  }

  const std::vector<OrderBlock>& blocks() const { return blocks_; }

  bool is_plain_grevlex(std::size_t nvars) const {
    return blocks_.size() == 1 && blocks_[0].kind == BlockKind::GRevLex &&
           blocks_[0].variables == all(nvars);
  }

  std::string describe(const std::vector<std::string>& names) const {
    if (blocks_.size() == 1) return blocks_[0].kind == BlockKind::Lex ? "lex" : "grevlex";
    std::string out = "blocks";
    for (const OrderBlock& b : blocks_) {
      out += b.kind == BlockKind::Lex ? " lex{" : " grevlex{";
      bool first = true;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (b.variables & (1u << i)) {
          out += (first ? "" : ",") + names[i];
          first = false;
        }
      }
      out += "}";
    }
    return out;
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b,
                               const std::vector<std::uint32_t>& weights) const {
    for (const OrderBlock& block : blocks_) {
      auto c = block.kind == BlockKind::Lex ? compare_lex(a, b, block.variables)
                                            : compare_grevlex(a, b, block.variables, weights);
      if (c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

  static std::uint32_t all(std::size_t nvars) {
    return nvars >= 32 ? ~0u : ((1u << nvars) - 1u);
  }

 private:
  explicit MonomialOrder(std::vector<OrderBlock> blocks) : blocks_(std::move(blocks)) {}

  static std::strong_ordering compare_lex(const Monomial& a, const Monomial& b, std::uint32_t vars) {
    for (std::uint32_t m = vars; m; m &= m - 1) {
      int i = __builtin_ctz(m);
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }

  static std::strong_ordering compare_grevlex(const Monomial& a, const Monomial& b, std::uint32_t vars,
                                              const std::vector<std::uint32_t>& weights) {
    std::uint64_t wa = 0, wb = 0, ta = 0, tb = 0;
    for (std::uint32_t m = (a.support() | b.support()) & vars; m; m &= m - 1) {
      int i = __builtin_ctz(m);
      wa += std::uint64_t{weights[i]} * a[i];
      wb += std::uint64_t{weights[i]} * b[i];
      ta += a[i];
      tb += b[i];
    }
    if (wa != wb) return wa <=> wb;
    if (ta != tb) return ta <=> tb;
    for (std::uint32_t m = (a.support() | b.support()) & vars; m; m &= ~(1u << (31 - __builtin_clz(m)))) {
      int i = 31 - __builtin_clz(m);
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }

  std::vector<OrderBlock> blocks_;
};

/// Polynomial ring k[x_1..x_n] with integer weights and a monomial order.
class Ring {
 public:
  Ring(Field field, std::vector<std::string> names, std::vector<std::uint32_t> weights,
       std::optional<MonomialOrder> order = std::nullopt)
      : field_(field), names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() > kMaxVariables) {
      throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables are supported");
    }
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size()) throw std::invalid_argument("one weight per variable is required");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
      }
    }
    order_ = order ? *order : MonomialOrder::grevlex(names_.size());
  }

  static std::shared_ptr<const Ring> make(Field field, std::vector<std::string> names,
                                          std::vector<std::uint32_t> weights = {},
                                          std::optional<MonomialOrder> order = std::nullopt) {
    return std::make_shared<const Ring>(field, std::move(names), std::move(weights), std::move(order));
  }

  const Field& field() const { return field_; }
  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  std::uint32_t all_variables() const { return MonomialOrder::all(names_.size()); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  std::uint64_t weighted_degree(const Monomial& m) const {
    std::uint64_t d = 0;
    for (std::uint32_t s = m.support(); s; s &= s - 1) {
      int i = __builtin_ctz(s);
      d += std::uint64_t{weights_[i]} * m[i];
    }
    return d;
  }

  bool has_zero_weight() const {
    return std::find(weights_.begin(), weights_.end(), 0u) != weights_.end();
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b, weights_);
  }

  Scalar zero() const { return Scalar::zero(field_); }
  Scalar one() const { return Scalar::one(field_); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.weights_ == b.weights_ && a.order_ == b.order_;
  }

  std::string describe() const {
    std::string out = "field " + field_.name() + "; vars ";
    for (std::size_t i = 0; i < names_.size(); ++i) out += (i ? "," : "") + names_[i];
    out += "; weights ";
    for (std::size_t i = 0; i < weights_.size(); ++i) out += (i ? "," : "") + std::to_string(weights_[i]);
    out += "; order " + order_.describe(names_);
    return out;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> weights_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

}  // namespace qgor
