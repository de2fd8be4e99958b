#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace decmin {

using Mask = std::uint64_t;
using IntVector = std::vector<std::int64_t>;

constexpr int kMaxGroundSize = 64;
constexpr int kDefaultScanLimit = 20;

// Failure categories. The CLI maps them onto exit codes.
enum class ErrorKind {
  kParse,            // malformed input
  kInfeasible,       // -inf prefix, non-member, bad instance, oracle violation
  kPrecondition,     // caller broke an operation's precondition
  kScanTooLarge,     // ground set above the subset-scan limit
  kBudgetExceeded,   // enumeration budget
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A subset of a ground set of at most 64 elements; element i is bit i.
struct Subset {
  Mask mask = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(Mask m) : mask(m) {}

  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1));
  }
  static constexpr Subset single(int i) { return Subset(Mask{1} << i); }

  constexpr bool contains(int i) const { return (mask >> i) & 1u; }
  constexpr bool empty() const { return mask == 0; }
  constexpr int size() const { return std::popcount(mask); }
  constexpr bool subset_of(Subset o) const { return (mask & ~o.mask) == 0; }

  constexpr Subset with(int i) const { return Subset(mask | (Mask{1} << i)); }
  constexpr Subset without(int i) const { return Subset(mask & ~(Mask{1} << i)); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.mask | b.mask); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.mask & b.mask); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.mask & ~b.mask); }
  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    for (Mask m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }
};

// Scatter the low bits of `k` onto the set bits of `universe` (software pdep).
// Monotone in k, so scanning k in order scans the sub-masks in mask order.
inline Mask deposit(Mask k, Mask universe) {
  Mask out = 0;
  for (Mask u = universe; u != 0 && k != 0; u &= u - 1, k >>= 1) {
    if (k & 1u) out |= u & (~u + 1);
  }
  return out;
}

// Inverse of deposit: gather the bits of `m` that sit on `universe`.
inline Mask extract(Mask m, Mask universe) {
  Mask out = 0;
  int j = 0;
  for (Mask u = universe; u != 0; u &= u - 1, ++j) {
    if (m & u & (~u + 1)) out |= Mask{1} << j;
  }
  return out;
}

/// Integer extended by -inf and +inf.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : value_(v) {}  // NOLINT: implicit by intent

  static constexpr ExtInt neg_inf() { return ExtInt(Kind::kNegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::kPosInf); }

  constexpr bool finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::kPosInf; }

  std::int64_t value() const {
    if (!finite()) throw Error(ErrorKind::kInfeasible, "infinite value used as integer");
    return value_;
  }

  friend ExtInt operator+(ExtInt a, ExtInt b) {
    if ((a.is_neg_inf() && b.is_pos_inf()) || (a.is_pos_inf() && b.is_neg_inf()))
      throw Error(ErrorKind::kInfeasible, "-inf + +inf is undefined");
    if (!a.finite()) return a;
    if (!b.finite()) return b;
    return ExtInt(a.value_ + b.value_);
  }
  friend ExtInt operator-(ExtInt a) {
    if (a.is_neg_inf()) return pos_inf();
    if (a.is_pos_inf()) return neg_inf();
    return ExtInt(-a.value_);
  }
  friend ExtInt operator-(ExtInt a, ExtInt b) { return a + (-b); }

  // Infinities compare equal only to themselves.
  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    if (a.kind_ != b.kind_) return false;
    return !a.finite() || a.value_ == b.value_;
  }
  friend constexpr bool operator<(ExtInt a, ExtInt b) { return a.rank() < b.rank() ||
      (a.finite() && b.finite() && a.value_ < b.value_); }
  friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
  friend constexpr bool operator<=(ExtInt a, ExtInt b) { return !(b < a); }
  friend constexpr bool operator>=(ExtInt a, ExtInt b) { return !(a < b); }

  std::string str() const {
    if (is_neg_inf()) return "-inf";
    if (is_pos_inf()) return "+inf";
    return std::to_string(value_);
  }

 private:
  enum class Kind : std::uint8_t { kNegInf, kFinite, kPosInf };
  constexpr explicit ExtInt(Kind k) : kind_(k) {}
  constexpr int rank() const { return static_cast<int>(kind_); }

  std::int64_t value_ = 0;
  Kind kind_ = Kind::kFinite;
};

/// Ordered, uniquely-labelled ground set.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  Subset full() const { return Subset::full(size()); }

  // Throws kParse on unknown labels.
  int index_of(std::string_view label) const;
  Subset subset_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels(Subset x) const;
  std::string format(Subset x) const;  // "{a,b}"

  // Sub-ground-set made of the elements of x, in index order.
  GroundSet restricted_to(Subset x) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

// Sum of z over the elements of x.
inline std::int64_t subset_sum(const IntVector& z, Subset x) {
  std::int64_t s = 0;
  for (Mask m = x.mask; m != 0; m &= m - 1) s += z[std::countr_zero(m)];
  return s;
}

inline IntVector unit_exchange(IntVector m, int plus, int minus) {
  m[plus] += 1;
  m[minus] -= 1;
  return m;
}

// Floor/ceil of a/b for b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace decmin
