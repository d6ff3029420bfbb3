#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ncpart {

/// A set of allowed block sizes (a subset of {1,2,...}), either finite or one
/// of the named infinite families.
class MembershipSet {
 public:
  enum class Kind { All, Odd, Multiples, Prime, Finite };

  static MembershipSet all() { return MembershipSet(Kind::All, 1, {}); }
  static MembershipSet odd() { return MembershipSet(Kind::Odd, 1, {}); }
  static MembershipSet even() { return MembershipSet(Kind::Multiples, 2, {}); }
  static MembershipSet multiples(std::size_t k);
  static MembershipSet prime() { return MembershipSet(Kind::Prime, 1, {}); }
  static MembershipSet finite(std::set<std::size_t> members);

  /// Accepts all, odd, even, prime, multiples:k, divisible:k, set:a,b,...
  /// and a bare integer k (the set {k}). Throws InvalidArgument.
  static MembershipSet parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool contains(std::size_t k) const;
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool empty() const noexcept { return kind_ == Kind::Finite && members_.empty(); }
  /// Largest member; only meaningful for finite sets.
  std::size_t max_element() const;
  const std::set<std::size_t>& members() const noexcept { return members_; }
  /// Step of the Multiples family.
  std::size_t step() const noexcept { return step_; }

  /// gcd of all members (exact for every kind).
  std::size_t gcd() const;

  /// Members in [1, bound].
  std::vector<std::size_t> members_up_to(std::size_t bound) const;

  /// Canonical text accepted by parse().
  std::string name() const;

  friend bool operator==(const MembershipSet&, const MembershipSet&) = default;

 private:
  MembershipSet(Kind kind, std::size_t step, std::set<std::size_t> members)
      : kind_(kind), step_(step), members_(std::move(members)) {}

  Kind kind_;
  std::size_t step_;
  std::set<std::size_t> members_;
};

bool is_prime(std::size_t k);

}  // namespace ncpart
