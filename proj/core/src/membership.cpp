#include "ncpart/membership.hpp"

#include <charconv>
#include <numeric>

#include "ncpart/error.hpp"
#include "ncpart/extended_real.hpp"

namespace ncpart {

std::string ExtendedReal::to_string() const {
  if (infinite_) return "inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, res.ptr);
}

bool is_prime(std::size_t k) {
  if (k < 2) return false;
  if (k < 4) return true;
  if (k % 2 == 0 || k % 3 == 0) return false;
  for (std::size_t d = 5; d * d <= k; d += 6) {
    if (k % d == 0 || k % (d + 2) == 0) return false;
  }
  return true;
}

namespace {

std::size_t parse_size(std::string_view text, std::string_view context) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorKind::InvalidArgument,
                "expected a nonnegative integer in '" + std::string(context) + "', got '" +
                    std::string(text) + "'");
  }
  return value;
}

}  // namespace

MembershipSet MembershipSet::multiples(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "multiples:0 is not a set of sizes");
  if (k == 1) return all();
  return MembershipSet(Kind::Multiples, k, {});
}

MembershipSet MembershipSet::finite(std::set<std::size_t> members) {
  if (members.count(0) != 0) {
    throw Error(ErrorKind::InvalidArgument, "block sizes start at 1");
  }
  return MembershipSet(Kind::Finite, 1, std::move(members));
}

MembershipSet MembershipSet::parse(std::string_view text) {
  if (text == "all" || text == "N") return all();
  if (text == "odd") return odd();
  if (text == "even") return even();
  if (text == "prime") return prime();
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view head = text.substr(0, colon);
    const std::string_view rest = text.substr(colon + 1);
    if (head == "multiples" || head == "divisible") return multiples(parse_size(rest, text));
    if (head == "set") {
      std::set<std::size_t> members;
      std::size_t start = 0;
      while (start <= rest.size()) {
        const std::size_t comma = std::min(rest.find(',', start), rest.size());
        members.insert(parse_size(rest.substr(start, comma - start), text));
        start = comma + 1;
      }
      return finite(std::move(members));
    }
  } else if (!text.empty() && text.find_first_not_of("0123456789") == std::string_view::npos) {
    return finite({parse_size(text, text)});
  }
  throw Error(ErrorKind::InvalidArgument, "unknown set '" + std::string(text) +
                                              "' (expected all, odd, even, prime, multiples:k, "
                                              "divisible:k, set:a,b,... or an integer)");
}

bool MembershipSet::contains(std::size_t k) const {
  if (k == 0) return false;
  switch (kind_) {
    case Kind::All: return true;
    case Kind::Odd: return k % 2 == 1;
    case Kind::Multiples: return k % step_ == 0;
    case Kind::Prime: return is_prime(k);
    case Kind::Finite: return members_.count(k) != 0;
  }
  return false;
}

std::size_t MembershipSet::max_element() const {
  if (kind_ != Kind::Finite || members_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "max_element needs a nonempty finite set");
  }
  return *members_.rbegin();
}

std::size_t MembershipSet::gcd() const {
  switch (kind_) {
    case Kind::All:
    case Kind::Odd:
    case Kind::Prime: return 1;
    case Kind::Multiples: return step_;
    case Kind::Finite: {
      std::size_t g = 0;
      for (std::size_t m : members_) g = std::gcd(g, m);
      return g;
    }
  }
  return 1;
}

std::vector<std::size_t> MembershipSet::members_up_to(std::size_t bound) const {
  std::vector<std::size_t> out;
  if (kind_ == Kind::Finite) {
    for (std::size_t m : members_) {
      if (m <= bound) out.push_back(m);
    }
    return out;
  }
  for (std::size_t k = 1; k <= bound; ++k) {
    if (contains(k)) out.push_back(k);
  }
  return out;
}

std::string MembershipSet::name() const {
  switch (kind_) {
    case Kind::All: return "all";
    case Kind::Odd: return "odd";
    case Kind::Multiples: return "multiples:" + std::to_string(step_);
    case Kind::Prime: return "prime";
    case Kind::Finite: {
      std::string out = "set:";
      bool first = true;
      for (std::size_t m : members_) {
        if (!first) out += ',';
        out += std::to_string(m);
        first = false;
      }
      return out;
    }
  }
  return "";
}

}  // namespace ncpart
