#include "efdkit/classes.hpp"

#include <algorithm>
#include <iterator>

#include "efdkit/errors.hpp"
#include "efdkit/numeric.hpp"

namespace efdkit {

namespace {

std::vector<std::int64_t> normalized(std::vector<std::int64_t> ps) {
  for (auto p : ps) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

using Vec = std::vector<std::int64_t>;

Vec set_union(const Vec& a, const Vec& b) {
  Vec out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
Vec set_intersection(const Vec& a, const Vec& b) {
  Vec out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
Vec set_difference(const Vec& a, const Vec& b) {
  Vec out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

PrimeSet PrimeSet::finite(std::vector<std::int64_t> primes) {
  PrimeSet s;
  s.listed_ = normalized(std::move(primes));
  return s;
}

PrimeSet PrimeSet::cofinite(std::vector<std::int64_t> excluded) {
  PrimeSet s;
  s.cofinite_ = true;
  s.listed_ = normalized(std::move(excluded));
  return s;
}

PrimeSet PrimeSet::of_integer(std::int64_t k) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  return finite(prime_factors(k));
}

bool PrimeSet::contains(std::int64_t p) const {
  const bool listed = std::binary_search(listed_.begin(), listed_.end(), p);
  return cofinite_ ? is_prime(p) && !listed : listed;
}

bool PrimeSet::subset_of(const PrimeSet& o) const {
  if (!cofinite_ && !o.cofinite_) return std::includes(o.listed_.begin(), o.listed_.end(), listed_.begin(), listed_.end());
  if (!cofinite_) return set_intersection(listed_, o.listed_).empty();
  if (!o.cofinite_) return false;
  return std::includes(listed_.begin(), listed_.end(), o.listed_.begin(), o.listed_.end());
}

PrimeSet PrimeSet::unite(const PrimeSet& o) const {
  PrimeSet r;
  if (!cofinite_ && !o.cofinite_) {
    r.listed_ = set_union(listed_, o.listed_);
  } else if (cofinite_ && o.cofinite_) {
    r.cofinite_ = true;
    r.listed_ = set_intersection(listed_, o.listed_);
  } else {
    const auto& fin = cofinite_ ? o : *this;
    const auto& co = cofinite_ ? *this : o;
    r.cofinite_ = true;
    r.listed_ = set_difference(co.listed_, fin.listed_);
  }
  return r;
}

PrimeSet PrimeSet::intersect(const PrimeSet& o) const {
  PrimeSet r;
  if (!cofinite_ && !o.cofinite_) {
    r.listed_ = set_intersection(listed_, o.listed_);
  } else if (cofinite_ && o.cofinite_) {
    r.cofinite_ = true;
    r.listed_ = set_union(listed_, o.listed_);
  } else {
    const auto& fin = cofinite_ ? o : *this;
    const auto& co = cofinite_ ? *this : o;
    r.listed_ = set_difference(fin.listed_, co.listed_);
  }
  return r;
}

std::string PrimeSet::to_string() const {
  std::string body;
  for (std::size_t i = 0; i < listed_.size(); ++i) body += (i ? "," : "") + std::to_string(listed_[i]);
  return cofinite_ ? (listed_.empty() ? "all" : "all\\{" + body + "}") : "{" + body + "}";
}

PrimeSet PrimeSet::parse(const std::string& text) {
  auto list = [&](const std::string& inner) {
    Vec out;
    std::size_t i = 0;
    while (i < inner.size()) {
      const auto comma = inner.find(',', i);
      const std::string item = inner.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
      try {
        std::size_t used = 0;
        out.push_back(std::stoll(item, &used));
        if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw InvalidArgument("bad prime '" + item + "' in prime set");
      }
      if (comma == std::string::npos) break;
      i = comma + 1;
    }
    return out;
  };
  if (text == "all") return all();
  if (text.rfind("all\\{", 0) == 0 && text.back() == '}') return cofinite(list(text.substr(5, text.size() - 6)));
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') return finite(list(text.substr(1, text.size() - 2)));
  return finite(list(text));
}

void AEClass::validate() const {
  if (kind == Kind::Boolean && family != Family::P) throw InvalidArgument("the Boolean class exists only in the P family");
}

std::string AEClass::to_string() const {
  switch (kind) {
    case Kind::Trivial: return "trivial";
    case Kind::Boolean: return "boolean";
    case Kind::Divisible: return "divisible" + primes.to_string();
  }
  return "?";
}

std::string to_string(Family f) { return f == Family::G ? "G" : "P"; }

}  // namespace efdkit
