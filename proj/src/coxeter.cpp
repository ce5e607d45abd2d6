#include "hcp/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_set>

#include "hcp/error.hpp"

namespace hcp {

CoxeterType::CoxeterType(std::vector<CoxeterFactor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    first_reflection_.push_back(rank_);
    first_point_.push_back(points_);
    rank_ += f.rank;
    points_ += f.kind == CoxeterKind::A ? f.rank + 1 : f.rank;
  }
  if (points_ > 127) throw SizeLimit("Coxeter type has too many points");
}

CoxeterType CoxeterType::parse(const std::string& text) {
  std::vector<CoxeterFactor> factors;
  std::size_t pos = 0;
  const std::string s = text;
  if (s.empty() || s == "1") return CoxeterType{};
  while (pos < s.size()) {
    const char k = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos])));
    if (k != 'A' && k != 'B') throw InvalidInput("bad Coxeter type '" + text + "'");
    ++pos;
    std::size_t end = pos;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    if (end == pos || end - pos > 3) throw InvalidInput("bad Coxeter type '" + text + "'");
    const unsigned r = static_cast<unsigned>(std::stoul(s.substr(pos, end - pos)));
    factors.push_back({k == 'A' ? CoxeterKind::A : CoxeterKind::B, r});
    pos = end;
    if (pos < s.size()) {
      if (s[pos] != 'x' && s[pos] != '*') throw InvalidInput("bad Coxeter type '" + text + "'");
      if (++pos == s.size()) throw InvalidInput("bad Coxeter type '" + text + "'");
    }
  }
  return CoxeterType(std::move(factors));
}

std::uint64_t CoxeterType::order() const noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t n = 1;
  auto mul = [&](std::uint64_t k) { n = (k != 0 && n > kMax / k) ? kMax : n * k; };
  for (const auto& f : factors_) {
    if (f.kind == CoxeterKind::A) {
      for (unsigned k = 2; k <= f.rank + 1; ++k) mul(k);
    } else {
      for (unsigned k = 1; k <= f.rank; ++k) mul(2ull * k);
    }
  }
  return n;
}

std::pair<unsigned, unsigned> CoxeterType::locate(unsigned s) const {
  if (s >= rank_) throw InvalidInput("simple reflection index out of range");
  unsigned f = static_cast<unsigned>(
      std::upper_bound(first_reflection_.begin(), first_reflection_.end(), s) -
      first_reflection_.begin() - 1);
  // Rank-zero factors share their first index with the next factor.
  while (factors_[f].rank == 0 || s - first_reflection_[f] >= factors_[f].rank) --f;
  return {f, s - first_reflection_[f]};
}

unsigned CoxeterType::braid_order(unsigned i, unsigned j) const {
  if (i == j) return 1;
  auto [fi, li] = locate(i);
  auto [fj, lj] = locate(j);
  if (fi != fj) return 2;
  const unsigned lo = std::min(li, lj), hi = std::max(li, lj);
  if (hi - lo != 1) return 2;
  if (factors_[fi].kind == CoxeterKind::B && lo == 0) return 4;
  return 3;
}

std::vector<unsigned> CoxeterType::reflection_classes() const {
  std::vector<unsigned> cls(rank_);
  unsigned next = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const auto& fac = factors_[f];
    if (fac.rank == 0) continue;
    const unsigned base = first_reflection_[f];
    if (fac.kind == CoxeterKind::A) {
      for (unsigned i = 0; i < fac.rank; ++i) cls[base + i] = next;
      ++next;
    } else {
      cls[base] = next++;
      if (fac.rank > 1) {
        for (unsigned i = 1; i < fac.rank; ++i) cls[base + i] = next;
        ++next;
      }
    }
  }
  return cls;
}

std::string CoxeterType::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += 'x';
    out += f.kind == CoxeterKind::A ? 'A' : 'B';
    out += std::to_string(f.rank);
  }
  return out;
}

std::size_t CoxeterElementHash::operator()(const CoxeterElement& e) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto c : e.window()) h = (h ^ static_cast<std::uint8_t>(c)) * 1099511628211ull;
  return h;
}

CoxeterGroup::CoxeterGroup(CoxeterType type) : type_(std::move(type)) {
  const auto& fs = type_.factors();
  for (unsigned f = 0; f < fs.size(); ++f) {
    const unsigned n = fs[f].kind == CoxeterKind::A ? fs[f].rank + 1 : fs[f].rank;
    for (unsigned k = 0; k < n; ++k) point_factor_.push_back(f);
  }
}

void CoxeterGroup::check_reflection(unsigned s) const {
  if (s >= type_.rank())
    throw InvalidInput("simple reflection " + std::to_string(s) + " out of range for " +
                       type_.to_string());
}

void CoxeterGroup::check_element(const CoxeterElement& w) const {
  if (w.window().size() != type_.points()) throw InvalidInput("element of a different group");
}

CoxeterElement CoxeterGroup::identity() const {
  std::vector<std::int8_t> w(type_.points());
  for (unsigned i = 0; i < w.size(); ++i) w[i] = static_cast<std::int8_t>(i + 1);
  return CoxeterElement(std::move(w));
}

CoxeterElement CoxeterGroup::generator(unsigned s) const {
  return right_multiply(identity(), s);
}

CoxeterElement CoxeterGroup::reduce(const std::vector<unsigned>& word) const {
  CoxeterElement w = identity();
  for (unsigned s : word) {
    check_reflection(s);
    w = right_multiply(w, s);
  }
  return w;
}

CoxeterElement CoxeterGroup::multiply(const CoxeterElement& a, const CoxeterElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<std::int8_t> out(b.window().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int v = b.window()[i];
    const int img = a.window()[static_cast<std::size_t>(std::abs(v) - 1)];
    out[i] = static_cast<std::int8_t>(v < 0 ? -img : img);
  }
  return CoxeterElement(std::move(out));
}

CoxeterElement CoxeterGroup::inverse(const CoxeterElement& a) const {
  check_element(a);
  std::vector<std::int8_t> out(a.window().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int v = a.window()[i];
    const int pt = static_cast<int>(i) + 1;
    out[static_cast<std::size_t>(std::abs(v) - 1)] = static_cast<std::int8_t>(v < 0 ? -pt : pt);
  }
  return CoxeterElement(std::move(out));
}

CoxeterElement CoxeterGroup::left_multiply(unsigned s, const CoxeterElement& w) const {
  check_reflection(s);
  check_element(w);
  auto [f, local] = type_.locate(s);
  const auto kind = type_.factors()[f].kind;
  const int base = static_cast<int>(type_.first_point(f));
  std::vector<std::int8_t> out = w.window();
  if (kind == CoxeterKind::B && local == 0) {
    for (auto& v : out)
      if (std::abs(v) == base + 1) v = static_cast<std::int8_t>(-v);
  } else {
    // Points a and a+1 (1-based) in global numbering.
    const int a = base + static_cast<int>(kind == CoxeterKind::A ? local + 1 : local);
    for (auto& v : out) {
      const int m = std::abs(v), sg = v < 0 ? -1 : 1;
      if (m == a) v = static_cast<std::int8_t>(sg * (a + 1));
      else if (m == a + 1) v = static_cast<std::int8_t>(sg * a);
    }
  }
  return CoxeterElement(std::move(out));
}

CoxeterElement CoxeterGroup::right_multiply(const CoxeterElement& w, unsigned s) const {
  check_reflection(s);
  check_element(w);
  auto [f, local] = type_.locate(s);
  const auto kind = type_.factors()[f].kind;
  const std::size_t base = type_.first_point(f);
  std::vector<std::int8_t> out = w.window();
  if (kind == CoxeterKind::B && local == 0) {
    out[base] = static_cast<std::int8_t>(-out[base]);
  } else {
    const std::size_t a = base + (kind == CoxeterKind::A ? local : local - 1);
    std::swap(out[a], out[a + 1]);
  }
  return CoxeterElement(std::move(out));
}

unsigned CoxeterGroup::length(const CoxeterElement& w) const {
  check_element(w);
  const auto& v = w.window();
  unsigned len = 0;
  const auto& fs = type_.factors();
  for (unsigned f = 0; f < fs.size(); ++f) {
    const std::size_t b = type_.first_point(f);
    const std::size_t n = fs[f].kind == CoxeterKind::A ? fs[f].rank + 1 : fs[f].rank;
    for (std::size_t i = b; i < b + n; ++i) {
      if (fs[f].kind == CoxeterKind::B && v[i] < 0) ++len;
      for (std::size_t j = i + 1; j < b + n; ++j) {
        if (v[i] > v[j]) ++len;
        if (fs[f].kind == CoxeterKind::B && v[i] + v[j] < 0) ++len;
      }
    }
  }
  return len;
}

bool CoxeterGroup::is_left_descent(unsigned s, const CoxeterElement& w) const {
  return length(left_multiply(s, w)) < length(w);
}

bool CoxeterGroup::is_right_descent(const CoxeterElement& w, unsigned s) const {
  return length(right_multiply(w, s)) < length(w);
}

std::vector<unsigned> CoxeterGroup::reduced_word(const CoxeterElement& w) const {
  std::vector<unsigned> word;
  CoxeterElement cur = w;
  unsigned len = length(cur);
  while (len > 0) {
    for (unsigned s = 0; s < rank(); ++s) {
      CoxeterElement next = left_multiply(s, cur);
      const unsigned l = length(next);
      if (l < len) {
        word.push_back(s);
        cur = std::move(next);
        len = l;
        break;
      }
    }
  }
  return word;
}

CoxeterElement CoxeterGroup::longest_element() const {
  CoxeterElement w = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (unsigned s = 0; s < rank(); ++s)
      if (!is_right_descent(w, s)) {
        w = right_multiply(w, s);
        grew = true;
      }
  }
  return w;
}

bool CoxeterGroup::less(const CoxeterElement& a, const CoxeterElement& b) const {
  const unsigned la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  return a.window() < b.window();
}

namespace {

void sort_elements(const CoxeterGroup& g, std::vector<CoxeterElement>& v) {
  std::vector<std::pair<unsigned, CoxeterElement>> keyed;
  keyed.reserve(v.size());
  for (auto& e : v) keyed.emplace_back(g.length(e), std::move(e));
  std::sort(keyed.begin(), keyed.end());
  v.clear();
  for (auto& [l, e] : keyed) v.push_back(std::move(e));
}

}  // namespace

std::vector<CoxeterElement> CoxeterGroup::enumerate() const {
  if (order() > kMaxEnumeration)
    throw SizeLimit("Coxeter group " + type_.to_string() + " has order above " +
                    std::to_string(kMaxEnumeration));
  std::vector<CoxeterElement> all{identity()};
  const auto& fs = type_.factors();
  for (unsigned f = 0; f < fs.size(); ++f) {
    const std::size_t b = type_.first_point(f);
    const std::size_t n = fs[f].kind == CoxeterKind::A ? fs[f].rank + 1 : fs[f].rank;
    std::vector<std::vector<std::int8_t>> windows;
    std::vector<std::int8_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::int8_t>(b + i + 1);
    do {
      if (fs[f].kind == CoxeterKind::A) {
        windows.push_back(perm);
        continue;
      }
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto w = perm;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) w[i] = static_cast<std::int8_t>(-w[i]);
        windows.push_back(std::move(w));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<CoxeterElement> next;
    next.reserve(all.size() * windows.size());
    for (const auto& e : all)
      for (const auto& w : windows) {
        auto v = e.window();
        std::copy(w.begin(), w.end(), v.begin() + static_cast<std::ptrdiff_t>(b));
        next.emplace_back(std::move(v));
      }
    all = std::move(next);
  }
  sort_elements(*this, all);
  return all;
}

std::vector<CoxeterElement> CoxeterGroup::parabolic_elements(const ParabolicSubset& j) const {
  const auto jj = normalize_subset(type_, j);
  std::vector<CoxeterElement> out{identity()};
  std::unordered_set<CoxeterElement, CoxeterElementHash> seen{identity()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out.size() > kMaxEnumeration) throw SizeLimit("parabolic subgroup too large");
    for (unsigned s : jj) {
      auto w = right_multiply(out[k], s);
      if (seen.insert(w).second) out.push_back(std::move(w));
    }
  }
  sort_elements(*this, out);
  return out;
}

std::vector<CoxeterElement> CoxeterGroup::min_coset_reps(const ParabolicSubset& j) const {
  const auto jj = normalize_subset(type_, j);
  std::vector<CoxeterElement> out;
  for (auto& w : enumerate()) {
    bool minimal = true;
    for (unsigned s : jj)
      if (is_left_descent(s, w)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(std::move(w));
  }
  return out;
}

std::pair<CoxeterElement, CoxeterElement> CoxeterGroup::coset_factor(
    const ParabolicSubset& j, const CoxeterElement& w) const {
  const auto jj = normalize_subset(type_, j);
  CoxeterElement u = identity(), x = w;
  for (bool moved = true; moved;) {
    moved = false;
    for (unsigned s : jj)
      if (is_left_descent(s, x)) {
        x = left_multiply(s, x);
        u = right_multiply(u, s);
        moved = true;
        break;
      }
  }
  return {std::move(u), std::move(x)};
}

ParabolicSubset normalize_subset(const CoxeterType& t, ParabolicSubset j) {
  std::sort(j.begin(), j.end());
  if (std::adjacent_find(j.begin(), j.end()) != j.end())
    throw InvalidInput("repeated simple reflection in parabolic subset");
  if (!j.empty() && j.back() >= t.rank())
    throw InvalidInput("simple reflection " + std::to_string(j.back()) + " out of range for " +
                       t.to_string());
  return j;
}

ParabolicType parabolic_type(const CoxeterType& t, const ParabolicSubset& j) {
  const auto jj = normalize_subset(t, j);
  std::vector<bool> in(t.rank(), false);
  for (unsigned s : jj) in[s] = true;
  ParabolicType out;
  out.to_sub.assign(t.rank(), -1);
  std::vector<CoxeterFactor> factors;
  const auto& fs = t.factors();
  for (unsigned f = 0; f < fs.size(); ++f) {
    const unsigned base = t.first_reflection(f);
    unsigned i = 0;
    while (i < fs[f].rank) {
      if (!in[base + i]) {
        ++i;
        continue;
      }
      unsigned e = i;
      while (e < fs[f].rank && in[base + e]) ++e;
      const bool b = fs[f].kind == CoxeterKind::B && i == 0;
      factors.push_back({b ? CoxeterKind::B : CoxeterKind::A, e - i});
      for (unsigned k = i; k < e; ++k) {
        out.to_sub[base + k] = static_cast<int>(out.to_ambient.size());
        out.to_ambient.push_back(base + k);
      }
      i = e;
    }
  }
  out.type = CoxeterType(std::move(factors));
  return out;
}

}  // namespace hcp
