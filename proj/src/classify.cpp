#include "hcp/classify.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <regex>

#include "hcp/error.hpp"
#include "hcp/field.hpp"

namespace hcp {

namespace {

constexpr std::uint64_t kBig = std::numeric_limits<std::uint32_t>::max();

// e l^i, saturating at kBig.
std::uint64_t block_size(unsigned e, std::uint32_t l, unsigned i) {
  std::uint64_t s = e;
  for (unsigned k = 0; k < i && s < kBig; ++k) s *= l;
  return std::min(s, kBig);
}

void check_params(unsigned n, unsigned e, std::uint32_t l) {
  if (n == 0) throw InvalidInput("n must be positive");
  if (e == 0) throw InvalidInput("e must be positive");
  if (!is_prime(l)) throw InvalidInput("l = " + std::to_string(l) + " is not a prime");
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::GL: return "GL";
    case GroupKind::GU: return "GU";
    case GroupKind::Sp: return "Sp";
    case GroupKind::CSp: return "CSp";
    case GroupKind::SO: return "SO";
  }
  return "?";
}

GroupKind parse_group_kind(const std::string& s) {
  static const std::map<std::string, GroupKind> kinds{{"gl", GroupKind::GL},
                                                      {"gu", GroupKind::GU},
                                                      {"sp", GroupKind::Sp},
                                                      {"csp", GroupKind::CSp},
                                                      {"so", GroupKind::SO}};
  auto it = kinds.find(lower(s));
  if (it == kinds.end()) throw InvalidInput("unknown group kind '" + s + "'");
  return it->second;
}

void validate_case(const GroupCase& c) {
  if (c.n == 0) throw InvalidInput("n must be positive");
  const auto [p, d] = prime_power(c.q);
  if (p == 0) throw InvalidInput("q = " + std::to_string(c.q) + " is not a prime power");
  if (!is_prime(c.l)) throw InvalidInput("l = " + std::to_string(c.l) + " is not a prime");
  if (p == c.l)
    throw DefiningCharacteristic("l = " + std::to_string(c.l) + " divides q = " + std::to_string(c.q));
  const bool even = c.n % 2 == 0;
  switch (c.kind) {
    case GroupKind::GL:
    case GroupKind::GU:
      break;
    case GroupKind::Sp:
      if (!even) throw InvalidInput("Sp needs n even");
      if (p != 2) throw InvalidInput("Sp is covered only for q a power of 2");
      break;
    case GroupKind::CSp:
      if (!even) throw InvalidInput("CSp needs n even");
      if (p == 2) throw InvalidInput("CSp needs q odd");
      break;
    case GroupKind::SO:
      if (even) throw InvalidInput("SO is covered only for n odd");
      if (p == 2) throw InvalidInput("SO needs q odd");
      break;
  }
}

std::vector<unsigned> CuspidalShapeGL::levi_blocks() const {
  std::vector<unsigned> out(m_minus1, 1u);
  for (const auto& b : blocks)
    out.insert(out.end(), b.m, static_cast<unsigned>(block_size(e, l, b.i)));
  return out;
}

void validate_shape(const CuspidalShapeGL& s) {
  check_params(s.n, s.e, s.l);
  std::uint64_t total = s.m_minus1;
  for (std::size_t k = 0; k < s.blocks.size(); ++k) {
    const auto& b = s.blocks[k];
    if (b.m == 0) throw InvalidInput("shape blocks need m >= 1");
    if (k > 0 && s.blocks[k - 1].i >= b.i) throw InvalidInput("shape blocks must have increasing i");
    if (s.e == 1 && b.i == 0) throw InvalidInput("for e = 1 the i = 0 blocks belong to the GL_1 part");
    total += block_size(s.e, s.l, b.i) * b.m;
    if (total > kBig) break;
  }
  if (total != s.n)
    throw InvalidInput("shape has size " + std::to_string(total) + ", expected n = " +
                       std::to_string(s.n));
}

CuspidalShapeGL make_shape(unsigned n, unsigned e, std::uint32_t l, unsigned m_minus1,
                           std::vector<ShapeBlock> blocks) {
  CuspidalShapeGL s{n, e, l, m_minus1, {}};
  std::map<unsigned, unsigned> merged;
  for (const auto& b : blocks) {
    if (b.m == 0) continue;
    if (e == 1 && b.i == 0)
      s.m_minus1 += b.m;
    else
      merged[b.i] += b.m;
  }
  for (const auto& [i, m] : merged) s.blocks.push_back({i, m});
  validate_shape(s);
  return s;
}

std::vector<CuspidalShapeGL> enumerate_cuspidal_shapes(unsigned n, unsigned e, std::uint32_t l) {
  check_params(n, e, l);
  std::vector<unsigned> exps;
  for (unsigned i = e == 1 ? 1 : 0; block_size(e, l, i) <= n; ++i) exps.push_back(i);

  std::vector<CuspidalShapeGL> out;
  std::vector<unsigned> ms(exps.size());
  for (unsigned a = n + 1; a-- > 0;) {
    const unsigned rest = n - a;
    auto rec = [&](auto&& self, std::size_t idx, std::uint64_t remaining) -> void {
      if (idx == exps.size()) {
        if (remaining != 0) return;
        CuspidalShapeGL s{n, e, l, a, {}};
        for (std::size_t k = 0; k < exps.size(); ++k)
          if (ms[k]) s.blocks.push_back({exps[k], ms[k]});
        out.push_back(std::move(s));
        return;
      }
      const auto size = block_size(e, l, exps[idx]);
      for (std::uint64_t m = remaining / size + 1; m-- > 0;) {
        ms[idx] = static_cast<unsigned>(m);
        self(self, idx + 1, remaining - m * size);
      }
      ms[idx] = 0;
    };
    rec(rec, 0, rest);
  }
  return out;
}

std::string format_shape(const CuspidalShapeGL& s) {
  std::string out = "1^" + std::to_string(s.m_minus1);
  for (const auto& b : s.blocks)
    out += "+(" + std::to_string(s.e) + "*" + std::to_string(s.l) + "^" + std::to_string(b.i) +
           ")^" + std::to_string(b.m);
  return out;
}

CuspidalShapeGL parse_shape(const std::string& text, unsigned n, unsigned e, std::uint32_t l) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  static const std::regex whole(R"(^1\^(\d+)((\+\(\d+\*\d+\^\d+\)\^\d+)*)$)");
  static const std::regex block(R"(\+\((\d+)\*(\d+)\^(\d+)\)\^(\d+))");
  std::smatch m;
  if (!std::regex_match(t, m, whole)) throw InvalidInput("cannot parse shape '" + text + "'");
  auto num = [&](const std::string& s) -> unsigned {
    if (s.size() > 9) throw InvalidInput("number too large in shape '" + text + "'");
    return static_cast<unsigned>(std::stoul(s));
  };
  const unsigned a = num(m[1].str());
  std::vector<ShapeBlock> blocks;
  const std::string tail = m[2].str();
  for (auto it = std::sregex_iterator(tail.begin(), tail.end(), block); it != std::sregex_iterator();
       ++it) {
    const auto& bm = *it;
    if (num(bm[1].str()) != e)
      throw InvalidInput("shape block uses e = " + bm[1].str() + ", expected " + std::to_string(e));
    if (num(bm[2].str()) != l)
      throw InvalidInput("shape block uses l = " + bm[2].str() + ", expected " + std::to_string(l));
    blocks.push_back({num(bm[3].str()), num(bm[4].str())});
  }
  return make_shape(n, e, l, a, std::move(blocks));
}

std::vector<unsigned> min_split_levi(const CuspidalShapeGL& s) {
  std::vector<unsigned> out;
  if (s.m_minus1) out.push_back(s.m_minus1);
  for (const auto& b : s.blocks) out.push_back(static_cast<unsigned>(block_size(s.e, s.l, b.i) * b.m));
  std::sort(out.begin(), out.end());
  return out;
}

CoxeterType relative_weyl_group(const CuspidalShapeGL& s) {
  std::vector<CoxeterFactor> f;
  if (s.m_minus1 >= 2) f.push_back({CoxeterKind::A, s.m_minus1 - 1});
  for (const auto& b : s.blocks)
    if (b.m >= 2) f.push_back({CoxeterKind::A, b.m - 1});
  return CoxeterType(std::move(f));
}

std::optional<std::vector<unsigned>> normalizer_equality_exists(const CuspidalShapeGL& s) {
  auto levi = min_split_levi(s);
  if (levi.size() <= 1) return std::nullopt;
  return levi;
}

std::string to_string(Verdict v) { return v == Verdict::Primitive ? "Primitive" : "Imprimitive"; }

PrimitivityVerdict shape_verdict(const CuspidalShapeGL& s) {
  validate_shape(s);
  if (s.blocks.empty()) return {Verdict::Primitive, {}, "torus-levi"};
  if (s.m_minus1 == 0 && s.blocks.size() == 1) return {Verdict::Primitive, {}, "single-block-type"};
  return {Verdict::Imprimitive, min_split_levi(s), "mixed-blocks"};
}

PrimitivityVerdict is_primitive_unipotent(const GroupCase& c,
                                          const std::optional<CuspidalShapeGL>& shape) {
  validate_case(c);
  if (c.kind != GroupKind::GL) {
    if (shape) throw InvalidInput("a cuspidal shape is only read for GL");
    return {Verdict::Primitive, {}, "not-type-GL"};
  }
  if (!shape) throw InvalidInput("GL needs a cuspidal shape");
  const auto e = multiplicative_order(c.q, c.l);
  if (shape->n != c.n || shape->l != c.l || shape->e != e)
    throw InvalidInput("shape parameters (n=" + std::to_string(shape->n) + ", e=" +
                       std::to_string(shape->e) + ", l=" + std::to_string(shape->l) +
                       ") do not match the case (n=" + std::to_string(c.n) + ", e=" +
                       std::to_string(e) + ", l=" + std::to_string(c.l) + ")");
  return shape_verdict(*shape);
}

void validate_factors(const JordanFactorList& f) {
  if (f.factors.empty()) throw InvalidInput("empty Jordan factor list");
  if (!is_prime(f.l)) throw InvalidInput("l = " + std::to_string(f.l) + " is not a prime");
  for (const auto& x : f.factors) {
    validate_case({x.kind == FactorKind::Linear ? GroupKind::GL : GroupKind::GU, x.n, x.q, f.l});
    if (x.kind == FactorKind::Unitary) {
      if (x.shape) throw InvalidInput("unitary factors carry no cuspidal shape");
      continue;
    }
    if (!x.shape) throw InvalidInput("linear factor needs a cuspidal shape");
    const auto e = multiplicative_order(x.q, f.l);
    if (x.shape->n != x.n || x.shape->l != f.l || x.shape->e != e)
      throw InvalidInput("linear factor shape does not match (n, e, l) of the factor");
    validate_shape(*x.shape);
  }
}

PrimitivityVerdict is_primitive_series(const JordanFactorList& f) {
  validate_factors(f);
  PrimitivityVerdict out{Verdict::Primitive, {}, "factorwise: no imprimitive factor"};
  std::vector<unsigned> witness;
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    const auto& x = f.factors[k];
    if (x.kind == FactorKind::Linear) {
      const auto v = shape_verdict(*x.shape);
      if (v.verdict == Verdict::Imprimitive) {
        if (out.verdict == Verdict::Primitive)
          out = {Verdict::Imprimitive, {}, "factorwise: linear factor " + std::to_string(k + 1)};
        witness.insert(witness.end(), v.witness.begin(), v.witness.end());
        continue;
      }
    }
    witness.push_back(x.n);
  }
  if (out.verdict == Verdict::Imprimitive) out.witness = std::move(witness);
  return out;
}

}  // namespace hcp
