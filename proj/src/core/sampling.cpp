#include "casimir/sampling.hpp"

#include <cstdlib>
#include <string>

namespace casimir {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CASIMIR_SEED")) {
    try {
      std::size_t pos = 0;
      const std::uint64_t v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultSeed;
}

std::int64_t PointSampler::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

BigRational PointSampler::next() {
  const std::int64_t p = uniform(-99, 99);
  const std::int64_t q = uniform(1, 9);
  return BigRational(p, q);
}

BigRational PointSampler::next_nonzero() {
  for (;;) {
    BigRational v = next();
    if (!v.is_zero()) return v;
  }
}

Assignment PointSampler::point(const std::vector<VarId>& vars) {
  Assignment a;
  for (const VarId v : vars) a[v] = next();
  return a;
}

MultiPoly random_poly(PointSampler& s, const std::vector<VarId>& vars, int terms, int max_exp) {
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<Factor> fs;
    for (const VarId v : vars) {
      const auto e = static_cast<std::uint32_t>(s.uniform(0, max_exp));
      if (e > 0) fs.push_back({v, e});
    }
    std::int64_t c = s.uniform(-9, 9);
    if (c == 0) c = 1;
    out.push_back({Monomial::from_factors(std::move(fs)), BigRational(c)});
  }
  return MultiPoly::from_terms(std::move(out));
}

}  // namespace casimir
