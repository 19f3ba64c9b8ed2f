#include "kleitman/setcore.hpp"

#include <algorithm>
#include <random>

#include "kleitman/errors.hpp"

namespace kleitman {

std::vector<int> distance_multiset(const Family& f) {
  std::vector<int> out;
  out.reserve(f.size() * (f.size() - (f.size() ? 1 : 0)) / 2);
  for (size_t i = 0; i < f.size(); ++i) {
    for (size_t j = i + 1; j < f.size(); ++j) out.push_back(distance(f[i], f[j]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> distance_set(const Family& f) {
  std::vector<int> out = distance_multiset(f);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> intersection_sizes(const Family& f) {
  std::vector<int> out;
  for (size_t i = 0; i < f.size(); ++i) {
    for (size_t j = i + 1; j < f.size(); ++j) out.push_back(f[i].intersection_size(f[j]));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ValidationResult validate_family(const Family& f, const DistanceSpec& spec) {
  for (size_t i = 0; i < f.size(); ++i) {
    for (size_t j = i + 1; j < f.size(); ++j) {
      int d = distance(f[i], f[j]);
      if (!spec.contains(d)) {
        return {false, std::make_pair(i, j),
                "pair at distance " + std::to_string(d) + " not in {" + spec.to_string() + "}"};
      }
    }
  }
  return {};
}

ValidationResult validate_family(const Family& f, const IntersectionSpec& spec) {
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].cardinality() != spec.uniformity) {
      return {false, std::make_pair(i, i),
              "member of size " + std::to_string(f[i].cardinality()) + ", expected " +
                  std::to_string(spec.uniformity)};
    }
  }
  for (size_t i = 0; i < f.size(); ++i) {
    for (size_t j = i + 1; j < f.size(); ++j) {
      int c = f[i].intersection_size(f[j]);
      if (!spec.contains(c)) {
        return {false, std::make_pair(i, j),
                "pair with intersection " + std::to_string(c) + " not in " + spec.to_string()};
      }
    }
  }
  return {};
}

ValidationResult validate_family_sampled(const Family& f, const DistanceSpec& spec,
                                         std::size_t exhaustive_cap, std::size_t samples,
                                         std::uint64_t seed) {
  if (f.size() <= exhaustive_cap) return validate_family(f, spec);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    int d = distance(f[i], f[j]);
    if (!spec.contains(d)) {
      return {false, std::make_pair(std::min(i, j), std::max(i, j)),
              "sampled pair at distance " + std::to_string(d) + " not in {" + spec.to_string() + "}"};
    }
  }
  return {};
}

Family translate(const Family& f, const Subset& c) {
  if (c.ground_size() != f.ground_size()) throw InvalidInput("translate: ground set mismatch");
  std::vector<Subset> out;
  out.reserve(f.size());
  for (const Subset& s : f) out.push_back(s.sym_diff(c));
  return Family(f.ground_size(), std::move(out));
}

}  // namespace kleitman
