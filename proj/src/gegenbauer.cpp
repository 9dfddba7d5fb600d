#include "delsarte/gegenbauer.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace delsarte {

namespace {
std::mutex cache_mutex;
std::map<std::pair<int, int>, Polynomial> cache;
}  // namespace

const Polynomial& gegenbauer(int n, int k) {
  if (n < 2) throw std::invalid_argument("gegenbauer: requires dimension n >= 2");
  if (k < 0) throw std::invalid_argument("gegenbauer: requires degree k >= 0");

  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(n, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  // fill the whole ladder up to k; the recurrence needs the two predecessors
  Polynomial t = Polynomial::linear(1, 0);
  if (cache.find({n, 0}) == cache.end())
    cache.emplace(std::make_pair(n, 0), Polynomial::constant(1));
  if (k >= 1 && cache.find({n, 1}) == cache.end())
    cache.emplace(std::make_pair(n, 1), t);
  for (int j = 2; j <= k; ++j) {
    if (cache.find({n, j}) != cache.end()) continue;
    const Polynomial& prev = cache.at({n, j - 1});
    const Polynomial& prev2 = cache.at({n, j - 2});
    Polynomial num = t * prev * Rational(2 * j + n - 4) - prev2 * Rational(j - 1);
    cache.emplace(std::make_pair(n, j), num * Rational(1, j + n - 3));
  }
  return cache.at(key);
}

double gegenbauer_eval(int n, int k, double t) {
  if (n < 2) throw std::invalid_argument("gegenbauer_eval: requires dimension n >= 2");
  if (k < 0) throw std::invalid_argument("gegenbauer_eval: requires degree k >= 0");
  if (k == 0) return 1.0;
  if (k == 1) return t;
  double g_prev2 = 1.0;
  double g_prev = t;
  for (int j = 2; j <= k; ++j) {
    double g = ((2 * j + n - 4) * t * g_prev - (j - 1) * g_prev2) / (j + n - 3);
    g_prev2 = g_prev;
    g_prev = g;
  }
  return g_prev;
}

}  // namespace delsarte
