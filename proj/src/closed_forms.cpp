#include "wienerlab/closed_forms.hpp"

#include <queue>
#include <stdexcept>

#include "wienerlab/invariants.hpp"

namespace wienerlab {

int closed_form_min_order(ClosedFormFamily family) {
  switch (family) {
    case ClosedFormFamily::Cycle: return 3;
    case ClosedFormFamily::H112: return 4;
    case ClosedFormFamily::H122: return 5;
    case ClosedFormFamily::H113: return 6;
  }
  throw std::invalid_argument("bad closed-form family");
}

long long closed_form(ClosedFormFamily family, int n) {
  if (n < closed_form_min_order(family))
    throw std::invalid_argument("n below closed-form family minimum");
  const long long m = n;
  const bool odd = n % 2 != 0;
  long long numerator = 0;
  switch (family) {
    case ClosedFormFamily::Cycle:
      numerator = odd ? m * m * m - m : m * m * m;
      break;
    case ClosedFormFamily::H112:
      numerator = odd ? m * m * m - m * m + 3 * m - 3 : m * m * m - m * m + 2 * m;
      break;
    case ClosedFormFamily::H122:
      numerator = odd ? m * m * m - m * m - m + 17 : m * m * m - m * m - 2 * m + 16;
      break;
    case ClosedFormFamily::H113:
      numerator = odd ? m * m * m - 2 * m * m + 11 * m - 18
                      : m * m * m - 2 * m * m + 12 * m - 16;
      break;
  }
  if (numerator % 8 != 0)
    throw std::logic_error("closed-form numerator not divisible by 8");
  return numerator / 8;
}

long long cycle_wiener_identity(int n) {
  if (n < 3) throw std::invalid_argument("cycle_wiener_identity requires n >= 3");
  const long long angle = angle_value(two_vector(n));  // floor(n^2/4)
  const long long product = n * angle;
  if (product % 2 != 0) throw std::logic_error("n * <2_n> must be even");
  return product / 2;
}

std::string closed_form_family_name(ClosedFormFamily family) {
  switch (family) {
    case ClosedFormFamily::Cycle: return "C_n";
    case ClosedFormFamily::H112: return "H_{n,1,2}";
    case ClosedFormFamily::H122: return "H_{n,2,2}";
    case ClosedFormFamily::H113: return "H_{n,1,3}";
  }
  throw std::invalid_argument("bad closed-form family");
}

long long edge_list_wiener(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  long long twice = 0;
  std::vector<int> dist(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push(v);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (dist[static_cast<std::size_t>(v)] < 0)
        throw std::invalid_argument("edge_list_wiener requires a connected graph");
      twice += dist[static_cast<std::size_t>(v)];
    }
  }
  return twice / 2;
}

}  // namespace wienerlab
