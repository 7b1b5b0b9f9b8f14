#include "wienerlab/families.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace wienerlab {

std::vector<Edge> cycle_edges(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return edges;
}

std::vector<Edge> theta_edges(int n, int p, int q) {
  if (!(1 <= p && p <= q && q <= n - p - q + 1 && q > 1))
    throw std::invalid_argument("theta requires 1 <= p <= q <= n-p-q+1 and q > 1");
  std::vector<Edge> edges;
  int next = 2;
  for (int len : {p, q, n - p - q + 1}) {
    int prev = 0;
    for (int step = 0; step < len - 1; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return edges;
}

std::vector<Edge> i_chord_edges(int n, int i) {
  if (n < 4) throw std::invalid_argument("i_chord requires n >= 4");
  if (!(1 < i && i <= n - 2))
    throw std::invalid_argument("i_chord requires 1 < i <= n-2");
  auto edges = cycle_edges(n);
  edges.emplace_back(0, 2);          // x_1 x_3
  edges.emplace_back(i - 1, i + 1);  // x_i x_{i+2}
  return edges;
}

std::vector<Edge> h22_plus_edges(int n) {
  if (n < 5) throw std::invalid_argument("h22_plus requires n >= 5");
  auto edges = theta_edges(n, 2, 2);
  edges.emplace_back(2, 3);  // midpoints of the two length-2 paths
  return edges;
}

Graph cycle(int n) { return Graph::from_edges(n, cycle_edges(n)); }

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete requires n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph theta(int n, int p, int q) { return Graph::from_edges(n, theta_edges(n, p, q)); }

Graph i_chord(int n, int i) { return Graph::from_edges(n, i_chord_edges(n, i)); }

namespace {

// H_{n,1,3} in the labeling used for the exceptional graphs: the cycle
// x_1..x_n plus the chord x_1x_4.
std::vector<Edge> h_n13_chord_labeling(int n) {
  auto edges = cycle_edges(n);
  edges.emplace_back(0, 3);
  return edges;
}

}  // namespace

Graph exceptional(const std::string& name) {
  if (name == "g6-1") return i_chord(6, 4);
  if (name == "g6-2") {
    auto edges = h_n13_chord_labeling(6);
    edges.emplace_back(0, 2);  // x_1 x_3
    return Graph::from_edges(6, edges);
  }
  if (name == "g6-3") {
    auto edges = h_n13_chord_labeling(6);
    edges.emplace_back(1, 4);  // x_2 x_5
    return Graph::from_edges(6, edges);
  }
  if (name == "g8-1") {
    auto edges = h_n13_chord_labeling(8);
    edges.emplace_back(4, 7);  // x_5 x_8
    return Graph::from_edges(8, edges);
  }
  throw std::invalid_argument("unknown exceptional graph: " + name);
}

Graph h22_plus(int n) { return Graph::from_edges(n, h22_plus_edges(n)); }

Graph script_h_member(int n, int q) {
  if (n < 6 || q < 3 || q > n / 2)
    throw std::invalid_argument("script_h_member requires n >= 6 and 3 <= q <= n/2");
  return theta(n, 1, q);
}

namespace {

std::map<std::string, int> parse_params(const std::string& text) {
  std::map<std::string, int> params;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad family parameter: " + item);
    try {
      params[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad family parameter value: " + item);
    }
  }
  return params;
}

int require(const std::map<std::string, int>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("missing family parameter: " + key);
  return it->second;
}

}  // namespace

Graph build_family(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const auto params =
      colon == std::string::npos ? std::map<std::string, int>{} : parse_params(spec.substr(colon + 1));
  if (kind == "cycle") return cycle(require(params, "n"));
  if (kind == "complete") return complete(require(params, "n"));
  if (kind == "theta")
    return theta(require(params, "n"), require(params, "p"), require(params, "q"));
  if (kind == "ichord") return i_chord(require(params, "n"), require(params, "i"));
  if (kind == "h22plus") return h22_plus(require(params, "n"));
  if (kind == "scripth") return script_h_member(require(params, "n"), require(params, "q"));
  if (kind == "g6-1" || kind == "g6-2" || kind == "g6-3" || kind == "g8-1")
    return exceptional(kind);
  throw std::invalid_argument("unknown family spec: " + spec);
}

}  // namespace wienerlab
