#include "theta/thetapoly.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "theta/errors.hpp"

namespace theta {

PathLengths::PathLengths(std::vector<int> lengths) : s_(std::move(lengths)) {
  if (s_.empty()) throw DomainError("PathLengths: at least one path is required");
  for (int s : s_)
    if (s < 1) throw DomainError("PathLengths: path lengths must be >= 1, got " + std::to_string(s));
  std::sort(s_.begin(), s_.end());
}

PathLengths PathLengths::parse(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw DomainError("PathLengths: cannot parse '" + std::string(text) + "'");
    out.push_back(value);
    pos = end + 1;
  }
  return PathLengths(std::move(out));
}

PathLengths PathLengths::uniform(int s, int k) {
  if (k < 1) throw DomainError("PathLengths: k must be >= 1");
  return PathLengths(std::vector<int>(static_cast<std::size_t>(k), s));
}

int PathLengths::total_length() const { return std::accumulate(s_.begin(), s_.end(), 0); }

int PathLengths::vertex_count() const { return 2 + total_length() - k(); }

bool PathLengths::nondegenerate() const { return k() >= 3 && s_.front() >= 2; }

PathLengths PathLengths::with_extra(int s) const {
  auto v = s_;
  v.push_back(s);
  return PathLengths(std::move(v));
}

PathLengths PathLengths::incremented(std::size_t i) const {
  auto v = s_;
  v.at(i) += 1;
  return PathLengths(std::move(v));
}

std::string PathLengths::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < s_.size(); ++i) out << (i ? ", " : "") << s_[i];
  out << ')';
  return out.str();
}

namespace {

// y^a - y^b
IntPolynomial binomial_difference(std::size_t a, std::size_t b) {
  return IntPolynomial::monomial(1, a) - IntPolynomial::monomial(1, b);
}

void require_nondegenerate(const PathLengths& paths, const char* what) {
  if (!paths.nondegenerate())
    throw DomainError(std::string(what) + ": requires k >= 3 and every path length >= 2, got " +
                      paths.to_string());
}

}  // namespace

IntPolynomial f_polynomial(const PathLengths& paths) {
  // y^-1 prod(y^s - y) = y^(k-1) prod(y^(s-1) - 1)
  IntPolynomial first{1};
  IntPolynomial second = IntPolynomial::monomial(1, static_cast<std::size_t>(paths.k() - 1));
  for (int s : paths.lengths()) {
    first = multiply(first, binomial_difference(static_cast<std::size_t>(s), 0));
    second = multiply(second, binomial_difference(static_cast<std::size_t>(s - 1), 0));
  }
  return first - second;
}

IntPolynomial chromatic_polynomial(const PathLengths& paths) {
  // pi = (-1)^(S-1) (1-z)/z^(k-1) f(1-z). In y, z^(k-1) = (-1)^(k-1) (y-1)^(k-1),
  // and (y-1)^k divides f, so the quotient is exact.
  const int k = paths.k();
  IntPolynomial in_y = divide_linear(f_polynomial(paths), 1, static_cast<unsigned>(k - 1));
  in_y = multiply(in_y, IntPolynomial{0, 1});
  if ((paths.total_length() - 1 - (k - 1)) % 2 != 0) in_y = -in_y;
  return compose_linear(in_y, 1, -1);
}

std::vector<std::vector<BigInt>> subset_sum_counts(const PathLengths& paths) {
  const auto k = static_cast<std::size_t>(paths.k());
  const auto total = static_cast<std::size_t>(paths.total_length());
  std::vector<std::vector<BigInt>> counts(k + 1, std::vector<BigInt>(total + 1, BigInt(0)));
  counts[0][0] = 1;
  std::size_t used = 0;
  for (int s_int : paths.lengths()) {
    const auto s = static_cast<std::size_t>(s_int);
    ++used;
    // multiply by (1 + t y^s), walking size downward so each path is used once
    for (std::size_t m = used; m >= 1; --m)
      for (std::size_t d = total; d >= s; --d) counts[m][d] += counts[m - 1][d - s];
  }
  return counts;
}

namespace {

// y^(S-1) - sum_{m=2..k} sign(m) sum_{|X|=k-m} y^{s_X} (1 + ... + y^(m-2))
IntPolynomial subset_form(const PathLengths& paths, bool keep_signs) {
  const int k = paths.k();
  const auto total = static_cast<std::size_t>(paths.total_length());
  const auto counts = subset_sum_counts(paths);
  std::vector<BigInt> c(total, BigInt(0));
  c[total - 1] = 1;
  for (int m = 2; m <= k; ++m) {
    const int sign = (keep_signs && (m % 2 != 0)) ? -1 : 1;
    const auto& row = counts[static_cast<std::size_t>(k - m)];
    for (std::size_t d = 0; d <= total; ++d) {
      if (row[d] == 0) continue;
      for (int j = 0; j <= m - 2; ++j) c[d + static_cast<std::size_t>(j)] -= sign * row[d];
    }
  }
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial phi_polynomial(const PathLengths& paths) {
  require_nondegenerate(paths, "phi_polynomial");
  IntPolynomial phi = subset_form(paths, true);
  if (multiply(phi, IntPolynomial{-1, 1}) != f_polynomial(paths))
    throw InvariantViolation("phi_polynomial: (y - 1) phi != f for " + paths.to_string());
  return phi;
}

IntPolynomial h_polynomial(const PathLengths& paths) {
  std::vector<BigInt> c = phi_polynomial(paths).coeffs();
  for (std::size_t j = 0; j + 1 < c.size(); ++j)
    if (c[j] > 0) c[j] = -c[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial htilde_polynomial(const PathLengths& paths) {
  require_nondegenerate(paths, "htilde_polynomial");
  return subset_form(paths, false);
}

namespace {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Vertex 0 and 1 are the endvertices; internal vertices follow path by path.
Graph build_graph(const PathLengths& paths) {
  Graph g;
  g.n = paths.vertex_count();
  int next = 2;
  for (int s : paths.lengths()) {
    int prev = 0;
    for (int j = 1; j < s; ++j) {
      g.edges.emplace_back(prev, next);
      prev = next++;
    }
    g.edges.emplace_back(prev, 1);
  }
  return g;
}

std::uint64_t enumerate_all(const Graph& g, int z) {
  std::vector<int> color(static_cast<std::size_t>(g.n), 0);
  std::uint64_t proper = 0;
  while (true) {
    bool ok = true;
    for (auto [a, b] : g.edges)
      if (color[static_cast<std::size_t>(a)] == color[static_cast<std::size_t>(b)]) {
        ok = false;
        break;
      }
    if (ok) ++proper;
    int i = 0;
    while (i < g.n && ++color[static_cast<std::size_t>(i)] == z) color[static_cast<std::size_t>(i++)] = 0;
    if (i == g.n) return proper;
  }
}

// Colorings of one path's internal vertices given its end colors, counted by
// sweeping the internal vertices one at a time.
std::uint64_t path_count(int s, int z, int start, int end) {
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(z), 0);
  ways[static_cast<std::size_t>(start)] = 1;
  for (int step = 1; step < s; ++step) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(z), 0);
    for (int a = 0; a < z; ++a)
      for (int b = 0; b < z; ++b)
        if (a != b) next[static_cast<std::size_t>(b)] += ways[static_cast<std::size_t>(a)];
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (int a = 0; a < z; ++a)
    if (a != end) total += ways[static_cast<std::size_t>(a)];
  return total;
}

}  // namespace

std::uint64_t brute_force_chromatic(const PathLengths& paths, int z) {
  if (z < 0) throw DomainError("brute_force_chromatic: z must be >= 0");
  if (paths.vertex_count() > kBruteForceMaxVertices || z > kBruteForceMaxColors)
    throw BudgetExceeded("brute_force_chromatic: " + paths.to_string() + " with z=" + std::to_string(z) +
                         " exceeds the enumeration budget (16 vertices, 6 colors)");
  if (z == 0) return 0;
  const Graph g = build_graph(paths);

  double states = 1.0;
  for (int i = 0; i < g.n; ++i) states *= z;
  if (states <= 1 << 22) return enumerate_all(g, z);

  // Too many joint states: fix the two endvertex colors, then the paths are
  // independent of each other.
  std::uint64_t total = 0;
  for (int cu = 0; cu < z; ++cu)
    for (int cv = 0; cv < z; ++cv) {
      std::uint64_t prod = 1;
      for (int s : paths.lengths()) {
        if (s == 1) {
          prod *= cu != cv ? 1 : 0;
        } else {
          prod *= path_count(s, z, cu, cv);
        }
        if (prod == 0) break;
      }
      total += prod;
    }
  return total;
}

}  // namespace theta
