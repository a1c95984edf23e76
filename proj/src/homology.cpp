#include "monideal/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "monideal/decomposition.hpp"
#include "monideal/errors.hpp"

namespace monideal {

using boost::multiprecision::cpp_int;

SimplicialComplex SimplicialComplex::from_maximal_faces(
    const std::vector<std::vector<int>>& maximal) {
  std::set<std::vector<int>> closed;
  closed.insert({});
  // Closure under subsets, one maximal face at a time.
  for (const auto& face : maximal) {
    std::vector<int> sorted = face;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    size_t k = sorted.size();
    if (k > 25) throw TooLarge("face too large");
    for (uint32_t mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> sub;
      for (size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.push_back(sorted[i]);
      closed.insert(std::move(sub));
    }
  }
  SimplicialComplex complex;
  complex.faces.assign(closed.begin(), closed.end());
  return complex;
}

int matrix_rank_exact(const std::vector<std::vector<long long>>& m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

  // Bareiss fraction-free elimination with row pivoting.
  size_t rank = 0;
  cpp_int prev = 1;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j)
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

std::map<int, int> reduced_homology_ranks(const SimplicialComplex& complex) {
  std::map<int, int> ranks;
  if (complex.faces.empty()) return ranks;  // void complex

  // Faces grouped by cardinality, with index maps for the boundary matrices.
  std::map<size_t, std::map<std::vector<int>, int>> by_size;
  for (const auto& face : complex.faces) {
    if (face.size() > 30) throw TooLarge("complex too large");
    auto& level = by_size[face.size()];
    int idx = static_cast<int>(level.size());
    level.emplace(face, idx);
  }
  size_t max_size = by_size.rbegin()->first;

  // boundary_rank[k] = rank of the boundary map from k-element faces to
  // (k-1)-element faces (the empty face gives the reduced complex).
  std::vector<int> boundary_rank(max_size + 2, 0);
  for (size_t k = 1; k <= max_size; ++k) {
    auto src = by_size.find(k);
    auto dst = by_size.find(k - 1);
    if (src == by_size.end() || dst == by_size.end()) continue;
    std::vector<std::vector<long long>> matrix(
        dst->second.size(), std::vector<long long>(src->second.size(), 0));
    for (const auto& [face, col] : src->second) {
      for (size_t drop = 0; drop < k; ++drop) {
        std::vector<int> sub;
        sub.reserve(k - 1);
        for (size_t i = 0; i < k; ++i)
          if (i != drop) sub.push_back(face[i]);
        auto it = dst->second.find(sub);
        if (it == dst->second.end()) continue;  // closure guarantees presence
        matrix[static_cast<size_t>(it->second)][static_cast<size_t>(col)] =
            (drop % 2 == 0) ? 1 : -1;
      }
    }
    boundary_rank[k] = matrix_rank_exact(matrix);
  }

  for (size_t k = 0; k <= max_size; ++k) {
    auto it = by_size.find(k);
    int chains = it == by_size.end() ? 0 : static_cast<int>(it->second.size());
    int h = chains - boundary_rank[k] - boundary_rank[k + 1];
    if (h != 0) ranks[static_cast<int>(k) - 1] = h;
  }
  return ranks;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) throw NotProper("lcm lattice needs a proper nonzero ideal");
  std::set<std::vector<int>> seen;
  std::vector<Monomial> lattice;
  std::vector<Monomial> worklist = ideal.gens();
  for (const auto& g : ideal.gens()) seen.insert(g.exps());
  while (!worklist.empty()) {
    Monomial m = worklist.back();
    worklist.pop_back();
    lattice.push_back(m);
    for (const auto& g : ideal.gens()) {
      Monomial l = mono_lcm(m, g);
      if (seen.insert(l.exps()).second) worklist.push_back(l);
    }
    if (seen.size() > (1u << 20)) throw TooLarge("lcm lattice too large");
  }
  std::sort(lattice.begin(), lattice.end(), canonical_less);
  return lattice;
}

int BettiTable::total(int i) const {
  if (i < 0 || static_cast<size_t>(i) >= entries_by_degree.size()) return 0;
  int sum = 0;
  for (const auto& [m, r] : entries_by_degree[static_cast<size_t>(i)]) sum += r;
  return sum;
}

int BettiTable::rank(int i, const Monomial& m) const {
  if (i < 0 || static_cast<size_t>(i) >= entries_by_degree.size()) return 0;
  for (const auto& [mono, r] : entries_by_degree[static_cast<size_t>(i)])
    if (mono == m) return r;
  return 0;
}

BettiTable betti_table(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) throw NotProper("Betti table needs a proper nonzero ideal");

  BettiTable table;
  for (const Monomial& m : lcm_lattice(ideal)) {
    auto supp = m.support();
    size_t k = supp.size();
    if (k > 22) throw TooLarge("multidegree support too large");

    // Upper-Koszul complex of m: subsets sigma of supp(m) with
    // m / prod(sigma) in I. Faces are downward closed, so a subset is
    // only tested when its parent below the lowest bit is a face.
    std::vector<char> is_face(1u << k, 0);
    is_face[0] = 1;  // m itself lies in I, being an lcm of generators
    std::vector<std::vector<int>> faces;
    faces.push_back({});
    for (uint32_t mask = 1; mask < (1u << k); ++mask) {
      uint32_t low = mask & (~mask + 1);
      if (!is_face[mask ^ low]) continue;
      std::vector<int> exps = m.exps();
      for (size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) exps[static_cast<size_t>(supp[i]) - 1] -= 1;
      if (!ideal.contains(Monomial(ideal.ring(), exps))) continue;
      is_face[mask] = 1;
      std::vector<int> face;
      for (size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) face.push_back(supp[i]);
      faces.push_back(std::move(face));
    }

    SimplicialComplex complex;
    complex.faces = std::move(faces);
    for (const auto& [degree, rank] : reduced_homology_ranks(complex)) {
      int i = degree + 1;  // beta_{i,m}(I) = dim H~_{i-1}
      if (static_cast<size_t>(i) >= table.entries_by_degree.size())
        table.entries_by_degree.resize(static_cast<size_t>(i) + 1);
      table.entries_by_degree[static_cast<size_t>(i)].emplace_back(m, rank);
    }
  }

  int max_degree = static_cast<int>(table.entries_by_degree.size()) - 1;
  table.pd_quotient = max_degree + 1;
  table.depth_quotient = ideal.ring()->n - table.pd_quotient;
  table.dim_quotient = dim_quotient(ideal);
  return table;
}

int pd_quotient(const MonomialIdeal& ideal) {
  static std::map<std::string, int> cache;
  std::string key = std::to_string(ideal.ring()->n) + "|" + ideal.str();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  int pd = betti_table(ideal).pd_quotient;
  cache.emplace(std::move(key), pd);
  return pd;
}

int depth_quotient(const MonomialIdeal& ideal) {
  return ideal.ring()->n - pd_quotient(ideal);
}

}  // namespace monideal
