#include <algorithm>
#include <sstream>

#include "khcube/errors.hpp"
#include "khcube/homalg.hpp"
#include "khcube/parallel.hpp"

namespace khcube {

int BigradedComplex::dim(Bidegree b) const {
  auto it = blocks.find(b);
  return it == blocks.end() ? 0 : static_cast<int>(it->second.size());
}

std::size_t BigradedComplex::total_dim() const {
  std::size_t n = 0;
  for (const auto& [b, basis] : blocks) n += basis.size();
  return n;
}

SparseIntMatrix BigradedComplex::differential(Bidegree source) const {
  auto it = differentials.find(source);
  if (it != differentials.end()) return it->second;
  return SparseIntMatrix(dim({source.h + 1, source.q}), dim(source));
}

std::int64_t BigradedHomology::total_rank() const {
  std::int64_t n = 0;
  for (const auto& [b, g] : groups) n += g.free_rank;
  return n;
}

std::int64_t BigradedHomology::rank_at(Bidegree b) const {
  auto it = groups.find(b);
  return it == groups.end() ? 0 : it->second.free_rank;
}

BigradedHomology homology(const BigradedComplex& c, int threads) {
  return homology(c, c.meta.ring, threads);
}

BigradedHomology homology(const BigradedComplex& c, const Ring& ring, int threads) {
  std::vector<Bidegree> sources;
  for (const auto& [b, m] : c.differentials) sources.push_back(b);

  std::vector<char> square_ok(sources.size(), 1);
  parallel_for(sources.size(), threads, [&](std::size_t k) {
    auto next = c.differentials.find({sources[k].h + 1, sources[k].q});
    if (next == c.differentials.end()) return;
    square_ok[k] = (next->second * c.differentials.at(sources[k])).is_zero();
  });
  for (std::size_t k = 0; k < sources.size(); ++k)
    if (!square_ok[k]) {
      std::ostringstream msg;
      msg << "d^2 != 0 starting at (h,q) = (" << sources[k].h << "," << sources[k].q << ")";
      throw ContractViolation(msg.str());
    }

  std::vector<SnfResult> snf(sources.size());
  // Largest matrices first keeps the pool busy until the end.
  std::vector<std::size_t> order(sources.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return c.differentials.at(sources[a]).nnz() > c.differentials.at(sources[b]).nnz();
  });
  parallel_for(order.size(), threads, [&](std::size_t i) {
    std::size_t k = order[i];
    const auto& m = c.differentials.at(sources[k]);
    if (ring.kind == Ring::Kind::Z) snf[k] = smith_normal_form(m);
    else snf[k].rank = rank_over(m, ring);
  });

  std::map<Bidegree, const SnfResult*> out_of, into;
  for (std::size_t k = 0; k < sources.size(); ++k) {
    out_of[sources[k]] = &snf[k];
    into[{sources[k].h + 1, sources[k].q}] = &snf[k];
  }

  BigradedHomology h;
  h.ring = ring;
  for (const auto& [b, basis] : c.blocks) {
    HomologyGroup g;
    g.free_rank = static_cast<std::int64_t>(basis.size());
    if (auto it = out_of.find(b); it != out_of.end()) g.free_rank -= it->second->rank;
    if (auto it = into.find(b); it != into.end()) {
      g.free_rank -= it->second->rank;
      for (const auto& d : it->second->diagonal)
        if (!d.is_unit())
          for (auto& pk : prime_power_decomposition(d)) g.torsion.push_back(std::move(pk));
      std::sort(g.torsion.begin(), g.torsion.end());
    }
    if (g.free_rank < 0) throw ContractViolation("negative homology rank; inconsistent complex");
    if (g.free_rank > 0 || !g.torsion.empty()) h.groups[b] = std::move(g);
  }
  return h;
}

std::string poincare_polynomial(const BigradedHomology& h) {
  if (!h.ring.is_field()) throw ContractViolation("Poincare polynomial needs field coefficients");
  std::ostringstream out;
  bool first = true;
  for (const auto& [b, g] : h.groups) {
    if (g.free_rank == 0) continue;
    if (!first) out << " + ";
    first = false;
    std::ostringstream mono;
    auto power = [&](char var, int e) {
      if (e == 0) return;
      if (mono.tellp() > 0) mono << ' ';
      mono << var;
      if (e != 1) mono << '^' << e;
    };
    power('t', b.h);
    power('q', b.q);
    std::string m = mono.str();
    if (m.empty()) out << g.free_rank;
    else if (g.free_rank == 1) out << m;
    else out << g.free_rank << ' ' << m;
  }
  if (first) out << '0';
  return out.str();
}

std::map<int, std::int64_t> euler_characteristic(const BigradedHomology& h) {
  std::map<int, std::int64_t> chi;
  for (const auto& [b, g] : h.groups) chi[b.q] += (b.h % 2 == 0 ? 1 : -1) * g.free_rank;
  std::erase_if(chi, [](const auto& kv) { return kv.second == 0; });
  return chi;
}

std::map<int, std::int64_t> euler_characteristic(const BigradedComplex& c) {
  std::map<int, std::int64_t> chi;
  for (const auto& [b, basis] : c.blocks)
    chi[b.q] += (b.h % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(basis.size());
  std::erase_if(chi, [](const auto& kv) { return kv.second == 0; });
  return chi;
}

}  // namespace khcube
