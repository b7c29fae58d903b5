#include "khcube/tqft.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "khcube/errors.hpp"

namespace khcube {

int TensorGenerator::n_minus() const { return std::popcount(minus); }

int TensorGenerator::tqft_degree() const { return (4 - (2 * n_minus()) % 4) % 4; }

int TensorGenerator::q_weight() const {
  int plus = n - n_minus() - (quotient_factor >= 0 ? 1 : 0);
  return plus - n_minus();
}

TensorGenerator make_generator(std::initializer_list<char> labels) {
  TensorGenerator g;
  for (char c : labels) {
    if (c == '-') g.minus |= std::uint64_t{1} << g.n;
    else if (c != '+') throw ContractViolation("generator labels are '+' or '-'");
    ++g.n;
  }
  return g;
}

void ModuleElement::add(const TensorGenerator& g, const Integer& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& other) {
  for (const auto& [g, c] : other.terms_) add(g, c);
  return *this;
}

ModuleElement operator*(const Integer& c, const ModuleElement& x) {
  ModuleElement out;
  for (const auto& [g, v] : x.terms_) out.add(g, c * v);
  return out;
}

Integer ModuleElement::coefficient(const TensorGenerator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Integer(0) : it->second;
}

ModuleElement m(const TensorGenerator& x) {
  if (x.n != 2) throw ContractViolation("m takes a generator of V (x) V");
  if (x.is_minus(0) && x.is_minus(1)) return {};
  return ModuleElement(TensorGenerator{1, (x.is_minus(0) || x.is_minus(1)) ? 1u : 0u, -1});
}

ModuleElement delta(const TensorGenerator& x) {
  if (x.n != 1) throw ContractViolation("delta takes a generator of V");
  if (x.is_minus(0)) return ModuleElement(TensorGenerator{2, 0b11, -1});
  ModuleElement out(TensorGenerator{2, 0b01, -1});  // v- (x) v+
  out.add(TensorGenerator{2, 0b10, -1}, 1);         // v+ (x) v-
  return out;
}

namespace {

ModuleElement linear(const ModuleElement& x, ModuleElement (*f)(const TensorGenerator&)) {
  ModuleElement out;
  for (const auto& [g, c] : x.terms()) out += c * f(g);
  return out;
}

}  // namespace

ModuleElement m(const ModuleElement& x) { return linear(x, m); }
ModuleElement delta(const ModuleElement& x) { return linear(x, delta); }

ModuleElement sigma(const ModuleElement& x) {
  ModuleElement out;
  for (const auto& [g, c] : x.terms()) {
    if (g.n != 1) throw ContractViolation("sigma acts on V");
    if (!g.is_minus(0)) out.add(TensorGenerator{1, 1, -1}, Integer(2) * c);
  }
  return out;
}

ModuleElement apply_local(const ModuleElement& x, int k, int arity,
                          const std::function<ModuleElement(const TensorGenerator&)>& f) {
  ModuleElement out;
  for (const auto& [g, c] : x.terms()) {
    if (k < 0 || k + arity > g.n) throw ContractViolation("apply_local: factor range out of bounds");
    std::uint64_t low = g.minus & ((std::uint64_t{1} << k) - 1);
    std::uint64_t mid = (g.minus >> k) & ((std::uint64_t{1} << arity) - 1);
    std::uint64_t high = g.minus >> (k + arity);
    int rest = g.n - k - arity;
    const ModuleElement local = f(TensorGenerator{arity, mid, -1});
    for (const auto& [h, v] : local.terms()) {
      TensorGenerator r{k + h.n + rest, low | (h.minus << k) | (high << (k + h.n)), -1};
      out.add(r, c * v);
    }
  }
  return out;
}

Integer evaluate_closed_surface(std::span<const int> genera) {
  Integer v(1);
  for (int g : genera) {
    if (g < 0) throw ContractViolation("genus must be nonnegative");
    if (g != 1) return Integer(0);
    v *= Integer(2);
  }
  return v;
}

ModuleElement reduce(const ModuleElement& x, int marked_factor) {
  ModuleElement out;
  for (const auto& [g, c] : x.terms()) {
    if (marked_factor < 0 || marked_factor >= g.n) throw ContractViolation("marked factor out of range");
    if (g.is_minus(marked_factor)) continue;
    TensorGenerator r = g;
    r.quotient_factor = marked_factor;
    out.add(r, c);
  }
  return out;
}

LocalEdgeMap local_edge_map(const EdgeCobordism& e, Direction dir, int src_circles,
                            int dst_circles, int dst_quotient) {
  LocalEdgeMap f;
  f.dst_quotient = dst_quotient;
  f.bystander.assign(src_circles, -1);
  if (dir == Direction::decreasing) {
    f.merge = e.kind == CobordismKind::merge;
    f.in_a = e.src_a;
    f.in_b = e.src_b;
    f.out_a = e.dst_a;
    f.out_b = e.dst_b;
    if (static_cast<int>(e.bystander_map.size()) != src_circles)
      throw ContractViolation("edge map: source circle count mismatch");
    f.bystander = e.bystander_map;
  } else {
    f.merge = e.kind == CobordismKind::split;
    if (f.merge) {
      f.in_a = e.dst_a;
      f.in_b = e.dst_b;
      f.out_a = e.src_a;
    } else {
      f.in_a = e.dst_a;
      f.out_a = e.src_a;
      f.out_b = e.src_b;
    }
    if (static_cast<int>(e.bystander_map.size()) != dst_circles)
      throw ContractViolation("edge map: target circle count mismatch");
    for (int k = 0; k < dst_circles; ++k)
      if (e.bystander_map[k] >= 0) f.bystander[e.bystander_map[k]] = k;
  }
  return f;
}

void apply_edge(const LocalEdgeMap& f, const TensorGenerator& x, std::vector<TensorGenerator>& out) {
  std::uint64_t base = 0;
  for (std::uint64_t bits = x.minus; bits; bits &= bits - 1) {
    int k = std::countr_zero(bits);
    int t = f.bystander[k];
    if (t >= 0) base |= std::uint64_t{1} << t;
  }
  int n_out = static_cast<int>(f.bystander.size()) + (f.merge ? -1 : 1);
  auto emit = [&](std::uint64_t bits) {
    if (f.dst_quotient >= 0 && ((bits >> f.dst_quotient) & 1u)) return;
    out.push_back(TensorGenerator{n_out, bits, f.dst_quotient});
  };
  if (f.merge) {
    bool a = x.is_minus(f.in_a), b = x.is_minus(f.in_b);
    if (a && b) return;
    emit(base | (std::uint64_t{a || b} << f.out_a));
  } else if (x.is_minus(f.in_a)) {
    emit(base | (std::uint64_t{1} << f.out_a) | (std::uint64_t{1} << f.out_b));
  } else {
    emit(base | (std::uint64_t{1} << f.out_a));
    emit(base | (std::uint64_t{1} << f.out_b));
  }
}

std::vector<std::pair<TensorGenerator, int>> edge_image(const EdgeCobordism& e, Direction dir,
                                                       const TensorGenerator& x, int src_circles,
                                                       int dst_circles, int src_quotient,
                                                       int dst_quotient) {
  if (src_quotient >= 0 && x.is_minus(src_quotient)) return {};
  LocalEdgeMap f = local_edge_map(e, dir, src_circles, dst_circles, dst_quotient);
  std::vector<TensorGenerator> img;
  apply_edge(f, x, img);
  std::vector<std::pair<TensorGenerator, int>> out;
  for (auto& g : img) out.emplace_back(g, 1);
  return out;
}

SparseIntMatrix edge_map(const EdgeCobordism& e, Direction dir,
                         std::span<const TensorGenerator> from_basis,
                         std::span<const TensorGenerator> to_basis, int src_quotient,
                         int dst_quotient) {
  if (from_basis.empty() || to_basis.empty())
    return SparseIntMatrix(static_cast<int>(to_basis.size()), static_cast<int>(from_basis.size()));
  int ns = from_basis[0].n, nd = to_basis[0].n;
  std::unordered_map<std::uint64_t, int> index;
  for (int k = 0; k < static_cast<int>(to_basis.size()); ++k) index[to_basis[k].minus] = k;
  LocalEdgeMap f = local_edge_map(e, dir, ns, nd, dst_quotient);
  std::vector<MatrixEntry> entries;
  std::vector<TensorGenerator> img;
  for (int j = 0; j < static_cast<int>(from_basis.size()); ++j) {
    if (src_quotient >= 0 && from_basis[j].is_minus(src_quotient)) continue;
    img.clear();
    apply_edge(f, from_basis[j], img);
    for (const auto& g : img) {
      auto it = index.find(g.minus);
      if (it == index.end()) throw ContractViolation("edge map image outside the target basis");
      entries.push_back({it->second, j, Integer(1)});
    }
  }
  return SparseIntMatrix::from_triplets(static_cast<int>(to_basis.size()),
                                        static_cast<int>(from_basis.size()), std::move(entries));
}

std::vector<TensorGenerator> tensor_basis(int n, int quotient_factor) {
  std::vector<TensorGenerator> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (quotient_factor >= 0 && ((bits >> quotient_factor) & 1u)) continue;
    out.push_back(TensorGenerator{n, bits, quotient_factor});
  }
  return out;
}

}  // namespace khcube
