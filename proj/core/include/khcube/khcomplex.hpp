#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "khcube/bigraded.hpp"
#include "khcube/cube.hpp"
#include "khcube/diagram.hpp"

namespace khcube {

/// sum_{i < i0} v_i mod 2, with i0 the coordinate where v and u differ (v = u + e_{i0}).
int sign_delta(CubeVertex v, CubeVertex u);
/// sum_{i >= i0} v_i mod 2.
int sign_tilde_delta(CubeVertex v, CubeVertex u);
int edge_sign(SignRule rule, CubeVertex v, CubeVertex u);

/// (|v-u| (|v-u| - 1) / 2 + sum v_i) mod 2 for v >= u coordinatewise.
int msign(std::span<const int> v, std::span<const int> u);

/// Every square w > v, v' > u of the n-cube satisfies
/// s(w,v) + s(v,u) = 1 + s(w,v') + s(v',u) mod 2.
bool two_face_condition(SignRule rule, int n);
/// tilde_delta - delta = sum v_i mod 2 on every edge of the n-cube.
bool sign_rules_differ_by_weight(int n);

struct BuildOptions {
  Variant variant = Variant::unreduced;
  SignRule rule = SignRule::tilde_delta;
  Ring ring = Ring::integers();
  Direction direction = Direction::increasing;
  int crossing_cap = kDefaultCrossingCap;
  int threads = 1;
};

/// Gradings, increasing mode: h = |v| - N-, q = w + |v| + N+ - 2N-, with w the
/// q-weight of the tensor generator. Decreasing mode is the increasing mode of
/// the mirror: h = N - |v| - N+, q = w + N - |v| + N- - 2N+, and d runs from
/// a vertex to the vertices one step below it.
BigradedComplex build_complex(const PlanarDiagram& d, const BuildOptions& opts = {});
Bidegree generator_bidegree(const ComplexMeta& meta, CubeVertex v, const TensorGenerator& g);

bool verify_d_squared(const BigradedComplex& c, int threads = 1);

struct Z4Table {
  std::array<std::int64_t, 4> by_bidegree{};   // homology ranks binned by q - h - b0 mod 4
  std::array<std::int64_t, 4> by_generator{};  // homology of the complex regraded per generator
  bool generatorwise = true;  // every generator's class matches its block's class
  bool agree = false;
};

/// Class of a chain generator: -(tqft degree + k_v) mod 4 with
/// k_v = -b0(K_v) + b0(K) - N- + N+, where b0(K_v) is the circle count g.n.
/// Defined for the decreasing-mode complex.
int generator_z4_class(const ComplexMeta& meta, const TensorGenerator& g);

/// Needs the unreduced decreasing-mode complex and its homology over a field.
Z4Table z4_collapse(const BigradedComplex& c, const BigradedHomology& h, const PlanarDiagram& d,
                    int threads = 1);
Z4Table z4_collapse(const PlanarDiagram& d, const Ring& ring = Ring::rationals(), int threads = 1);

}  // namespace khcube
