#include <doctest.h>

#include <functional>

#include "sod/hilbert.hpp"

using namespace sod;

namespace {

std::vector<Monomial> monomials_of_degree(std::size_t nvars, long d) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  std::function<void(std::size_t, long)> rec = [&](std::size_t v, long left) {
    if (v + 1 == nvars) {
      m.e[v] = static_cast<int32_t>(left);
      out.push_back(m);
      return;
    }
    for (long k = 0; k <= left; ++k) {
      m.e[v] = static_cast<int32_t>(k);
      rec(v + 1, left - k);
    }
  };
  if (nvars) rec(0, d);
  return out;
}

// Standard monomial count straight from the leading terms, an oracle for the
// series expansion.
long quotient_dim_oracle(const GroebnerBasis& gb, long t) {
  long count = 0;
  for (const auto& m : monomials_of_degree(gb.ring->nvars(), t)) {
    bool reducible = false;
    for (const auto& g : gb.polys)
      if (g.leading_monomial().divides(m)) reducible = true;
    if (!reducible) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("free ring: projective space invariants") {
  const auto R = make_ring({"x", "y", "z"});
  const HilbertData h = hilbert_data(Ideal{R, {}});
  CHECK(h.proj_dim == 2);
  CHECK(h.degree == 1);
  CHECK(h.hp_at(4) == 15);  // binom(6,2)
  CHECK(h.arithmetic_genus() == 0);
}

TEST_CASE("numerator of a monomial ideal against hand count") {
  // S = k[x,y], I = (x^2, x*y): quotient dimensions 1, 2, 1, 1, 1, ...
  Monomial x2(2), xy(2);
  x2.e = {2, 0};
  xy.e = {1, 1};
  const std::vector<Monomial> gens = {x2, xy};
  const auto num = hilbert_numerator(gens, 2);
  const auto R = make_ring({"x", "y"});
  const Ideal I = parse_ideal(R, {"x^2", "x*y"});
  const HilbertData h = hilbert_data(I);
  CHECK(h.numerator == num);
  const auto vals = h.h_function(5, 2);
  CHECK(vals == std::vector<long>{1, 2, 1, 1, 1, 1});
}

TEST_CASE("twisted cubic: degree 3 rational curve") {
  const auto R = make_ring({"x", "y", "z", "w"});
  const Ideal I = parse_ideal(R, {"x*z - y^2", "y*w - z^2", "x*w - y*z"});
  const HilbertData h = hilbert_data(I);
  CHECK(h.proj_dim == 1);
  CHECK(h.degree == 3);
  REQUIRE(h.hp.size() == 2);
  CHECK(h.hp[0] == 1);
  CHECK(h.hp[1] == 3);  // P(t) = 3t + 1
  CHECK(h.arithmetic_genus() == 0);

  // Series values agree with the standard monomial oracle.
  const GroebnerBasis gb = ideal_gb(I);
  const auto vals = h.h_function(6, 4);
  for (long t = 0; t <= 6; ++t) CHECK(vals[t] == quotient_dim_oracle(gb, t));
  // And with the Hilbert polynomial from degree 1 on.
  for (long t = 1; t <= 6; ++t) CHECK(h.hp_at(t) == vals[t]);
}

TEST_CASE("plane curves: conic and elliptic cubic") {
  const auto R = make_ring({"x", "y", "z"});
  const HilbertData conic = hilbert_data(parse_ideal(R, {"x*y - z^2"}));
  CHECK(conic.proj_dim == 1);
  CHECK(conic.degree == 2);
  CHECK(conic.arithmetic_genus() == 0);

  const HilbertData cubic = hilbert_data(parse_ideal(R, {"x^3 + y^3 + z^3"}));
  CHECK(cubic.proj_dim == 1);
  CHECK(cubic.degree == 3);
  CHECK(cubic.arithmetic_genus() == 1);
}

TEST_CASE("two skew lines have genus -1") {
  const auto R = make_ring({"x", "y", "z", "w"});
  const Ideal I = ideal_intersection(parse_ideal(R, {"x", "y"}),
                                     parse_ideal(R, {"z", "w"}));
  const HilbertData h = hilbert_data(I);
  CHECK(h.proj_dim == 1);
  CHECK(h.degree == 2);
  CHECK(h.hp_at(0) == 2);
  CHECK(h.arithmetic_genus() == -1);
}

TEST_CASE("zero-dimensional: a single point") {
  const auto R = make_ring({"x", "y", "z"});
  const HilbertData h =
      hilbert_data(point_ideal(R, {rat(1), rat(-2), rat(3)}));
  CHECK(h.proj_dim == 0);
  CHECK(h.degree == 1);
  CHECK(h.hp.size() == 1);
  CHECK(h.hp_at(0) == 1);
}

TEST_CASE("unit ideal collapses to the zero module") {
  const auto R = make_ring({"x", "y"});
  const HilbertData h = hilbert_data(parse_ideal(R, {"x", "y", "1/2"}));
  CHECK(h.is_zero);
  CHECK(h.degree == 0);
}

TEST_CASE("inhomogeneous input is rejected") {
  const auto R = make_ring({"x", "y"});
  CHECK_THROWS_AS(hilbert_data(parse_ideal(R, {"x^2 - y"})),
                  UnsupportedError);
}
