#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "support.hpp"
#include "xyzent/model.hpp"

using namespace xyzent;

TEST_CASE("hamiltonian matches the Pauli construction") {
  test::Draws draws;
  for (int n = 0; n < 1000; ++n) {
    const ModelParams p = draws.params();
    const Matrix4 h = build_hamiltonian(p);
    CHECK(test::max_diff(h, test::pauli_hamiltonian(p)) <= 1e-14);
    CHECK(h.hermiticity_defect() == 0.0);
    CHECK(std::abs(h.trace()) <= 1e-14);
  }
}

TEST_CASE("hamiltonian entries") {
  const ModelParams p{1.0, 2.0, 3.0, 0.5, 0.25, 0.75};
  const Matrix4 h = build_hamiltonian(p);
  const Derived d = derive(p);
  CHECK(d.j_plus == 1.5);
  CHECK(d.j_minus == -0.5);
  CHECK(h(0, 0) == Complex(3.0 / 2 + 0.5));
  CHECK(h(1, 1) == Complex(-3.0 / 2 + 0.25));
  CHECK(h(2, 2) == Complex(-3.0 / 2 - 0.25));
  CHECK(h(3, 3) == Complex(3.0 / 2 - 0.5));
  CHECK(h(0, 3) == Complex(-0.5));
  CHECK(h(3, 0) == Complex(-0.5));
  CHECK(h(1, 2) == Complex(1.5, 0.75));
  CHECK(h(2, 1) == Complex(1.5, -0.75));

  // everything outside the two blocks vanishes
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool outer = (i == 0 || i == 3) && (j == 0 || j == 3);
      const bool inner = (i == 1 || i == 2) && (j == 1 || j == 2);
      if (!outer && !inner) CHECK(h(i, j) == Complex(0.0));
    }
}

TEST_CASE("zero parameters give the zero matrix") {
  CHECK(build_hamiltonian(ModelParams{}).max_abs() == 0.0);
}

TEST_CASE("only Jz gives diag(1,-1,-1,1) Jz/2") {
  const Matrix4 h = build_hamiltonian({0, 0, 2, 0, 0, 0});
  CHECK(test::max_diff(h, Matrix4::diagonal({1, -1, -1, 1})) == 0.0);
}

TEST_CASE("swapping the qubits maps b to -b and D to -D") {
  Matrix4 swap;
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  test::Draws draws(5);
  for (int n = 0; n < 200; ++n) {
    const ModelParams p = draws.params();
    ModelParams q = p;
    q.field_b = -p.field_b;
    q.dm_D = -p.dm_D;
    CHECK(test::max_diff(swap * build_hamiltonian(p) * swap, build_hamiltonian(q)) <= 1e-15);
  }
}

TEST_CASE("derived quantities") {
  const Derived d = derive({3.0, 1.0, 0.0, 0.0, 4.0, 0.0});
  CHECK(d.j_plus == 2.0);
  CHECK(d.j_minus == 1.0);
  CHECK(d.mu == 1.0);
  CHECK(d.nu == doctest::Approx(std::sqrt(20.0)));
  CHECK(derive({0, 0, 0, 3, 0, 0}).mu == 3.0);
  CHECK(derive({1, 1, 0, 0, 0, 1}).nu == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("parameter validation") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_NOTHROW(ModelParams{}.validate());
  CHECK_THROWS_WITH_AS(ModelParams({0, 0, nan, 0, 0, 0}).validate(), doctest::Contains("j_z"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(ModelParams({0, 0, 0, 0, 0, inf}).validate(), doctest::Contains("D"), std::invalid_argument);
  CHECK_FALSE(ModelParams({0, 0, 0, inf, 0, 0}).is_finite());
  CHECK_THROWS_AS(build_hamiltonian({nan, 0, 0, 0, 0, 0}), std::invalid_argument);
  CHECK(ModelParams({1, -7, 2, 0, 3, 0}).max_abs() == 7.0);
}

TEST_CASE("temperature must be finite and positive") {
  CHECK(Temperature(0.5).value() == 0.5);
  CHECK_THROWS_AS(Temperature(0.0), std::invalid_argument);
  CHECK_THROWS_AS(Temperature(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(Temperature(std::numeric_limits<double>::infinity()), std::invalid_argument);
  CHECK_THROWS_AS(Temperature(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
}
