#include <doctest.h>

#include <random>
#include <vector>

#include "fixtures.hpp"
#include "invsr/errors.hpp"
#include "invsr/kernels.hpp"

using namespace invsr;
using namespace invsr::kernels;

namespace {

struct RandomTable {
  std::size_t n;
  std::size_t stride;
  std::vector<std::uint8_t> cells;

  TableRef ref() const { return {cells, n, stride}; }
};

RandomTable random_table(std::mt19937& rng, std::size_t n, std::size_t stride) {
  RandomTable t{n, stride, std::vector<std::uint8_t>(n * stride + 16, 0)};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t.cells[i * stride + j] = static_cast<std::uint8_t>(pick(rng));
    }
  }
  return t;
}

std::vector<std::uint8_t> random_map(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::vector<std::uint8_t> f(n);
  for (auto& v : f) {
    v = static_cast<std::uint8_t>(pick(rng));
  }
  return f;
}

// Plain loops, independent of every backend.
bool first_hom_violation(const RandomTable& t, const std::vector<std::uint8_t>& f,
                         std::size_t& x, std::size_t& y) {
  for (x = 0; x < t.n; ++x) {
    for (y = 0; y < t.n; ++y) {
      if (f[t.cells[x * t.stride + y]] != t.cells[f[x] * t.stride + f[y]]) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("backend names parse back") {
  for (Backend b : {Backend::scalar, Backend::ssse3, Backend::avx2, Backend::neon}) {
    CHECK(parse_backend(backend_name(b)) == b);
  }
  CHECK_FALSE(parse_backend("sse9").has_value());
  CHECK(supports(Backend::scalar));
  CHECK(supports(detected_backend()));
}

TEST_CASE("unsupported backend is rejected") {
  for (Backend b : {Backend::ssse3, Backend::avx2, Backend::neon}) {
    if (!supports(b)) {
      CHECK_THROWS_AS(kernels_for(b), PreconditionError);
      CHECK_THROWS_AS(set_backend(b), PreconditionError);
    }
  }
}

TEST_CASE("every backend agrees with the scalar reference on random inputs") {
  std::mt19937 rng(20240611);
  const auto& ref = kernels_for(Backend::scalar);
  for (const Backend b : supported_backends()) {
    CAPTURE(backend_name(b));
    const auto& k = kernels_for(b);
    for (std::size_t n = 1; n <= kMaxSimdElements; ++n) {
      for (int trial = 0; trial < 40; ++trial) {
        const auto t = random_table(rng, n, trial % 2 ? 16 : 32);
        const auto f = random_map(rng, n);
        const auto g = random_map(rng, n);

        std::vector<std::uint8_t> want(n), got(n);
        ref.compose(f.data(), g.data(), want.data(), n);
        k.compose(f.data(), g.data(), got.data(), n);
        for (std::size_t x = 0; x < n; ++x) {
          REQUIRE(want[x] == f[g[x]]);
        }
        CHECK(got == want);

        ref.pointwise(t.cells.data(), t.stride, f.data(), g.data(), want.data(), n);
        k.pointwise(t.cells.data(), t.stride, f.data(), g.data(), got.data(), n);
        for (std::size_t x = 0; x < n; ++x) {
          REQUIRE(want[x] == t.cells[f[x] * t.stride + g[x]]);
        }
        CHECK(got == want);

        std::size_t ox = 0, oy = 0;
        const bool expect = first_hom_violation(t, f, ox, oy);
        std::size_t x = 99, y = 99;
        REQUIRE(ref.hom_violation(t.cells.data(), t.stride, f.data(), n, &x, &y) == expect);
        if (expect) {
          CHECK(x == ox);
          CHECK(y == oy);
        }
        std::size_t kx = 99, ky = 99;
        CHECK(k.hom_violation(t.cells.data(), t.stride, f.data(), n, &kx, &ky) == expect);
        if (expect) {
          CHECK(kx == ox);
          CHECK(ky == oy);
        }

        std::size_t i = 0, j = 0, l = 0, ki = 0, kj = 0, kl = 0;
        const bool ra = ref.assoc_violation(t.cells.data(), t.stride, n, &i, &j, &l);
        CHECK(k.assoc_violation(t.cells.data(), t.stride, n, &ki, &kj, &kl) == ra);
        if (ra) {
          CHECK(ki == i);
          CHECK(kj == j);
          CHECK(kl == l);
        }
      }
    }
  }
}

TEST_CASE("backends agree on real semigroups and their endomorphisms") {
  const auto& ref = kernels_for(Backend::scalar);
  for (const auto& doc : fixtures::small_corpus()) {
    const auto g = fixtures::from_doc(doc);
    const auto t = g.table();
    for (const Backend b : supported_backends()) {
      const auto& k = kernels_for(b);
      std::size_t i = 0, j = 0, l = 0;
      CHECK_FALSE(k.assoc_violation(t.cells.data(), t.stride, t.n, &i, &j, &l));
      for (const auto& f : enumerate_endomorphism_list(g, false)) {
        std::size_t x = 0, y = 0;
        CHECK_FALSE(k.hom_violation(t.cells.data(), t.stride, f.images().data(), t.n, &x, &y));
        CHECK_FALSE(ref.hom_violation(t.cells.data(), t.stride, f.images().data(), t.n, &x, &y));
      }
    }
  }
}

TEST_CASE("dispatch falls back to scalar above sixteen elements") {
  std::mt19937 rng(7);
  const auto before = active_backend();
  for (const Backend b : supported_backends()) {
    set_backend(b);
    const auto t = random_table(rng, 20, 20);
    const auto f = random_map(rng, 20);
    const auto g = random_map(rng, 20);
    std::vector<std::uint8_t> out(20);
    compose(f, g, out);
    for (std::size_t x = 0; x < 20; ++x) {
      CHECK(out[x] == f[g[x]]);
    }
    pointwise(t.ref(), f, g, out);
    for (std::size_t x = 0; x < 20; ++x) {
      CHECK(out[x] == t.cells[f[x] * 20 + g[x]]);
    }
  }
  set_backend(before);
}

TEST_CASE("span wrappers report lexicographically first witnesses") {
  // x + y = x on {0, 1}: the left-zero band. Associative; every self-map
  // is a homomorphism.
  std::vector<std::uint8_t> cells(2 * 16 + 16, 0);
  cells[16] = 1;
  cells[17] = 1;
  const TableRef band{cells, 2, 16};
  CHECK_FALSE(assoc_violation(band).has_value());
  CHECK_FALSE(hom_violation(band, std::vector<std::uint8_t>{1, 0}).has_value());

  // 0+0 = 1, everything else 0: (0+0)+1 = 0 but 0+(0+1) = 1.
  std::vector<std::uint8_t> bad(2 * 16 + 16, 0);
  bad[0] = 1;
  const auto v = assoc_violation(TableRef{bad, 2, 16});
  REQUIRE(v.has_value());
  CHECK(*v == std::array<std::size_t, 3>{0, 0, 1});

  // Identity on chain 2 (max) is a homomorphism; the swap is not, first at (0, 1).
  std::vector<std::uint8_t> chain(2 * 16 + 16, 0);
  chain[1] = 1;
  chain[16] = 1;
  chain[17] = 1;
  const TableRef c{chain, 2, 16};
  CHECK_FALSE(hom_violation(c, std::vector<std::uint8_t>{0, 1}).has_value());
  const auto h = hom_violation(c, std::vector<std::uint8_t>{1, 0});
  REQUIRE(h.has_value());
  CHECK(*h == std::pair<std::size_t, std::size_t>{0, 1});
}
