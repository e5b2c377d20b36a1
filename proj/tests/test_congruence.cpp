#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "helpers.hpp"
#include "wdl/algebra.hpp"
#include "wdl/congruence.hpp"
#include "wdl/errors.hpp"

using namespace wdl;
using namespace wdltest;

namespace {

DicompAlgebra lattice_only(const Lattice& L) {
  std::vector<int> id(L.n);
  for (int i = 0; i < L.n; ++i) id[i] = i;
  return make_algebra(L, id, std::nullopt);  // identity adds no constraint
}

Congruence part(std::vector<int> raw) { return normalize_partition(raw); }

// p refines q: every p-block sits inside one q-block.
bool refines(const Congruence& p, const Congruence& q) {
  for (std::size_t x = 0; x < p.block_of.size(); ++x)
    for (std::size_t y = 0; y < p.block_of.size(); ++y)
      if (p.block_of[x] == p.block_of[y] && q.block_of[x] != q.block_of[y])
        return false;
  return true;
}

std::vector<std::vector<int>> encodings(const std::vector<Congruence>& cs) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cs) out.push_back(c.block_of);
  return out;
}

}  // namespace

TEST_CASE("trivial partitions and normalization") {
  Congruence d = delta(4);
  CHECK(d.block_of == std::vector<int>{0, 1, 2, 3});
  CHECK(d.block_count == 4);
  CHECK(is_delta(d));

  Congruence n = nabla(4);
  CHECK(n.block_of == std::vector<int>{0, 0, 0, 0});
  CHECK(n.block_count == 1);
  CHECK(!is_delta(n));
  CHECK(is_delta(nabla(1)));

  Congruence c = normalize_partition({5, 5, 2, 2, 7});
  CHECK(c.block_of == std::vector<int>{0, 0, 1, 1, 2});
  CHECK(c.block_count == 3);
  CHECK(blocks_of(c) ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4}});
}

TEST_CASE("lattice congruence recognition matches the naive definition") {
  struct Case {
    Lattice L;
    int expected;
  };
  // A four chain has an interval partition per subset of its three gaps; the
  // square has four congruences; the pentagon five; the diamond is simple.
  std::vector<Case> cases;
  cases.push_back({chain(4), 8});
  cases.push_back({b2(), 4});
  cases.push_back({n5(), 5});
  cases.push_back({m3(), 2});
  for (const auto& [L, expected] : cases) {
    DicompAlgebra A = lattice_only(L);
    int lib = 0, naive = 0;
    for (const auto& rgs : all_partitions(L.n)) {
      Congruence c = part(rgs);
      bool from_lib = is_lattice_congruence(L, c);
      bool from_def = naive_is_congruence(A, c.block_of);
      CHECK(from_lib == from_def);
      lib += from_lib;
      naive += from_def;
    }
    CHECK(lib == expected);
    CHECK(naive == expected);
  }
}

TEST_CASE("unary tables rule out some lattice congruences") {
  DicompAlgebra A = make_trivial_dicomp(chain(4));
  Congruence low = part({0, 0, 1, 2});  // collapse the bottom gap
  CHECK(is_lattice_congruence(A.lattice, low));
  CHECK(!is_algebra_congruence(A, low));  // dual sends 0,1 to 3,0

  Congruence mid = part({0, 1, 1, 2});  // collapse the middle gap
  CHECK(is_lattice_congruence(A.lattice, mid));
  CHECK(is_algebra_congruence(A, mid));

  for (const auto& rgs : all_partitions(4)) {
    Congruence c = part(rgs);
    CHECK(is_algebra_congruence(A, c) == naive_is_congruence(A, c.block_of));
  }
}

TEST_CASE("all congruences of small frozen fixtures") {
  DicompAlgebra three = make_trivial_dicomp(chain(3));
  CHECK(encodings(all_congruences(three)) ==
        std::vector<std::vector<int>>{{0, 0, 0}, {0, 1, 2}});

  DicompAlgebra four = make_trivial_dicomp(chain(4));
  CHECK(encodings(all_congruences(four)) ==
        std::vector<std::vector<int>>{
            {0, 0, 0, 0}, {0, 1, 1, 2}, {0, 1, 2, 3}});

  DicompAlgebra square = make_boolean_wdl(b2());
  CHECK(encodings(all_congruences(square)) ==
        std::vector<std::vector<int>>{
            {0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 2, 3}});

  DicompAlgebra square_trivial = make_trivial_dicomp(b2());
  CHECK(all_congruences(square_trivial).size() == 2);
}

TEST_CASE("both generation strategies agree on every fixture") {
  std::vector<DicompAlgebra> fixtures;
  for (int n = 2; n <= 6; ++n)
    fixtures.push_back(make_trivial_dicomp(chain(n)));
  fixtures.push_back(make_boolean_wdl(b2()));
  fixtures.push_back(make_trivial_dicomp(b2()));
  fixtures.push_back(make_trivial_dicomp(n5()));
  fixtures.push_back(make_trivial_dicomp(m3()));
  // Past the dispatch boundary both strategies stay available.
  fixtures.push_back(make_trivial_dicomp(chain(7)));
  fixtures.push_back(make_boolean_wdl(b3()));
  for (const DicompAlgebra& A : fixtures) {
    auto filt = encodings(all_congruences_by_filtering(A));
    auto clos = encodings(all_congruences_by_closure(A));
    CHECK(filt == clos);
    CHECK(encodings(all_congruences(A)) == filt);
    CHECK(std::is_sorted(filt.begin(), filt.end()));
  }
}

TEST_CASE("congruence counts on the larger fixtures") {
  // Chain intervals: compositions of the six inner gaps collapse one way
  // each, but the unary tables pin both ends, leaving 16 plus the full
  // collapse.
  DicompAlgebra seven = make_trivial_dicomp(chain(7));
  CHECK(all_congruences(seven).size() == 17);

  DicompAlgebra cube3 = make_boolean_wdl(b3());
  CHECK(all_congruences(cube3).size() == 8);
}

TEST_CASE("congruence enumeration respects the carrier bound") {
  CHECK_THROWS_AS(all_congruences(make_trivial_dicomp(chain(9))),
                  CarrierTooLarge);
  CHECK_THROWS_AS(all_congruences(make_trivial_dicomp(chain(4)), 3),
                  CarrierTooLarge);
  CHECK_THROWS_AS(is_subdirectly_irreducible(make_trivial_dicomp(chain(9))),
                  CarrierTooLarge);
}

TEST_CASE("projections onto the two intervals below c and its complement") {
  DicompAlgebra A = make_boolean_wdl(b2());
  auto [f1, f2] = projection_maps(A, 1);
  CHECK(f1.source_members == std::vector<int>{0, 1, 2, 3});
  CHECK(f1.map == std::vector<int>{0, 1, 0, 1});
  CHECK(f1.target.lo == 0);
  CHECK(f1.target.hi == 1);
  CHECK(f2.map == std::vector<int>{0, 0, 2, 2});
  CHECK(f2.target.members == std::vector<int>{0, 2});

  DicompAlgebra B = make_boolean_wdl(b3());
  auto [g1, g2] = projection_maps(B, 1);
  CHECK(g1.map == std::vector<int>{0, 1, 0, 1, 0, 1, 0, 1});
  CHECK(g2.target.members == std::vector<int>{0, 2, 4, 6});
  std::vector<int> image2(g2.map);
  std::sort(image2.begin(), image2.end());
  image2.erase(std::unique(image2.begin(), image2.end()), image2.end());
  CHECK(image2 == std::vector<int>{0, 2, 4, 6});
}

TEST_CASE("projection preconditions") {
  DicompAlgebra A = make_boolean_wdl(b2());
  CHECK_THROWS_AS(projection_maps(A, 0), BoundaryElement);
  CHECK_THROWS_AS(projection_maps(A, 3), BoundaryElement);
  CHECK_THROWS_AS(projection_maps(A, 9), OutOfRange);
  CHECK_THROWS_AS(projection_maps(make_trivial_dicomp(b2()), 1), NotWdn);
  DicompAlgebra weak_only = make_algebra(b2(), {3, 2, 1, 0}, std::nullopt);
  CHECK_THROWS_AS(projection_maps(weak_only, 1), NotWdn);
  CHECK_THROWS_AS(interval_isomorphism_pair(A, 0), BoundaryElement);
}

TEST_CASE("kernels of the two projections meet in the identity") {
  DicompAlgebra A = make_boolean_wdl(b2());
  auto [f1, f2] = projection_maps(A, 1);
  Congruence k1 = kernel(f1);
  Congruence k2 = kernel(f2);
  CHECK(k1.block_of == std::vector<int>{0, 1, 0, 1});
  CHECK(k2.block_of == std::vector<int>{0, 0, 1, 1});
  CHECK(is_delta(meet_congruences(k1, k2)));
  CHECK(is_algebra_congruence(A, k1));
  CHECK(is_algebra_congruence(A, k2));
}

TEST_CASE("kernel shapes for special maps") {
  Lattice L = b2();
  DicompAlgebra A = make_boolean_wdl(L);
  auto [u, v] = interval_isomorphism_pair(A, 1);
  // Injective map: kernel is the identity partition of a two element source.
  CHECK(kernel(u).block_of == std::vector<int>{0, 1});

  Homomorphism constant;
  constant.parent = &L;
  constant.source_members = {0, 1, 2, 3};
  constant.target = interval(L, 0, 0);
  constant.map = {0, 0, 0, 0};
  CHECK(kernel(constant).block_of == std::vector<int>{0, 0, 0, 0});

  Homomorphism bad;
  bad.parent = &L;
  bad.source_members = {0, 1, 2, 3};
  bad.target = interval(L, 0, 3);
  bad.map = {0, 1, 1, 0};  // partition {0,3},{1,2} is not join compatible
  CHECK_THROWS_AS(kernel(bad), std::logic_error);
}

TEST_CASE("the two interval maps are mutually inverse order isomorphisms") {
  DicompAlgebra A = make_boolean_wdl(b2());
  auto [u, v] = interval_isomorphism_pair(A, 1);
  CHECK(u.source_members == std::vector<int>{1, 3});
  CHECK(u.map == std::vector<int>{0, 2});
  CHECK(v.source_members == std::vector<int>{0, 2});
  CHECK(v.map == std::vector<int>{1, 3});

  DicompAlgebra B = make_boolean_wdl(b3());
  const Lattice& L = B.lattice;
  for (int c = 1; c <= 6; ++c) {
    auto [uc, vc] = interval_isomorphism_pair(B, c);
    // v after u is the identity on [c,1], u after v on [0,~c].
    for (std::size_t i = 0; i < uc.source_members.size(); ++i) {
      int img = uc.map[i];
      auto at = std::find(vc.source_members.begin(), vc.source_members.end(),
                          img);
      REQUIRE(at != vc.source_members.end());
      CHECK(vc.map[at - vc.source_members.begin()] == uc.source_members[i]);
    }
    // Order preserving in both directions.
    for (std::size_t i = 0; i < uc.source_members.size(); ++i)
      for (std::size_t j = 0; j < uc.source_members.size(); ++j)
        CHECK(L.leq(uc.source_members[i], uc.source_members[j]) ==
              L.leq(uc.map[i], uc.map[j]));
    // The generic isomorphism finder agrees that the intervals match.
    CHECK(find_isomorphism(interval(L, c, L.top),
                           interval(L, L.bottom, B.weak(c)))
              .has_value());
  }
}

TEST_CASE("meets of congruences") {
  Congruence p = part({0, 0, 1, 1, 2, 2});
  Congruence q = part({0, 0, 0, 1, 1, 1});
  CHECK(meet_congruences(p, q).block_of ==
        std::vector<int>{0, 0, 1, 2, 3, 3});
  CHECK(meet_congruences(p, nabla(6)).block_of == p.block_of);
  CHECK(is_delta(meet_congruences(p, delta(6))));
  CHECK_THROWS_AS(meet_congruences(delta(3), delta(4)), CarrierMismatch);

  // Same-block-in-both is the defining relation.
  Congruence m = meet_congruences(p, q);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      CHECK((m.block_of[x] == m.block_of[y]) ==
            (p.block_of[x] == p.block_of[y] &&
             q.block_of[x] == q.block_of[y]));
}

TEST_CASE("principal congruences are the least ones joining the generators") {
  DicompAlgebra square = make_boolean_wdl(b2());
  CHECK(principal_congruence(square, 0, 1).block_of ==
        std::vector<int>{0, 0, 1, 1});
  CHECK(is_delta(principal_congruence(square, 2, 2)));

  DicompAlgebra four = make_trivial_dicomp(chain(4));
  CHECK(principal_congruence(four, 1, 2).block_of ==
        std::vector<int>{0, 1, 1, 2});
  // Touching an end element forces the full collapse.
  CHECK(principal_congruence(four, 0, 1).block_count == 1);

  CHECK_THROWS_AS(principal_congruence(four, 0, 9), OutOfRange);

  // Minimality against the complete congruence lists.
  for (const DicompAlgebra& A :
       {square, four, make_trivial_dicomp(n5()), make_trivial_dicomp(m3())}) {
    auto all = all_congruences(A);
    for (int a = 0; a < A.lattice.n; ++a)
      for (int b = 0; b < A.lattice.n; ++b) {
        Congruence t = principal_congruence(A, a, b);
        CHECK(t.block_of[a] == t.block_of[b]);
        CHECK(is_algebra_congruence(A, t));
        for (const Congruence& c : all)
          if (c.block_of[a] == c.block_of[b]) CHECK(refines(t, c));
      }
  }
}

TEST_CASE("subdirect irreducibility of the frozen fixtures") {
  CHECK(!is_subdirectly_irreducible(
      make_algebra(chain(1), {0}, std::vector<int>{0})));
  CHECK(is_subdirectly_irreducible(make_boolean_wdl(chain(2))));
  CHECK(is_subdirectly_irreducible(make_trivial_dicomp(chain(3))));
  CHECK(is_subdirectly_irreducible(make_trivial_dicomp(chain(4))));
  CHECK(is_subdirectly_irreducible(make_trivial_dicomp(m3())));
  CHECK(!is_subdirectly_irreducible(make_boolean_wdl(b2())));
  CHECK(!is_subdirectly_irreducible(make_boolean_wdl(b3())));
}

TEST_CASE("subdirect irreducibility agrees with folding the congruence list") {
  std::vector<DicompAlgebra> fixtures;
  fixtures.push_back(make_boolean_wdl(chain(2)));
  fixtures.push_back(make_trivial_dicomp(chain(4)));
  fixtures.push_back(make_trivial_dicomp(chain(6)));
  fixtures.push_back(make_boolean_wdl(b2()));
  fixtures.push_back(make_trivial_dicomp(b2()));
  fixtures.push_back(make_trivial_dicomp(n5()));
  fixtures.push_back(make_trivial_dicomp(m3()));
  for (const DicompAlgebra& A : fixtures) {
    Congruence acc = nabla(A.lattice.n);
    bool any = false;
    for (const Congruence& c : all_congruences(A)) {
      if (is_delta(c)) continue;
      acc = meet_congruences(acc, c);
      any = true;
    }
    bool expected = any && !is_delta(acc);
    CHECK(is_subdirectly_irreducible(A) == expected);
  }
}
