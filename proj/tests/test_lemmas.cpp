#include "doctest.h"

#include "sweeps.hpp"

#include "equicolor/coloring.hpp"
#include "equicolor/error.hpp"
#include "equicolor/lemmas.hpp"
#include "equicolor/oracle.hpp"

#include <functional>

using namespace equicolor;
using namespace equicolor::sweeps;

namespace {

// Equal prior sizes, so rank r is color r.
void pad_even(Host& h, int size = 3) { REQUIRE(pad(h, std::vector<int>(static_cast<std::size_t>(h.f.m()), size))); }

std::vector<Color> colors_on(const Coloring& f, std::span<const VertexId> vs) {
  std::vector<Color> out;
  for (VertexId v : vs) out.push_back(f[v]);
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

void check_sweep(const Tally& t, long min_runs) {
  INFO(t.first_failure);
  CHECK(t.failures == 0);
  CHECK(t.runs >= min_runs);
}

}  // namespace

TEST_CASE("long thread examples") {
  {
    Host h = path_host(4, 5);
    h.f.assign(0, 1);
    h.f.assign(4, 3);
    pad_even(h);
    extend_long_thread(h.g, h.f, h.path);
    CHECK(colors_on(h.f, std::span(h.path).subspan(1, 3)) == std::vector<Color>{2, 3, 1});
    CHECK(verify_equitable(h.g, h.f).valid);
  }
  {
    Host h = path_host(4, 6);
    h.f.assign(0, 2);
    h.f.assign(5, 3);
    pad_even(h);
    extend_long_thread(h.g, h.f, h.path);
    CHECK(colors_on(h.f, std::span(h.path).subspan(1, 4)) == std::vector<Color>{1, 2, 3, 4});
  }
  {
    Host h = path_host(3, 8);
    h.f.assign(0, 1);
    h.f.assign(7, 1);
    REQUIRE(pad(h, {3, 3, 3}));
    extend_long_thread(h.g, h.f, h.path);
    CHECK(colors_on(h.f, std::span(h.path).subspan(1, 6)) == std::vector<Color>{2, 1, 3, 1, 2, 3});
  }
  {
    Host h = path_host(3, 6);
    h.f.assign(0, 1);
    h.f.assign(5, 2);
    CHECK(code_of([&] { extend_long_thread(h.g, h.f, h.path); }) == ErrorCode::PreconditionViolated);
  }
}

TEST_CASE("long thread sweep") {
  const Tally t = sweeps::long_thread();
  check_sweep(t, 10000);
}

TEST_CASE("thread-cycle with a colored anchor") {
  const Tally t = sweeps::cycle_anchor();
  check_sweep(t, 1000);
}

TEST_CASE("thread-cycle reached through a thread") {
  const Tally t = sweeps::cycle_via_thread();
  check_sweep(t, 1000);
}

TEST_CASE("4/5-thread examples") {
  {
    Host h = path_host(4, 6);
    h.f.assign(0, 1);
    h.f.assign(5, 2);
    pad_even(h);
    extend_45_thread(h.g, h.f, h.path, 1, 1, 2);
    CHECK(colors_on(h.f, std::span(h.path).subspan(1, 4)) == std::vector<Color>{3, 1, 2, 4});
    CHECK(verify_equitable(h.g, h.f).valid);
  }
  {
    Host h = path_host(4, 7);
    h.f.assign(0, 1);
    h.f.assign(6, 1);
    pad_even(h);
    CHECK(code_of([&] { extend_45_thread(h.g, h.f, h.path, 2, 0, 0); }) == ErrorCode::ExceptionCase);
  }
  {
    Host h = path_host(4, 7);
    h.f.assign(0, 1);
    h.f.assign(6, 1);
    pad_even(h);
    extend_45_thread(h.g, h.f, h.path, 1, 2, 3);
    CHECK(colors_on(h.f, std::span(h.path).subspan(1, 5)) == std::vector<Color>{4, 1, 2, 1, 3});
    CHECK(verify_equitable(h.g, h.f).valid);
  }
}

TEST_CASE("4/5-thread sweep") {
  const Tally t = sweeps::thread_45();
  check_sweep(t, 10000);
  CHECK(t.exceptions > 0);
}

TEST_CASE("2-thread") {
  auto run = [](int m, Color fx, Color fy, const std::vector<int>* sizes) {
    Host h = path_host(m, 4);
    h.f.assign(0, fx);
    h.f.assign(3, fy);
    if (sizes) {
      if (!pad(h, *sizes)) return std::optional<Host>();
    } else {
      pad_even(h);
    }
    const Coloring before = h.f;
    extend_2_thread(h.g, h.f, 0, 1, 2, 3);
    CHECK(sound(h, before, h.f));
    return std::optional<Host>(h);
  };
  CHECK(colors_on(run(4, 1, 2, nullptr)->f, std::vector<VertexId>{1, 2}) == std::vector<Color>{2, 1});
  CHECK(colors_on(run(4, 3, 4, nullptr)->f, std::vector<VertexId>{1, 2}) == std::vector<Color>{1, 2});
  CHECK(colors_on(run(4, 2, 1, nullptr)->f, std::vector<VertexId>{1, 2}) == std::vector<Color>{1, 2});
  {
    Host h = path_host(4, 4);
    h.f.assign(0, 2);
    h.f.assign(3, 2);
    CHECK(code_of([&] { extend_2_thread(h.g, h.f, 0, 1, 2, 3); }) == ErrorCode::PreconditionViolated);
  }
  check_sweep(sweeps::two_thread(), 100);
}

TEST_CASE("2-thread plus 1-thread") {
  // x=0, y1=1, y2=2, y=3, y3=4, z=5
  auto host = [](int m, Color fx, Color fy, Color fz) {
    Host h{Graph(6), Coloring(m, 6), {}};
    h.g.add_edge(0, 1);
    h.g.add_edge(1, 2);
    h.g.add_edge(2, 3);
    h.g.add_edge(0, 4);
    h.g.add_edge(4, 5);
    h.f.assign(0, fx);
    h.f.assign(3, fy);
    h.f.assign(5, fz);
    return h;
  };
  auto trio = [](const Coloring& f) { return std::vector<Color>{f[2], f[4], f[1]}; };
  {
    Host h = host(4, 1, 2, 3);
    pad_even(h);
    extend_2_1_thread(h.g, h.f, 0, 1, 2, 3, 4, 5);
    CHECK(trio(h.f) == std::vector<Color>{1, 2, 3});
  }
  {
    Host h = host(4, 4, 1, 2);
    pad_even(h);
    extend_2_1_thread(h.g, h.f, 0, 1, 2, 3, 4, 5);
    CHECK(trio(h.f) == std::vector<Color>{2, 1, 3});
  }
  {
    Host h = host(4, 3, 3, 1);
    pad_even(h);
    CHECK(code_of([&] { extend_2_1_thread(h.g, h.f, 0, 1, 2, 3, 4, 5); }) == ErrorCode::PreconditionViolated);
  }
  check_sweep(sweeps::two_one_thread(), 1000);
}

TEST_CASE("reduce_star on the order-9 star matches the oracle") {
  const Graph star = build_star({0, 2, 1}, Graph(1), 0);
  REQUIRE(star.vertex_count() == 9);
  int count = 0;
  for_each_lists(star, 0, false, [&](const ListAssignment& L) {
    StarInstance inst = make_star_instance(star, 0, L, 3);
    CHECK(inst.s() == 9);
    CHECK(inst.eps() == 0);
    const Coloring f = reduce_star(inst);
    const auto rep = verify_descending_L(star, L, f);
    CHECK(rep.valid);
    CHECK(rep.class_sizes == std::vector<int>{3, 3, 3});
    CHECK(brute_descending_L(star, L).has_value());
    ++count;
  });
  CHECK(count == 4 * 27);
}

TEST_CASE("reduce_star rejects the bad profile, and some lists really fail") {
  const Graph star = build_star({2, 0, 1}, Graph(1), 0);
  CHECK(star.vertex_count() == 7);
  bool some_infeasible = false;
  for_each_lists(star, 0, false, [&](const ListAssignment& L) {
    StarInstance inst = make_star_instance(star, 0, L, 3);
    CHECK(inst.eps() == 2);
    CHECK(code_of([&] { reduce_star(inst); }) == ErrorCode::PreconditionViolated);
    if (!brute_descending_L(star, L)) some_infeasible = true;
  });
  CHECK(some_infeasible);

  const Graph wide = build_star({0, 5, 0}, Graph(1), 0);
  ListAssignment L;
  L.m = 3;
  for (VertexId v : wide.vertices()) L.lists[v] = wide.degree(v) == 1 ? std::vector<Color>{1, 2} : std::vector<Color>{1, 2, 3};
  CHECK(code_of([&] { reduce_star(make_star_instance(wide, 0, L, 5)); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("reduce_star sweep over admissible stars") {
  const Tally t = sweeps::star();
  check_sweep(t, 1000);
}

TEST_CASE("reduce_pair example and failures") {
  const Graph g = build_pair({1, 0, 1}, {1, 1, 0});
  ListAssignment L;
  L.m = 3;
  for (VertexId v : g.vertices()) L.lists[v] = g.degree(v) == 1 ? std::vector<Color>{2, 3} : std::vector<Color>{1, 2, 3};
  PairInstance inst = make_pair_instance(g, 0, 2, L, 3, 3);
  CHECK(inst.s() == 11);
  CHECK(inst.eps() == 1);
  CHECK(inst.b(4) == 1);
  CHECK(inst.b(2) == 1);
  CHECK(inst.b(1) == 3);
  CHECK(verify_descending_L(g, L, reduce_pair(inst)).valid);

  const Graph no4 = build_pair({1, 1, 0}, {1, 1, 0});
  ListAssignment L2;
  L2.m = 3;
  for (VertexId v : no4.vertices()) L2.lists[v] = no4.degree(v) == 1 ? std::vector<Color>{1, 2} : std::vector<Color>{1, 2, 3};
  CHECK(code_of([&] { reduce_pair(make_pair_instance(no4, 0, 2, L2, 3, 3)); }) == ErrorCode::PreconditionViolated);

  // A degree-2 root cannot take the root color class.
  const Graph thin = build_pair({0, 0, 1}, {0, 0, 0});
  ListAssignment L3;
  L3.m = 3;
  for (VertexId v : thin.vertices()) L3.lists[v] = {1, 2, 3};
  L3.lists[2] = {2, 3};
  L3.lists[6] = {1, 2};
  CHECK(code_of([&] { reduce_pair(make_pair_instance(thin, 0, 2, L3, 3, 2)); }) == ErrorCode::PreconditionViolated);
  CHECK(brute_descending_L(thin, L3).has_value());

  Graph apart(2);
  CHECK(code_of([&] { make_pair_instance(apart, 0, 1, L2, 1, 1); }) == ErrorCode::NotOneThreadPair);
}

TEST_CASE("reduce_pair sweep matches the oracle") {
  const Tally t = sweeps::pair();
  check_sweep(t, 1000);
  CHECK(t.oracle_checks > 10);
}

TEST_CASE("double-bad pattern") {
  BadPairHost b = bad_pair_host(false);
  const auto& lb = b.lb;
  ListAssignment L = full_lists(b.h);
  L.lists[lb.w1] = {1, 3};
  L.lists[lb.w4] = {1, 2};
  L.lists[lb.xs[3]] = {2, 3};
  L.lists[lb.zs[3]] = {2, 3};
  Coloring f = color_bad_pair_m3(b.h, lb, L);
  CHECK(colors_on(f, std::vector<VertexId>{lb.w1, lb.w4, lb.xs[0], lb.xs[2], lb.zs[2]}) == std::vector<Color>(5, 1));
  CHECK(colors_on(f, std::vector<VertexId>{lb.w2, lb.w3, lb.xs[3], lb.zs[0], lb.zs[3]}) == std::vector<Color>(5, 2));
  CHECK(colors_on(f, std::vector<VertexId>{lb.x, lb.y, lb.z, lb.xs[1], lb.zs[1]}) == std::vector<Color>(5, 3));

  L.lists[lb.w1] = {2, 3};
  f = color_bad_pair_m3(b.h, lb, L);
  CHECK(f[lb.w1] == 2);
  CHECK(f[lb.w2] == 1);
  CHECK(verify_descending_L(b.h, L, f).class_sizes == std::vector<int>{5, 5, 5});

  L.lists[lb.w4] = {2, 3};
  L.lists[lb.xs[3]] = {1, 3};
  L.lists[lb.zs[3]] = {1, 3};
  f = color_bad_pair_m3(b.h, lb, L);
  CHECK(f[lb.w4] == 2);
  CHECK(f[lb.xs[3]] == 1);
  CHECK(f[lb.zs[3]] == 1);
  CHECK(verify_descending_L(b.h, L, f).valid);

  Graph wrong = b.h;
  wrong.remove_edge(lb.x, lb.xs[0]);
  CHECK(code_of([&] { color_bad_pair_m3(wrong, lb, L); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("double-bad sweep over leaf lists") {
  const Tally t = sweeps::double_bad();
  check_sweep(t, 100);
}
