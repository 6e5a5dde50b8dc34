#include "fogcell/sim.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace fogcell;

namespace {

FogCellConfig base_config() {
  FogCellConfig c;
  c.road_len_m = 1000.0;
  c.rsu_x_m = 500.0;
  c.rsu_radius_m = 100.0;
  c.arrival_model = ArrivalModel::kEquidistant;
  c.arrival_rho = 0.05;
  c.v_mps = 20.0;
  c.dt_s = 0.1;
  c.duration_s = 120.0;
  c.ctrl_period_s = 1.0;
  c.seed = 1;
  return c;
}

int count_events(const SimResult& r, const std::string& name) {
  int n = 0;
  for (const SimEvent& e : r.events) {
    if (e.event == name) {
      ++n;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("gateway selection") {
  FogCellConfig c = base_config();

  SUBCASE("empty coverage") {
    CHECK(select_gateway({}, c) == -1);
    CHECK(select_gateway({{0, 50.0, 20.0}}, c) == -1);  // far from the RSU
  }

  SUBCASE("rearmost in-coverage vehicle wins") {
    std::vector<VehicleState> v = {{0, 510.0, 20.0}, {1, 490.0, 20.0}};
    CHECK(select_gateway(v, c) == 1);
  }

  SUBCASE("ties break to the lowest id") {
    std::vector<VehicleState> v = {{7, 500.0, 20.0}, {3, 500.0, 20.0}};
    CHECK(select_gateway(v, c) == 3);
  }
}

TEST_CASE("stepping") {
  FogCellConfig c = base_config();
  c.arrival_rho = 0.0;  // isolate kinematics
  FogCellSim sim(c, LinkParams{}, CellCapacity{});

  SUBCASE("positions advance by v*dt") {
    FogCellConfig c2 = base_config();
    c2.v_mps = 20.0;
    c2.dt_s = 0.5;
    c2.arrival_rho = 0.05;
    FogCellSim s(c2, LinkParams{}, CellCapacity{});
    // run until a vehicle exists, then check the advance
    while (s.vehicles().empty()) {
      s.step();
    }
    const double x0 = s.vehicles().front().x_m;
    s.step();
    CHECK(s.vehicles().front().x_m == doctest::Approx(x0 + 10.0));
  }

  SUBCASE("vehicles past the road end are removed") {
    FogCellConfig c2 = base_config();
    c2.arrival_rho = 0.001;  // one arrival every 50 s
    c2.duration_s = 60.0;
    FogCellSim s(c2, LinkParams{}, CellCapacity{});
    for (int i = 0; i < 500; ++i) {
      s.step();
    }
    REQUIRE(s.vehicles().size() == 1);
    CHECK(s.vehicles().front().id == 0);
    // 1000 m at 20 m/s: gone 50 s after arrival (a later arrival may exist)
    for (int i = 0; i < 520; ++i) {
      s.step();
    }
    for (const VehicleState& v : s.vehicles()) {
      CHECK(v.id != 0);
    }
  }

  SUBCASE("equidistant arrivals: one per second at rho=0.05, v=20") {
    FogCellConfig c2 = base_config();
    c2.arrival_rho = 0.05;
    c2.v_mps = 20.0;
    FogCellSim s(c2, LinkParams{}, CellCapacity{});
    for (int i = 0; i < 100; ++i) {  // 10 s
      s.step();
    }
    int arrivals = 0;
    for (const SimEvent& e : s.events()) {
      if (e.event == "ARRIVE") {
        ++arrivals;
      }
    }
    CHECK(arrivals == 10);
  }
}

TEST_CASE("full runs") {
  SUBCASE("single traversal: one baseline handover, one election") {
    FogCellConfig c = base_config();
    c.road_len_m = 100.0;
    c.rsu_x_m = 50.0;
    c.rsu_radius_m = 30.0;
    c.v_mps = 10.0;
    c.arrival_rho = 0.005;  // next arrival would be at t = 20 s
    c.duration_s = 35.0;    // first vehicle fully traverses, second never arrives twice
    c.dt_s = 0.1;
    const SimResult r = run(c, LinkParams{}, CellCapacity{});
    CHECK(r.summary.baseline_handover_count == 1);
    CHECK(r.summary.gateway_handover_count == 1);
  }

  SUBCASE("zero arrivals") {
    FogCellConfig c = base_config();
    c.arrival_rho = 0.0;
    const SimResult r = run(c, LinkParams{}, CellCapacity{});
    CHECK(r.summary.baseline_handover_count == 0);
    CHECK(r.summary.gateway_handover_count == 0);
    CHECK(r.summary.disconnected_time_fraction == 1.0);
    CHECK(count_events(r, "ARRIVE") == 0);
  }

  SUBCASE("gateway handovers never exceed the baseline") {
    FogCellConfig c = base_config();
    c.duration_s = 2500.0;  // ~100 traversals at one arrival per second
    const SimResult r = run(c, LinkParams{}, CellCapacity{});
    CHECK(r.summary.baseline_handover_count >= 100);
    CHECK(r.summary.gateway_handover_count <=
          r.summary.baseline_handover_count);
  }

  SUBCASE("elections equal departures plus at most one live gateway") {
    FogCellConfig c = base_config();
    c.duration_s = 600.0;
    const SimResult r = run(c, LinkParams{}, CellCapacity{});
    const int elects = count_events(r, "GATEWAY_ELECT");
    const int departs = count_events(r, "GATEWAY_DEPART");
    CHECK(elects >= departs);
    CHECK(elects <= departs + 1);
  }

  SUBCASE("deterministic: same seed, same events") {
    FogCellConfig c = base_config();
    c.arrival_model = ArrivalModel::kPoisson;
    c.seed = 77;
    const SimResult a = run(c, LinkParams{}, CellCapacity{});
    const SimResult b = run(c, LinkParams{}, CellCapacity{});
    REQUIRE(a.events.size() == b.events.size());
    for (std::size_t i = 0; i < a.events.size(); ++i) {
      CHECK(a.events[i].t_s == b.events[i].t_s);
      CHECK(a.events[i].event == b.events[i].event);
      CHECK(a.events[i].vehicle_id == b.events[i].vehicle_id);
      CHECK(a.events[i].detail == b.events[i].detail);
    }
    c.seed = 78;
    const SimResult d = run(c, LinkParams{}, CellCapacity{});
    CHECK(a.events.size() != d.events.size());
  }

  SUBCASE("denser traffic disconnects less") {
    FogCellConfig lo = base_config();
    lo.arrival_rho = 0.021;
    lo.duration_s = 600.0;
    FogCellConfig hi = lo;
    hi.arrival_rho = 0.1;
    const SimResult a = run(lo, LinkParams{}, CellCapacity{});
    const SimResult b = run(hi, LinkParams{}, CellCapacity{});
    CHECK(b.summary.disconnected_time_fraction <
          a.summary.disconnected_time_fraction);
  }

  SUBCASE("no overtaking: position order is preserved") {
    FogCellConfig c = base_config();
    FogCellSim sim(c, LinkParams{}, CellCapacity{});
    for (int i = 0; i < 2000; ++i) {
      sim.step();
      const auto& v = sim.vehicles();
      for (std::size_t j = 1; j < v.size(); ++j) {
        CHECK(v[j - 1].id < v[j].id);
        CHECK(v[j - 1].x_m >= v[j].x_m);
      }
    }
  }

  SUBCASE("epoch throughput respects the adaptive ceiling") {
    FogCellConfig c = base_config();
    c.duration_s = 120.0;
    CellCapacity cap;
    const SimResult r = run(c, LinkParams{}, cap);
    CHECK(r.summary.epoch_throughputs_mbps.size() == 120);
    for (double tp : r.summary.epoch_throughputs_mbps) {
      CHECK(tp >= 0.0);
      CHECK(tp <= cap.c_total_mbps + 1e-9);
    }
  }

  SUBCASE("malformed config") {
    FogCellConfig c = base_config();
    c.dt_s = 0.0;
    CHECK_THROWS_AS(run(c, LinkParams{}, CellCapacity{}),
                    std::invalid_argument);
    c = base_config();
    c.ctrl_period_s = c.dt_s / 2.0;
    CHECK_THROWS_AS(run(c, LinkParams{}, CellCapacity{}),
                    std::invalid_argument);
  }
}
