#include <catch2/catch_amalgamated.hpp>

#include <cstring>
#include <limits>
#include <sstream>

#include "driftcast/grid.hpp"
#include "driftcast/rng.hpp"
#include "driftcast/state.hpp"
#include "helpers.hpp"

using namespace driftcast;

TEST_CASE("wrap_index reduces modulo the periodic extents") {
    ModelGrid g(500, 300, 2220.0, 2220.0);
    CHECK(wrap_index(500, 0, g) == std::pair{0, 0});
    CHECK(wrap_index(-1, -1, g) == std::pair{499, 299});
    CHECK(wrap_index(3, 4, g) == std::pair{3, 4});
}

TEST_CASE("wrap_index is idempotent after one application") {
    ModelGrid g(17, 11, 100.0, 50.0);
    for (int j = -40; j <= 40; j += 7) {
        for (int k = -40; k <= 40; k += 5) {
            auto once = wrap_index(j, k, g);
            CHECK(wrap_index(once.first, once.second, g) == once);
        }
    }
}

TEST_CASE("locate_cell maps positions to containing cells") {
    ModelGrid g(500, 300, 2220.0, 2220.0);
    CHECK(locate_cell(0.5 * g.dx, 0.5 * g.dy, g) == std::pair{0, 0});
    CHECK(locate_cell((g.nx + 0.5) * g.dx, 0.5 * g.dy, g).first == 0);
    CHECK(locate_cell(3331.0, 10.0, g).first == 1); // floor(3331/2220) = 1
    CHECK_THROWS(locate_cell(std::numeric_limits<double>::quiet_NaN(), 0.0, g));
    CHECK_THROWS(locate_cell(0.0, std::numeric_limits<double>::infinity(), g));
}

TEST_CASE("locate_cell of a cell center is the identity") {
    ModelGrid g(24, 16, 311.5, 97.25);
    for (int j = 0; j < g.nx; ++j)
        for (int k = 0; k < g.ny; ++k) {
            auto [x, y] = g.cell_center(j, k);
            CHECK(locate_cell(x, y, g) == std::pair{j, k});
        }
}

TEST_CASE("coarse grid invariants") {
    ModelGrid g(20, 15, 100.0, 100.0);
    CHECK_THROWS(CoarseGrid(g, 4));  // even
    CHECK_THROWS(CoarseGrid(g, 7));  // does not divide
    CHECK_THROWS(CoarseGrid(g, 5, 5, 0)); // offset out of range
    CoarseGrid c(g, 5, 2, 3);
    CHECK(c.nxc == 4);
    CHECK(c.nyc == 3);
    CHECK(c.dxc == 500.0);
}

TEST_CASE("align_coarse_offset co-locates a coarse point with the observation cell") {
    ModelGrid g(20, 20, 100.0, 100.0);
    CoarseGrid c(g, 5);
    CHECK(align_coarse_offset({2, 2}, c, g).offset_j == 2);
    CHECK(align_coarse_offset({2, 2}, c, g).offset_k == 2);
    CHECK(align_coarse_offset({0, 0}, c, g).offset_j == 0);
    auto a = align_coarse_offset({7, 3}, c, g);
    CHECK(a.offset_j == 2);
    CHECK(a.offset_k == 3);
}

TEST_CASE("every coarse point sits exactly on a fine cell center, any offset") {
    ModelGrid g(20, 15, 123.0, 77.0);
    for (int oj = 0; oj < 5; ++oj) {
        for (int ok = 0; ok < 5; ++ok) {
            CoarseGrid c(g, 5, oj, ok);
            for (int a = 0; a < c.nxc; ++a)
                for (int b = 0; b < c.nyc; ++b) {
                    auto [j, k] = c.fine_cell(a, b, g);
                    auto [x, y] = g.cell_center(j, k);
                    auto cell = locate_cell(x, y, g);
                    auto [cx, cy] = g.cell_center(cell.first, cell.second);
                    CHECK(cx == x);
                    CHECK(cy == y);
                    CHECK(c.coarse_point_of(j, k) == std::pair{a, b});
                }
        }
    }
}

TEST_CASE("snapshot round trip is bitwise exact") {
    ModelGrid g(12, 9, 2220.0, 2220.0);
    OceanState s(g, 1234.5);
    NoiseStream ns(42);
    for (int k = 0; k < g.ny; ++k)
        for (int j = 0; j < g.nx; ++j) {
            s.eta(j, k) = (float)ns.normal();
            s.hu(j, k) = (float)(100.0 * ns.normal());
            s.hv(j, k) = (float)(100.0 * ns.normal());
        }
    std::stringstream buf;
    save_snapshot(buf, s);
    OceanState r = load_snapshot(buf);
    CHECK(r.t == s.t);
    CHECK(r.nx() == s.nx());
    CHECK(testutil::states_bitwise_equal(r, s));
}

TEST_CASE("snapshot byte layout is pinned") {
    ModelGrid g(8, 8, 1.0, 1.0);
    OceanState s(g, 7.0);
    s.eta(0, 0) = 1.5f;
    s.eta(1, 0) = -2.0f; // j fastest: second array slot
    std::stringstream buf;
    save_snapshot(buf, s);
    std::string bytes = buf.str();
    REQUIRE(bytes.size() == 4 + 4 + 4 + 4 + 8 + 3 * 64 * 4);
    CHECK(bytes.compare(0, 4, "DCST") == 0);
    std::uint32_t version, nx, ny;
    std::memcpy(&version, bytes.data() + 4, 4);
    std::memcpy(&nx, bytes.data() + 8, 4);
    std::memcpy(&ny, bytes.data() + 12, 4);
    double t;
    std::memcpy(&t, bytes.data() + 16, 8);
    CHECK(version == 1);
    CHECK(nx == 8);
    CHECK(ny == 8);
    CHECK(t == 7.0);
    float e0, e1;
    std::memcpy(&e0, bytes.data() + 24, 4);
    std::memcpy(&e1, bytes.data() + 28, 4);
    CHECK(e0 == 1.5f);
    CHECK(e1 == -2.0f);
}

TEST_CASE("snapshot rejects bad input") {
    std::stringstream buf("XXXXgarbage");
    CHECK_THROWS(load_snapshot(buf));
    std::stringstream trunc;
    trunc.write("DCST", 4);
    CHECK_THROWS(load_snapshot(trunc));
}

TEST_CASE("noise streams are deterministic and serializable") {
    NoiseStream a(99, StreamTag::model_error, 3);
    NoiseStream b(99, StreamTag::model_error, 3);
    for (int i = 0; i < 100; ++i) CHECK(a.normal() == b.normal());

    std::stringstream ss;
    ss << a;
    NoiseStream c;
    ss >> c;
    CHECK(c == a);
    for (int i = 0; i < 100; ++i) CHECK(a.normal() == c.normal());

    NoiseStream d(99, StreamTag::filter, 3);
    NoiseStream e(99, StreamTag::model_error, 4);
    CHECK(a.normal() != d.normal());
    CHECK(b.normal() != e.normal());
}

TEST_CASE("normal draws have the right first moments") {
    NoiseStream ns(7);
    const int n = 200000;
    double s1 = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = ns.normal();
        s1 += x;
        s2 += x * x;
    }
    double mean = s1 / n;
    double var = s2 / n - mean * mean;
    CHECK(std::abs(mean) < 4.0 / std::sqrt((double)n));
    CHECK(var > 0.98);
    CHECK(var < 1.02);
}

TEST_CASE("uniform_below covers its range without bias") {
    NoiseStream ns(11);
    int counts[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 50000; ++i) counts[ns.uniform_below(5)]++;
    for (int c : counts) {
        CHECK(c > 9000);
        CHECK(c < 11000);
    }
    CHECK_THROWS(ns.uniform_below(0));
}
