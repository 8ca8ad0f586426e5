/* Copyright 2026 The mespin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <cmath>

#include <doctest.h>

#include "mespin/device.hpp"

using namespace mespin;

namespace {

SimConfig fast_sim(std::uint64_t seed) {
    SimConfig cfg;
    cfg.dt = 1e-13;
    cfg.seed = seed;
    return cfg;
}

} // namespace

TEST_CASE("ME capacitor") {
    CapacitorGeometry cap;
    // eps0 * 500 * pi (25 nm)^2 / 5 nm.
    CHECK(cap.capacitance() == doctest::Approx(1.74e-15).epsilon(2e-3));

    cap.t_me = 0.0;
    CHECK_THROWS_AS(cap.validate(), std::invalid_argument);
}

TEST_CASE("write pulse energy accounting") {
    MEMTJDevice dev = MEMTJDevice::with_defaults();
    dev.magnet.temperature = 0.0;

    SUBCASE("calibrated write energy lands on the reference value") {
        const WriteResult wr = write_pulse(dev, 0.2, 3e-9, fast_sim(1));
        CHECK(wr.write_energy == doctest::Approx(0.072e-15).epsilon(0.05));
        CHECK(wr.write_energy == doctest::Approx(0.0695e-15).epsilon(5e-3));
    }

    SUBCASE("zero volts costs nothing and holds the state at T = 0") {
        const Vec3 before = dev.state.m;
        const WriteResult wr = write_pulse(dev, 0.0, 1e-9, fast_sim(1));
        CHECK(wr.write_energy == 0.0);
        CHECK(dev.state.m.z == doctest::Approx(before.z).epsilon(1e-9));
        CHECK(wr.stored == MagneticConfig::Parallel);
    }

    SUBCASE("energy is polarity independent") {
        MEMTJDevice dev2 = MEMTJDevice::with_defaults();
        dev2.magnet.temperature = 0.0;
        const WriteResult plus = write_pulse(dev, 0.3, 2e-9, fast_sim(1));
        const WriteResult minus = write_pulse(dev2, -0.3, 2e-9, fast_sim(1));
        CHECK(plus.write_energy == doctest::Approx(minus.write_energy));
    }

    SUBCASE("doubling the oxide thickness halves the capacitive energy") {
        MEMTJDevice dev2 = MEMTJDevice::with_defaults();
        dev2.cap.t_me *= 2.0;
        const double e1 = write_pulse(dev, 0.2, 1e-9, fast_sim(1)).write_energy;
        const double e2 = write_pulse(dev2, 0.2, 1e-9, fast_sim(1)).write_energy;
        CHECK(e2 == doctest::Approx(0.5 * e1));
    }
}

TEST_CASE("write polarity convention: +V stores AP, -V stores P") {
    MEMTJDevice dev = MEMTJDevice::with_defaults();
    dev.magnet.temperature = 0.0;
    // Tilt slightly off the pole: at T = 0 an exactly antiparallel field
    // exerts no torque.
    dev.state.m = Vec3{0.05, 0.0, 1.0}.normalized();

    const WriteResult to_ap = write_pulse(dev, 0.3, 3e-9, fast_sim(2));
    CHECK(to_ap.stored == MagneticConfig::AntiParallel);
    CHECK(dev.state.m.z < -0.9);

    const WriteResult to_p = write_pulse(dev, -0.3, 3e-9, fast_sim(3));
    CHECK(to_p.stored == MagneticConfig::Parallel);
    CHECK(dev.state.m.z > 0.9);
}

TEST_CASE("write followed by read returns the written bit at 300 K") {
    int correct = 0;
    const int n = 100;
    for (int k = 0; k < n; ++k) {
        MEMTJDevice dev = MEMTJDevice::with_defaults();
        const double v = (k % 2 == 0) ? 0.2 : -0.2;
        const WriteResult wr = write_pulse(dev, v, 4e-9, fast_sim(1000 + static_cast<unsigned>(k)));
        if (!wr.settled) continue;
        const ReadResult rd = read(dev, 0.2, 0.5e-9, 500.0);
        const MagneticConfig expected =
            v > 0 ? MagneticConfig::AntiParallel : MagneticConfig::Parallel;
        if (rd.bit == expected) ++correct;
    }
    CHECK(static_cast<double>(correct) / n > 0.99);
}

TEST_CASE("resistive read") {
    MEMTJDevice dev = MEMTJDevice::with_defaults();
    dev.magnet.temperature = 0.0;

    SUBCASE("read energy matches V^2 t / R at the calibrated path") {
        // P state, 15.4 kOhm total path.
        const ReadResult rd = read(dev, 0.2, 0.5e-9, 500.0);
        CHECK(rd.read_energy == doctest::Approx(1.3e-15).epsilon(0.05));
        CHECK(rd.bit == MagneticConfig::Parallel);
    }

    SUBCASE("zero read voltage costs nothing") {
        const ReadResult rd = read(dev, 0.0, 0.5e-9, 500.0);
        CHECK(rd.read_energy == 0.0);
    }

    SUBCASE("AP read costs less than P read") {
        const ReadResult p_read = read(dev, 0.2, 0.5e-9, 500.0);
        dev.state.m = Vec3{0.05, 0.0, 1.0}.normalized();
        write_pulse(dev, 0.3, 3e-9, fast_sim(4));
        REQUIRE(dev.stored == MagneticConfig::AntiParallel);
        const ReadResult ap_read = read(dev, 0.2, 0.5e-9, 500.0);
        CHECK(ap_read.read_energy < p_read.read_energy);
        CHECK(ap_read.bit == MagneticConfig::AntiParallel);
    }

    SUBCASE("reading a mid-flight magnet is a sequencing fault") {
        dev.settled = false;
        CHECK_THROWS_AS(read(dev, 0.2, 0.5e-9, 500.0), SequencingFault);
    }
}

TEST_CASE("XNOR device truth table, behavioral mode") {
    const double v = 0.2;
    struct Case {
        double v1, v2;
        MagneticConfig expected;
    };
    const Case cases[] = {
        {+v, +v, MagneticConfig::Parallel},
        {-v, -v, MagneticConfig::Parallel},
        {+v, -v, MagneticConfig::AntiParallel},
        {-v, +v, MagneticConfig::AntiParallel},
    };
    for (const auto& c : cases) {
        MEXNORDevice dev = MEXNORDevice::with_defaults();
        const XnorWriteResult wr = xnor_write(dev, c.v1, c.v2, 3e-9, fast_sim(5));
        CHECK(wr.config == c.expected);
        const XnorReadResult rd = xnor_read(dev, 1.0);
        CHECK(rd.match == (c.expected == MagneticConfig::Parallel));
        CHECK(rd.resistance ==
              doctest::Approx(c.expected == MagneticConfig::Parallel ? dev.r_p : dev.r_ap));
    }
}

TEST_CASE("XNOR device with zero voltage holds the undriven magnet") {
    MEXNORDevice dev = MEXNORDevice::with_defaults();
    xnor_write(dev, 0.2, 0.2, 3e-9, fast_sim(6)); // both to -z, P
    REQUIRE(dev.config() == MagneticConfig::Parallel);
    const double top_before = dev.top.m.z;

    xnor_write(dev, 0.0, -0.2, 3e-9, fast_sim(7));
    CHECK(dev.top.m.z == doctest::Approx(top_before)); // held
    CHECK(dev.bottom.m.z > 0.0);                       // flipped to +z
    CHECK(dev.config() == MagneticConfig::AntiParallel);
}

TEST_CASE("XNOR write energy charges both ME capacitors") {
    MEXNORDevice dev = MEXNORDevice::with_defaults();
    const double c = dev.top_cap.capacitance();
    const XnorWriteResult wr = xnor_write(dev, 0.2, -0.2, 2e-9, fast_sim(8));
    CHECK(wr.write_energy == doctest::Approx(2.0 * c * 0.04));
}

TEST_CASE("XNOR truth table holds under full stochastic dynamics") {
    const double v = 0.2;
    const std::pair<double, double> pairs[] = {{+v, +v}, {-v, -v}, {+v, -v}, {-v, +v}};
    for (const auto& [v1, v2] : pairs) {
        int good = 0;
        const int n = 25;
        for (int k = 0; k < n; ++k) {
            MEXNORDevice dev = MEXNORDevice::with_defaults();
            const XnorWriteResult wr =
                xnor_write(dev, v1, v2, 4e-9, fast_sim(9000 + static_cast<unsigned>(k)),
                           /*stochastic=*/true);
            const bool same_sign = (v1 > 0) == (v2 > 0);
            if (wr.config ==
                (same_sign ? MagneticConfig::Parallel : MagneticConfig::AntiParallel))
                ++good;
        }
        CHECK(good == n);
    }
}

TEST_CASE("unsettled XNOR read is a sequencing fault") {
    MEXNORDevice dev = MEXNORDevice::with_defaults();
    dev.top.m = {1.0, 0.0, 0.0}; // parked on the equator
    dev.top_settled = false;
    CHECK_THROWS_AS(xnor_read(dev, 1.0), SequencingFault);
}

TEST_CASE("energy report breakdown sums to its totals") {
    EnergyReport rep;
    rep.write_energy_per_bit = 0.07e-15;
    rep.read_energy_per_bit = 1.3e-15;
    rep.breakdown = {{"me_capacitor_cv2", 0.07e-15}, {"read_path_i2r", 1.3e-15}};
    const double total = rep.write_energy_per_bit + rep.read_energy_per_bit;
    CHECK(rep.breakdown_total() == doctest::Approx(total).epsilon(1e-12));
}
