# Copyright 2026 The mespin authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Smoke tests for the python bindings."""

import mespin


def test_fields():
    p = mespin.MagnetParams()
    hd = mespin.demag_field((0.0, 0.0, 1.0), p)
    assert abs(hd[2] + 1.2573e6) < 1.0

    ha = mespin.anisotropy_field((0.0, 0.0, 1.0), p)
    assert abs(ha[2] - 1.266e6) < 5e3

    s = mespin.MEStimulus()
    s.v_me = 0.2
    hme = mespin.me_field(s)
    assert abs(hme[2] - 1.0618e5) < 2e2

    sigma = mespin.thermal_sigma(p, 1e-12)
    assert abs(sigma - 3.4752e4) < 1e2


def test_llg_precession_rate():
    p = mespin.MagnetParams()
    p.alpha = 0.0
    rhs = mespin.llg_rhs((1.0, 0.0, 0.0), (0.0, 0.0, 1e5), p)
    assert abs(rhs[1] - p.gamma * 1e5) < 1.0
    assert abs(rhs[0]) < 1e-9 and abs(rhs[2]) < 1e-9


def test_trajectory_determinism_and_reversal():
    p = mespin.MagnetParams()
    s = mespin.MEStimulus()
    s.v_me = 0.47
    s.axis = (0.0, 0.0, -1.0)
    cfg = mespin.SimConfig()
    cfg.dt = 1e-13
    cfg.duration = 2e-9
    cfg.seed = 9

    t1 = mespin.simulate_trajectory((0.0, 0.0, 1.0), p, s, cfg, sample_stride=50)
    t2 = mespin.simulate_trajectory((0.0, 0.0, 1.0), p, s, cfg, sample_stride=50)
    assert t1.samples == t2.samples
    assert t1.reversal_time is not None and t1.reversal_time < 2e-9
    for (_, mx, my, mz) in t1.samples[:: len(t1.samples) // 7]:
        assert abs(mx * mx + my * my + mz * mz - 1.0) < 1e-8


def test_switching_probability_strong_drive():
    p = mespin.MagnetParams()
    s = mespin.MEStimulus()
    s.v_me = 0.6
    s.axis = (0.0, 0.0, -1.0)
    cfg = mespin.SimConfig()
    cfg.dt = 1e-13
    cfg.seed = 3
    est = mespin.switching_probability(p, s, 3e-9, 30, cfg)
    assert est.probability == 1.0
    assert est.ci_low > 0.8


def test_transport():
    stack = mespin.BarrierStack()
    leads = mespin.LeadParams()

    wire = mespin.BarrierStack()
    wire.t_mgo = 0.0
    spinless = mespin.LeadParams()
    spinless.delta_ex = 0.0
    assert abs(mespin.transmission(2.25, wire, spinless, mespin.SpinChannel.UP) - 1.0) < 1e-9

    r_p = mespin.mtj_resistance(stack, leads)
    assert abs(r_p - 14.9e3) / 14.9e3 < 0.02

    t = mespin.tmr(stack, leads)
    assert t > 0.0
    assert mespin.bitcell_tmr(10e3, 20e3, 10e3) == 0.5
    assert mespin.series_transistor_resistance(2.0) == 2.5e3

    sig = mespin.lead_self_energy(0.0, 0.0, 1.5)
    assert abs(sig.real + 1.5) < 1e-12


def test_capacitor_energy():
    cap = mespin.CapacitorGeometry()
    c = cap.capacitance()
    assert abs(c * 0.2 * 0.2 - 0.0695e-15) / 0.0695e-15 < 0.01


def test_device_write_read():
    dev = mespin.MEMTJDevice.with_defaults()
    cfg = mespin.SimConfig()
    cfg.dt = 1e-13
    cfg.seed = 21
    stored, energy = dev.write(0.2, 4e-9, cfg)
    assert stored == mespin.MagneticConfig.AP
    assert abs(energy - 0.0695e-15) / 0.0695e-15 < 0.01
    bit, read_energy = dev.read(0.2, 0.5e-9, 500.0)
    assert bit == mespin.MagneticConfig.AP
    assert 0.0 < read_energy < 1.3e-15


def test_dualport_array():
    arr = mespin.DualPortArray.with_defaults(4, 4)
    data = [1, 0, 1, 1]
    arr.write_row(0, data)
    out, read_e, _ = arr.read_row(0)
    assert out == data
    assert read_e > 0.0

    wrote, read_back, window = arr.simultaneous_access(1, [0, 1, 0, 0], 0)
    assert read_back == data
    assert window == max(arr.t_write, arr.t_read)

    try:
        arr.simultaneous_access(2, [0, 0, 0, 0], 2)
    except mespin.PortConflict:
        pass
    else:
        raise AssertionError("expected PortConflict")


def test_cam_array():
    cam = mespin.CAMArray.with_defaults(2, 4)
    cam.store_word(0, [1, 0, 1, 0])
    cam.store_word(1, [1, 1, 0, 0])
    matches, _, write_e = cam.search([1, 0, 1, 0])
    assert matches == [True, False]
    assert write_e > 0.0

    # Fully matched array dissipates the nominal 15 fJ per bit.
    cam.store_word(1, [1, 0, 1, 0])
    _, read_e, _ = cam.search([1, 0, 1, 0])
    assert abs(read_e - 15e-15) / 15e-15 < 0.01


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
