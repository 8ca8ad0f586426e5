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
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <complex>

#include "mespin/cam_array.hpp"
#include "mespin/device.hpp"
#include "mespin/magnetodynamics.hpp"
#include "mespin/memory_array.hpp"
#include "mespin/transport.hpp"

namespace py = pybind11;
using namespace mespin;

namespace {

using arr3 = std::array<double, 3>;

Vec3 to_vec(const arr3& a) { return {a[0], a[1], a[2]}; }
arr3 from_vec(const Vec3& v) { return {v.x, v.y, v.z}; }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Magneto-electric spintronic memory simulator core";

    py::class_<MagnetParams>(m, "MagnetParams")
        .def(py::init<>())
        .def_readwrite("ms", &MagnetParams::ms)
        .def_readwrite("alpha", &MagnetParams::alpha)
        .def_readwrite("k_i", &MagnetParams::k_i)
        .def_readwrite("t_fl", &MagnetParams::t_fl)
        .def_readwrite("diameter", &MagnetParams::diameter)
        .def_readwrite("temperature", &MagnetParams::temperature)
        .def_readwrite("gamma", &MagnetParams::gamma)
        .def_property(
            "demag", [](const MagnetParams& p) { return from_vec(p.demag); },
            [](MagnetParams& p, const arr3& v) { p.demag = to_vec(v); })
        .def("volume", &MagnetParams::volume)
        .def("effective_anisotropy", &MagnetParams::effective_anisotropy)
        .def("validate", &MagnetParams::validate);

    py::class_<MEStimulus>(m, "MEStimulus")
        .def(py::init<>())
        .def_readwrite("alpha_me", &MEStimulus::alpha_me)
        .def_readwrite("t_me", &MEStimulus::t_me)
        .def_readwrite("v_me", &MEStimulus::v_me)
        .def_property(
            "axis", [](const MEStimulus& s) { return from_vec(s.axis); },
            [](MEStimulus& s, const arr3& v) { s.axis = to_vec(v); });

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("dt", &SimConfig::dt)
        .def_readwrite("duration", &SimConfig::duration)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("renormalize", &SimConfig::renormalize);

    py::class_<Trajectory>(m, "Trajectory")
        .def_property_readonly("reversal_time",
                               [](const Trajectory& t) -> py::object {
                                   if (t.reversal_time) return py::float_(*t.reversal_time);
                                   return py::none();
                               })
        .def_property_readonly("samples", [](const Trajectory& t) {
            py::list rows;
            for (const auto& s : t.samples)
                rows.append(py::make_tuple(s.t, s.mx, s.my, s.mz));
            return rows;
        });

    py::class_<SwitchingEstimate>(m, "SwitchingEstimate")
        .def_readonly("probability", &SwitchingEstimate::probability)
        .def_readonly("ci_low", &SwitchingEstimate::ci_low)
        .def_readonly("ci_high", &SwitchingEstimate::ci_high)
        .def_readonly("n_trials", &SwitchingEstimate::n_trials);

    m.attr("ALPHA_ME_UNIT") = constants::alpha_me_unit;
    m.attr("MU0") = constants::mu0;

    m.def("demag_field",
          [](const arr3& mv, const MagnetParams& p) { return from_vec(demag_field(to_vec(mv), p)); });
    m.def("anisotropy_field", [](const arr3& mv, const MagnetParams& p) {
        return from_vec(anisotropy_field(to_vec(mv), p));
    });
    m.def("me_field", [](const MEStimulus& s) { return from_vec(me_field(s)); });
    m.def("thermal_sigma", &thermal_sigma, py::arg("magnet"), py::arg("dt"));
    m.def("llg_rhs", [](const arr3& mv, const arr3& hv, const MagnetParams& p) {
        return from_vec(llg_rhs(to_vec(mv), to_vec(hv), p));
    });
    m.def("magnetic_energy", [](const arr3& mv, const MagnetParams& p, const arr3& hv) {
        return magnetic_energy(to_vec(mv), p, to_vec(hv));
    });

    m.def(
        "simulate_trajectory",
        [](const arr3& m0, const MagnetParams& p, const MEStimulus& s, const SimConfig& cfg,
           int sample_stride, double reversal_threshold) {
            TrajectoryOptions opts;
            opts.sample_stride = sample_stride;
            opts.reversal_threshold = reversal_threshold;
            return simulate_trajectory(to_vec(m0), p, StimulusSchedule::constant(s), cfg, opts);
        },
        py::arg("m0"), py::arg("magnet"), py::arg("stimulus"), py::arg("sim"),
        py::arg("sample_stride") = 1, py::arg("reversal_threshold") = -0.9);

    m.def(
        "switching_probability",
        [](const MagnetParams& p, const MEStimulus& s, double pulse_duration, int n_trials,
           const SimConfig& cfg, double equilibrate_s, double relax_s, double threshold,
           int workers) {
            MonteCarloOptions opts;
            opts.equilibrate_s = equilibrate_s;
            opts.relax_s = relax_s;
            opts.threshold = threshold;
            opts.workers = workers;
            return switching_probability(p, s, pulse_duration, n_trials, cfg, opts);
        },
        py::arg("magnet"), py::arg("stimulus"), py::arg("pulse_duration"), py::arg("n_trials"),
        py::arg("sim"), py::arg("equilibrate_s") = 2e-9, py::arg("relax_s") = 0.0,
        py::arg("threshold") = -0.9, py::arg("workers") = 0);

    py::enum_<MagneticConfig>(m, "MagneticConfig")
        .value("P", MagneticConfig::Parallel)
        .value("AP", MagneticConfig::AntiParallel);

    py::enum_<SpinChannel>(m, "SpinChannel")
        .value("UP", SpinChannel::Up)
        .value("DOWN", SpinChannel::Down);

    py::class_<LeadParams>(m, "LeadParams")
        .def(py::init<>())
        .def_readwrite("e_f", &LeadParams::e_f)
        .def_readwrite("delta_ex", &LeadParams::delta_ex)
        .def_readwrite("m_eff", &LeadParams::m_eff);

    py::class_<BarrierStack>(m, "BarrierStack")
        .def(py::init<>())
        .def_readwrite("t_mgo", &BarrierStack::t_mgo)
        .def_readwrite("u_b", &BarrierStack::u_b)
        .def_readwrite("m_barrier", &BarrierStack::m_barrier)
        .def_readwrite("a", &BarrierStack::a)
        .def_readwrite("cross_section", &BarrierStack::cross_section)
        .def_readwrite("config", &BarrierStack::config)
        .def_readwrite("modes_per_area", &BarrierStack::modes_per_area)
        .def("n_sites", &BarrierStack::n_sites);

    m.def("lead_self_energy", &lead_self_energy, py::arg("e"), py::arg("band_bottom"),
          py::arg("t0"));
    m.def("hopping_ev", &hopping_ev, py::arg("m_eff"), py::arg("a"));
    m.def("transmission", &transmission, py::arg("e"), py::arg("stack"), py::arg("leads"),
          py::arg("channel"));
    m.def("mtj_resistance", &mtj_resistance, py::arg("stack"), py::arg("leads"),
          py::arg("v_bias") = 0.0, py::arg("t_kelvin") = 300.0);
    m.def("tmr", &tmr, py::arg("stack"), py::arg("leads"), py::arg("v_bias") = 0.0);
    m.def("bitcell_tmr", &bitcell_tmr, py::arg("r_p"), py::arg("r_ap"), py::arg("r_series"));
    m.def("series_transistor_resistance", &series_transistor_resistance, py::arg("w_over_l"),
          py::arg("r_unit") = 5.0e3);

    py::class_<CapacitorGeometry>(m, "CapacitorGeometry")
        .def(py::init<>())
        .def_readwrite("area", &CapacitorGeometry::area)
        .def_readwrite("t_me", &CapacitorGeometry::t_me)
        .def_readwrite("eps_r", &CapacitorGeometry::eps_r)
        .def("capacitance", &CapacitorGeometry::capacitance);

    py::class_<MEMTJDevice>(m, "MEMTJDevice")
        .def_static("with_defaults", &MEMTJDevice::with_defaults)
        .def_readonly("r_p", &MEMTJDevice::r_p)
        .def_readonly("r_ap", &MEMTJDevice::r_ap)
        .def_readonly("stored", &MEMTJDevice::stored)
        .def_readonly("settled", &MEMTJDevice::settled)
        .def_readwrite("cap", &MEMTJDevice::cap)
        .def_readwrite("magnet", &MEMTJDevice::magnet)
        .def("write",
             [](MEMTJDevice& dev, double v, double duration, const SimConfig& cfg) {
                 const WriteResult r = write_pulse(dev, v, duration, cfg);
                 return py::make_tuple(r.stored, r.write_energy);
             })
        .def("read", [](const MEMTJDevice& dev, double v_read, double t_read, double r_series) {
            const ReadResult r = read(dev, v_read, t_read, r_series);
            return py::make_tuple(r.bit, r.read_energy);
        });

    py::class_<DualPortArray>(m, "DualPortArray")
        .def_static(
            "with_defaults",
            [](int rows, int cols) { return DualPortArray::with_defaults(rows, cols); },
            py::arg("rows") = 4, py::arg("cols") = 4)
        .def_readwrite("v_write", &DualPortArray::v_write)
        .def_readwrite("v_read", &DualPortArray::v_read)
        .def_readwrite("t_write", &DualPortArray::t_write)
        .def_readwrite("t_read", &DualPortArray::t_read)
        .def("write_row",
             [](DualPortArray& arr, int row, const std::vector<int>& bits) {
                 const AccessResult r = write_row(arr, row, bits);
                 return py::make_tuple(r.data, r.energy.write_energy_per_bit, r.latency);
             })
        .def("read_row",
             [](DualPortArray& arr, int row) {
                 const AccessResult r = read_row(arr, row);
                 return py::make_tuple(r.data, r.energy.read_energy_per_bit, r.latency);
             })
        .def("simultaneous_access",
             [](DualPortArray& arr, int wr, const std::vector<int>& bits, int rd) {
                 const SimultaneousResult r = simultaneous_access(arr, wr, bits, rd);
                 return py::make_tuple(r.write.data, r.read.data, r.window);
             });

    py::class_<CAMArray>(m, "CAMArray")
        .def_static(
            "with_defaults",
            [](int rows, int word_width) { return CAMArray::with_defaults(rows, word_width); },
            py::arg("rows") = 4, py::arg("word_width") = 4)
        .def_readwrite("v_read", &CAMArray::v_read)
        .def_readwrite("t_read", &CAMArray::t_read)
        .def("store_word", &store_word, py::arg("row"), py::arg("bits"))
        .def("search", [](CAMArray& arr, const std::vector<int>& key) {
            const MatchResult r = search(arr, key);
            return py::make_tuple(r.matchline_low, r.energy.read_energy_per_bit,
                                  r.energy.write_energy_per_bit);
        });

    py::register_exception<SequencingFault>(m, "SequencingFault");
    py::register_exception<PortConflict>(m, "PortConflict");
}
