"""The two executable backends over the shared gate IR.

``run_baseline`` is the conventional fullstate simulator: every gate in the
stream hits the 2**n amplitudes.  ``run_hybrid`` keeps a Pauli frame next to
the state vector: Clifford gates only update the frame, and the remaining
gates (rotations, measurements, preparations) act on the state through the
frame lookup as native multi-qubit Pauli operations.  The tracked physical
state is U|phi> where U is the Clifford the frame represents, so runtime
scales with the number of non-Clifford gates instead of the gate total.

Both backends draw measurement outcomes from an injected seeded generator
with one uniform variate per measurement, so runs with equal seeds follow
identical outcome branches and can be compared amplitude by amplitude.
Measured eigenvalue +1 is recorded as classical bit 0.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import numpy as np

from .circuit import CLIFFORD_TAGS, ROTATION_TAGS, Circuit
from .frame import PauliFrame, invert_to_rotations
from .pauli import PauliString
from .statevector import StateVector

_AXIS_OF = {"RX": "X", "RY": "Y", "RZ": "Z"}


@dataclass
class RunReport:
    """Timing and bookkeeping for one backend execution.

    t_compile_s covers circuit construction only and is filled in by the
    caller that built the circuit; t_run_s covers gate-stream execution.
    """

    backend: str
    n_qubits: int
    gates_total: int = 0
    gates_clifford: int = 0
    gates_rotation: int = 0
    t_compile_s: float = 0.0
    t_run_s: float = 0.0
    seed: int | None = None
    measurements: list[int] = field(default_factory=list)
    expectations: dict[str, float] | None = None

    def to_json(self) -> str:
        return json.dumps({
            "backend": self.backend,
            "n_qubits": self.n_qubits,
            "gates_total": self.gates_total,
            "gates_clifford": self.gates_clifford,
            "gates_rotation": self.gates_rotation,
            "t_compile_s": self.t_compile_s,
            "t_run_s": self.t_run_s,
            "seed": self.seed,
        })


@dataclass
class HybridState:
    """Frame + state vector pair representing U|phi>."""

    frame: PauliFrame
    phi: StateVector
    measurement_record: list[int] = field(default_factory=list)
    timing: dict[str, float] = field(default_factory=dict)

    def expectation(self, p: PauliString) -> float:
        """<P> on the tracked state, via <phi| lookup(P) |phi>."""
        return self.phi.expectation(self.frame.lookup(p))

    def flush_to_origin(self) -> None:
        """Fold the frame's Clifford into the amplitudes, up to global phase.

        Conjugating the backward-stored frame to the origin is the same as
        sandwiching U between the step unitaries' inverses, so the steps
        applied in order implement U itself; swaps become amplitude index
        relabelings.  The resulting amplitudes match a gate-by-gate run up
        to one global phase, which is left unnormalized.
        """
        steps = invert_to_rotations(self.frame)
        t0 = time.perf_counter()
        for step in steps:
            if step.kind == "pauli_rotation":
                _rotate_signed(self.phi, step.axis, step.angle)
            else:
                self.phi.swap_qubits(*step.qubits)
        self.frame = PauliFrame.origin(self.frame.num_qubits)
        self.timing["flush_s"] = self.timing.get("flush_s", 0.0) + time.perf_counter() - t0


def _rotate_signed(phi: StateVector, axis: PauliString, theta: float) -> None:
    # R_{-P}(theta) = R_P(-theta); the kernel itself wants a sign-free axis
    if axis.phase_exp == 2:
        axis, theta = axis.unsigned(), -theta
    phi.apply_pauli_rotation(axis, theta)


def _fill_counts(report: RunReport, circuit: Circuit) -> None:
    report.gates_total = len(circuit)
    report.gates_clifford = circuit.clifford_count()
    report.gates_rotation = circuit.rotation_count()


def run_baseline(circuit: Circuit, rng=None) -> tuple[StateVector, RunReport]:
    """Gate-by-gate fullstate execution of the circuit."""
    seed = rng if isinstance(rng, int) else None
    rng = np.random.default_rng(rng)
    n = circuit.num_qubits
    state = StateVector.zero(n)
    report = RunReport("baseline", n, seed=seed)
    _fill_counts(report, circuit)
    t0 = time.perf_counter()
    for g in circuit.gates:
        if g.tag in CLIFFORD_TAGS or g.tag in ROTATION_TAGS:
            state.apply_gate(g.tag, g.qubits, g.angle)
        elif g.tag == "MEASZ":
            outcome = state.measure(PauliString.single(n, g.qubits[0], "Z"), rng)
            report.measurements.append(0 if outcome == 1 else 1)
        elif g.tag == "PREPZ":
            state.prepare(PauliString.single(n, g.qubits[0], "Z"),
                          PauliString.single(n, g.qubits[0], "X"), rng)
        else:
            raise ValueError(f"unsupported gate tag {g.tag!r}")
    report.t_run_s = time.perf_counter() - t0
    return state, report


def run_hybrid(circuit: Circuit, rng=None,
               profile: bool = False) -> tuple[HybridState, RunReport]:
    """Frame-tracked execution: Cliffords update the frame, everything else
    reaches the state vector as a multi-qubit Pauli operation.

    With ``profile`` the per-phase durations (clifford/rotation/measure/prep)
    are accumulated in ``HybridState.timing``; the default leaves the gate
    loop free of per-gate clock reads.
    """
    seed = rng if isinstance(rng, int) else None
    rng = np.random.default_rng(rng)
    n = circuit.num_qubits
    hs = HybridState(PauliFrame.origin(n), StateVector.zero(n),
                     timing={"clifford_s": 0.0, "rotation_s": 0.0, "measure_s": 0.0,
                             "prep_s": 0.0})
    report = RunReport("hybrid", n, seed=seed)
    _fill_counts(report, circuit)
    timing = hs.timing
    frame, phi = hs.frame, hs.phi
    clock = time.perf_counter
    t0 = clock()
    for g in circuit.gates:
        tag = g.tag
        if tag in CLIFFORD_TAGS:
            if profile:
                t1 = clock()
                frame.apply_gate(tag, g.qubits)
                timing["clifford_s"] += clock() - t1
            else:
                frame.apply_gate(tag, g.qubits)
        elif tag in ROTATION_TAGS:
            t1 = clock() if profile else 0.0
            axis = frame.lookup(PauliString.single(n, g.qubits[0], _AXIS_OF[tag]))
            _rotate_signed(phi, axis, g.angle)
            if profile:
                timing["rotation_s"] += clock() - t1
        elif tag == "MEASZ":
            t1 = clock() if profile else 0.0
            outcome = phi.measure(frame.lookup(
                PauliString.single(n, g.qubits[0], "Z")), rng)
            bit = 0 if outcome == 1 else 1
            hs.measurement_record.append(bit)
            report.measurements.append(bit)
            if profile:
                timing["measure_s"] += clock() - t1
        elif tag == "PREPZ":
            t1 = clock() if profile else 0.0
            phi.prepare(frame.lookup(PauliString.single(n, g.qubits[0], "Z")),
                        frame.lookup(PauliString.single(n, g.qubits[0], "X")),
                        rng)
            if profile:
                timing["prep_s"] += clock() - t1
        else:
            raise ValueError(f"unsupported gate tag {tag!r}")
    report.t_run_s = clock() - t0
    return hs, report
