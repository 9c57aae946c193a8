"""Shared 1-/2-qubit gate IR, Pauli-exponential compilation, Trotterization.

Both backends consume the same gate stream.  A gate list is ordered in time:
the first list element is applied first.  The Clifford subset is exactly
{H, S, SDG, X, Y, Z, CX, CZ, SWAP}; RX/RY/RZ carry an angle in the
R_A(theta) = exp(-i theta A / 2) convention, and PREPZ/MEASZ are the
computational-basis preparation and measurement.
"""
from __future__ import annotations

from dataclasses import dataclass

from .pauli import PauliString
from .hamiltonian import Hamiltonian

CLIFFORD_TAGS = frozenset({"H", "S", "SDG", "X", "Y", "Z", "CX", "CZ", "SWAP"})
ROTATION_TAGS = frozenset({"RX", "RY", "RZ"})
_ARITY = {
    "H": 1, "S": 1, "SDG": 1, "X": 1, "Y": 1, "Z": 1,
    "CX": 2, "CZ": 2, "SWAP": 2,
    "RX": 1, "RY": 1, "RZ": 1,
    "PREPZ": 1, "MEASZ": 1,
}


@dataclass(frozen=True, slots=True)
class Gate:
    tag: str
    qubits: tuple[int, ...]
    angle: float | None = None
    classical_target: int | None = None


class Circuit:
    """An ordered gate list on a fixed qubit count, plus free-form metadata."""

    __slots__ = ("num_qubits", "gates", "metadata")

    def __init__(self, num_qubits: int, gates=None, metadata=None):
        if num_qubits < 1:
            raise ValueError("num_qubits must be >= 1")
        self.num_qubits = num_qubits
        self.gates: list[Gate] = []
        self.metadata: dict = dict(metadata) if metadata else {}
        for g in gates or ():
            self.append(g.tag, *g.qubits, angle=g.angle,
                        classical_target=g.classical_target)

    def append(self, tag: str, *qubits: int, angle: float | None = None,
               classical_target: int | None = None) -> None:
        if tag not in _ARITY:
            raise ValueError(f"unknown gate tag {tag!r}")
        if len(qubits) != _ARITY[tag]:
            raise ValueError(f"{tag} takes {_ARITY[tag]} qubit(s), got {len(qubits)}")
        for q in qubits:
            if not 0 <= q < self.num_qubits:
                raise ValueError(f"qubit {q} out of range for {self.num_qubits} qubits")
        if len(set(qubits)) != len(qubits):
            raise ValueError(f"{tag} needs distinct qubits, got {qubits}")
        if tag in ROTATION_TAGS:
            if angle is None or not _finite(angle):
                raise ValueError(f"{tag} requires a finite angle")
        elif angle is not None:
            raise ValueError(f"{tag} does not take an angle")
        if classical_target is not None and tag != "MEASZ":
            raise ValueError("classical_target is only valid on MEASZ")
        self.gates.append(Gate(tag, tuple(qubits), angle, classical_target))

    def extend(self, other: "Circuit") -> None:
        if other.num_qubits != self.num_qubits:
            raise ValueError("qubit count mismatch")
        self.gates.extend(other.gates)

    def __len__(self) -> int:
        return len(self.gates)

    def clifford_count(self) -> int:
        return sum(1 for g in self.gates if g.tag in CLIFFORD_TAGS)

    def rotation_count(self) -> int:
        return sum(1 for g in self.gates if g.tag in ROTATION_TAGS)

    def dump_text(self) -> str:
        """One gate per line: ``TAG q[,q2][,angle]``."""
        lines = []
        for g in self.gates:
            parts = [str(q) for q in g.qubits]
            if g.angle is not None:
                parts.append(repr(g.angle))
            lines.append(f"{g.tag} " + ",".join(parts))
        return "\n".join(lines)

    def __repr__(self) -> str:
        return (f"Circuit(num_qubits={self.num_qubits}, gates={len(self.gates)}, "
                f"cliffords={self.clifford_count()}, rotations={self.rotation_count()})")


def _finite(x: float) -> bool:
    return x == x and abs(x) != float("inf")


def compile_pauli_rotation(term: PauliString, angle: float) -> Circuit:
    """CNOT-staircase decomposition of exp(-i angle/2 * term).

    Basis changes map each X support to Z with H and each Y support to Z
    with (SDG, H); a descending CNOT chain folds the joint parity onto the
    lowest-index support qubit, where a single RZ applies the angle; the
    chain and basis changes are then mirrored.  Weight-k terms use exactly
    2(k-1) CX gates.  A weight-0 term is a pure global phase, recorded in
    the fragment metadata instead of emitting gates.
    """
    if term.phase_exp != 0:
        raise ValueError("fold the sign of the term into the angle first")
    circ = Circuit(term.num_qubits)
    support = term.support
    if not support:
        circ.metadata["global_phase"] = -angle / 2.0
        return circ
    for q in support:
        letter = term.letter_at(q)
        if letter == "X":
            circ.append("H", q)
        elif letter == "Y":
            circ.append("SDG", q)
            circ.append("H", q)
    for i in range(len(support) - 1, 0, -1):
        circ.append("CX", support[i], support[i - 1])
    circ.append("RZ", support[0], angle=angle)
    for i in range(1, len(support)):
        circ.append("CX", support[i], support[i - 1])
    for q in support:
        letter = term.letter_at(q)
        if letter == "X":
            circ.append("H", q)
        elif letter == "Y":
            circ.append("H", q)
            circ.append("S", q)
    return circ


def trotterize(hamiltonian: Hamiltonian, time: float = 1.0, steps: int = 1) -> Circuit:
    """First-order product-formula circuit for exp(-i H t).

    Each of the ``steps`` repetitions walks the terms in their stored order
    and emits exp(-i c_j P_j t / steps), i.e. a staircase with angle
    2 c_j t / steps.  Term order is part of the contract: both backends see
    the identical gate stream.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    circ = Circuit(hamiltonian.num_qubits,
                   metadata={"hamiltonian": hamiltonian.name,
                             "evolution_time": time,
                             "trotter_steps": steps})
    global_phase = 0.0
    for _ in range(steps):
        for term in hamiltonian.terms:
            frag = compile_pauli_rotation(term.pauli, 2.0 * term.coeff * time / steps)
            circ.extend(frag)
            global_phase += frag.metadata.get("global_phase", 0.0)
    if global_phase:
        circ.metadata["global_phase"] = global_phase
    return circ
