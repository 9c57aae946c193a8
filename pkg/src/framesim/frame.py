"""Pauli frame tracking of Clifford circuits in the backward interpretation.

A frame stores, for every qubit j, the pair (eff_z[j], eff_x[j]) obtained by
conjugating the initial stabilizer Z_j and destabilizer X_j *backwards*
through the Clifford circuit accumulated so far: eff_z[j] = U^dag Z_j U and
likewise for X.  Appending a gate g therefore rewrites the affected rows as
products of existing rows (the frame expansion of g^dag sigma g) instead of
conjugating every entry, which touches at most two entries per gate.

Used this way the frame is a lookup table: a single-qubit rotation axis A_i
arriving after the Clifford prefix U acts on the tracked state as the
multi-qubit axis U^dag A_i U = lookup(A_i), so Clifford gates never have to
touch the 2**n amplitudes at all.

``invert_to_rotations`` synthesizes the accumulated Clifford back into O(n)
Pauli rotations plus qubit relabelings, which is how the hybrid backend
flushes the frame into the state vector when raw amplitudes are needed.

Rows are held as plain (x_bits, z_bits, phase_exp) integer triples rather
than PauliString objects: the frame update runs once per circuit gate and
object construction would dominate it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .pauli import PauliString, _swap_bits

_QUARTER = math.pi / 2  # R_Q(pi/2) = exp(-i pi/4 Q), a symplectic transvection


def _mul(a, b):
    # exact product of (x, z, phase) triples; same phase rule as PauliString
    ax, az, ap = a
    bx, bz, bp = b
    x = ax ^ bx
    z = az ^ bz
    phase = (ap + bp + (ax & az).bit_count() + (bx & bz).bit_count()
             - (x & z).bit_count() + 2 * (az & bx).bit_count()) & 3
    return (x, z, phase)


def _anti(a, b) -> int:
    return ((a[0] & b[1]).bit_count() + (a[1] & b[0]).bit_count()) & 1


def _neg(a):
    return (a[0], a[1], (a[2] + 2) & 3)


@dataclass(frozen=True, slots=True)
class RotationStep:
    """One element of a frame synthesis sequence.

    kind "pauli_rotation": R_axis(angle) with angle a multiple of pi/2 in the
    exp(-i theta P / 2) convention.  kind "qubit_swap": relabel two qubits.
    """

    kind: str
    axis: PauliString | None = None
    angle: float = 0.0
    qubits: tuple[int, int] | None = None

    @classmethod
    def rotation(cls, axis: PauliString, angle: float) -> "RotationStep":
        return cls("pauli_rotation", axis=axis, angle=angle)

    @classmethod
    def swap(cls, a: int, b: int) -> "RotationStep":
        return cls("qubit_swap", qubits=(a, b))


class PauliFrame:
    """n rows of (eff_z, eff_x) signed Pauli pairs; mutable, single-owner."""

    __slots__ = ("num_qubits", "_z", "_x")

    def __init__(self, num_qubits: int, rows=None):
        if num_qubits < 1:
            raise ValueError("num_qubits must be >= 1")
        self.num_qubits = num_qubits
        if rows is None:
            self._z = [(0, 1 << j, 0) for j in range(num_qubits)]
            self._x = [(1 << j, 0, 0) for j in range(num_qubits)]
        else:
            if len(rows) != num_qubits:
                raise ValueError("need one (eff_z, eff_x) row per qubit")
            for z, x in rows:
                if z.num_qubits != num_qubits or x.num_qubits != num_qubits:
                    raise ValueError("row operator qubit count mismatch")
            self._z = [(z.x_bits, z.z_bits, z.phase_exp) for z, _ in rows]
            self._x = [(x.x_bits, x.z_bits, x.phase_exp) for _, x in rows]

    @classmethod
    def origin(cls, num_qubits: int) -> "PauliFrame":
        """The identity-circuit frame: row j = (Z_j, X_j)."""
        return cls(num_qubits)

    def copy(self) -> "PauliFrame":
        out = PauliFrame.__new__(PauliFrame)
        out.num_qubits = self.num_qubits
        out._z = list(self._z)
        out._x = list(self._x)
        return out

    def eff_z(self, i: int) -> PauliString:
        return PauliString(self.num_qubits, *self._z[i])

    def eff_x(self, i: int) -> PauliString:
        return PauliString(self.num_qubits, *self._x[i])

    def rows(self) -> list[tuple[PauliString, PauliString]]:
        return [(self.eff_z(i), self.eff_x(i)) for i in range(self.num_qubits)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliFrame):
            return NotImplemented
        return (self.num_qubits == other.num_qubits
                and self._z == other._z and self._x == other._x)

    def is_origin(self) -> bool:
        return self == PauliFrame.origin(self.num_qubits)

    def validate(self) -> bool:
        """Check the symplectic pairing and sign conventions of every row."""
        n = self.num_qubits
        if any(e[2] % 2 for e in self._z + self._x):
            return False
        for i in range(n):
            for j in range(n):
                if _anti(self._z[i], self._z[j]) or _anti(self._x[i], self._x[j]):
                    return False
                if _anti(self._z[i], self._x[j]) != (1 if i == j else 0):
                    return False
        return True

    # ------------------------------------------------------------------
    # backward gate updates

    def apply_gate(self, tag: str, qubits) -> None:
        """Append Clifford gate g: affected rows become the frame expansion
        of g^dag sigma g, a product of at most two current entries."""
        z, x = self._z, self._x
        n = self.num_qubits
        if tag == "CX":
            c, t = qubits
            if not (0 <= c < n and 0 <= t < n):
                raise ValueError(f"qubit out of range in {qubits}")
            z[t] = _mul(z[c], z[t])
            x[c] = _mul(x[c], x[t])
            return
        if tag in ("H", "S", "SDG", "X", "Y", "Z"):
            (i,) = qubits
            if not 0 <= i < n:
                raise ValueError(f"qubit {i} out of range")
            if tag == "H":
                z[i], x[i] = x[i], z[i]
            elif tag == "S":
                # S^dag X S = -Y, and -Y maps to +i * eff_z * eff_x
                xi, zi, p = _mul(z[i], x[i])
                x[i] = (xi, zi, (p + 1) & 3)
            elif tag == "SDG":
                xi, zi, p = _mul(z[i], x[i])
                x[i] = (xi, zi, (p - 1) & 3)
            elif tag == "X":
                z[i] = _neg(z[i])
            elif tag == "Y":
                z[i] = _neg(z[i])
                x[i] = _neg(x[i])
            else:
                x[i] = _neg(x[i])
            return
        c, t = qubits
        if not (0 <= c < n and 0 <= t < n):
            raise ValueError(f"qubit out of range in {qubits}")
        if tag == "CZ":
            x[c] = _mul(x[c], z[t])
            x[t] = _mul(z[c], x[t])
        elif tag == "SWAP":
            z[c], z[t] = z[t], z[c]
            x[c], x[t] = x[t], x[c]
        else:
            raise ValueError(f"{tag!r} is not a Clifford gate tag")

    # ------------------------------------------------------------------
    # lookup

    def lookup(self, p: PauliString) -> PauliString:
        """Map P to U^dag P U, expanded as a signed product of frame entries.

        Letters of P select the images of their origin symbols: an X letter
        on qubit j contributes eff_x[j], a Z letter eff_z[j], and a Y letter
        the image of Y_j = i X_j Z_j.  The images of letters on distinct
        qubits commute, so the multiplication order is immaterial.
        """
        if p.num_qubits != self.num_qubits:
            raise ValueError("qubit count mismatch")
        if not p.is_hermitian:
            raise ValueError("lookup requires a Hermitian operator")
        acc = (0, 0, p.phase_exp)
        px, pz = p.x_bits, p.z_bits
        support = px | pz
        j = 0
        while support:
            if support & 1:
                xbit = (px >> j) & 1
                zbit = (pz >> j) & 1
                if zbit == 0:
                    img = self._x[j]
                elif xbit == 0:
                    img = self._z[j]
                else:
                    ix, iz, ip = _mul(self._x[j], self._z[j])
                    img = (ix, iz, (ip + 1) & 3)
                acc = _mul(acc, img)
            support >>= 1
            j += 1
        return PauliString(self.num_qubits, *acc)

    # ------------------------------------------------------------------
    # entry-wise conjugation (used by the synthesis algorithm)

    def conjugate_rotation(self, axis: PauliString, angle: float) -> None:
        """Conjugate every entry by R_axis(angle), angle in {+-pi/2, pi}.

        Entries commuting with the axis are untouched; anticommuting ones
        become -i*Q*E (+pi/2), +i*Q*E (-pi/2) or -E (pi).
        """
        shift = _clifford_angle_shift(angle)
        q = (axis.x_bits, axis.z_bits, axis.phase_exp)
        for row in (self._z, self._x):
            for i, e in enumerate(row):
                if _anti(e, q):
                    if shift == 2:
                        row[i] = _neg(e)
                    else:
                        ex, ez, ep = _mul(q, e)
                        row[i] = (ex, ez, (ep + shift) & 3)

    def conjugate_swap(self, a: int, b: int) -> None:
        """Conjugate every entry by SWAP(a, b), i.e. relabel the two qubits."""
        self._z = [(_swap_bits(ex, a, b), _swap_bits(ez, a, b), ep)
                   for ex, ez, ep in self._z]
        self._x = [(_swap_bits(ex, a, b), _swap_bits(ez, a, b), ep)
                   for ex, ez, ep in self._x]

    def apply_step(self, step: RotationStep) -> None:
        if step.kind == "pauli_rotation":
            self.conjugate_rotation(step.axis, step.angle)
        elif step.kind == "qubit_swap":
            self.conjugate_swap(*step.qubits)
        else:
            raise ValueError(f"unknown step kind {step.kind!r}")

    # ------------------------------------------------------------------

    def dump(self) -> str:
        """One row per line: ``effZ=<signed dense>  effX=<signed dense>``."""
        return "\n".join(
            f"effZ={z.to_label()}  effX={x.to_label()}"
            for z, x in self.rows()
        )

    def __repr__(self) -> str:
        return f"PauliFrame({self.num_qubits} qubits)\n{self.dump()}"


def _clifford_angle_shift(angle: float) -> int:
    """Phase shift (exponent of i) for the anticommuting conjugation branch."""
    for target, shift in ((_QUARTER, -1), (-_QUARTER, 1), (math.pi, 2)):
        if math.isclose(angle, target, rel_tol=0.0, abs_tol=1e-12):
            return shift
    raise ValueError(f"frame conjugation needs angle in {{+-pi/2, pi}}, got {angle}")


_OTHER_LETTERS = {
    frozenset("XY"): "Z", frozenset("XZ"): "Y", frozenset("YZ"): "X",
}


def _third_letter(a: str, b: str) -> str:
    return _OTHER_LETTERS[frozenset((a, b))]


def invert_to_rotations(frame: PauliFrame) -> list[RotationStep]:
    """Synthesize steps whose conjugation images map ``frame`` to the origin.

    Per qubit q, at most two pi/2 transvections reduce the row that carries
    q to a single-qubit pair: the first rotates eff_z[i] onto a bare letter
    at q, the second does the same to eff_x[i].  A cleanup pass maps every
    single-qubit pair to (+Z, +X) with at most two single-qubit rotations,
    and qubit swaps sort the pairs into their home rows.  Applying the steps
    in order reproduces the origin frame exactly, signs included.

    Because the entries are the *backward* images U^dag sigma U, a sequence
    V whose conjugation restores every origin symbol satisfies V U^dag = I
    up to phase: the steps in order implement the tracked Clifford U itself,
    and the reversed sequence with negated angles implements U^dag.

    Emits at most 2n multi-qubit rotations, 2n single-qubit rotations and
    n-1 swaps.  Does not modify the input frame.
    """
    if not frame.validate():
        raise ValueError("cannot invert an invalid frame")
    n = frame.num_qubits
    f = frame.copy()
    steps: list[RotationStep] = []

    def emit(axis: PauliString, angle: float) -> None:
        steps.append(RotationStep.rotation(axis, angle))
        f.conjugate_rotation(axis, angle)

    for q in range(n):
        row = next((i for i in range(n) if f.eff_z(i).letter_at(q) != "I"), None)
        assert row is not None, "valid frames always expose each qubit in some eff_z"
        zi = f.eff_z(row)
        if zi.weight > 1:
            sigma = zi.letter_at(q)
            tilde = "Z" if sigma in ("X", "Y") else "X"
            # Q = i * tilde_q * eff_z anticommutes with eff_z and maps it to +tilde_q
            emit((PauliString.single(n, q, tilde) * zi).with_phase_shift(1), _QUARTER)
        xi = f.eff_x(row)
        if xi.weight > 1:
            third = _third_letter(f.eff_z(row).letter_at(q), xi.letter_at(q))
            emit((PauliString.single(n, q, third) * xi).with_phase_shift(1), _QUARTER)

    # every row is now a single-qubit anticommuting pair; normalize to (+Z, +X)
    for i in range(n):
        (q,) = f.eff_z(i).support
        zi = f.eff_z(i)
        if zi.letter_at(q) != "Z":
            axis = PauliString.single(n, q, _third_letter(zi.letter_at(q), "Z"))
            # pick the quarter-turn direction that lands exactly on +Z_q
            angle = _QUARTER if (axis * zi).with_phase_shift(-1) == \
                PauliString.single(n, q, "Z") else -_QUARTER
            emit(axis, angle)
        elif zi.phase_exp == 2:
            emit(PauliString.single(n, q, "X"), math.pi)
        xi = f.eff_x(i)
        if xi.letter_at(q) == "Y":
            axis = PauliString.single(n, q, "Z")
            angle = _QUARTER if (axis * xi).with_phase_shift(-1) == \
                PauliString.single(n, q, "X") else -_QUARTER
            emit(axis, angle)
        elif xi.phase_exp == 2:
            emit(PauliString.single(n, q, "Z"), math.pi)

    # sort the (+Z, +X) pairs into their home rows by relabeling
    qubit_of = [f.eff_z(i).support[0] for i in range(n)]
    pos_of = {q: i for i, q in enumerate(qubit_of)}
    for i in range(n):
        q = qubit_of[i]
        if q != i:
            steps.append(RotationStep.swap(i, q))
            f.conjugate_swap(i, q)
            j = pos_of[i]
            qubit_of[j], pos_of[q] = q, j
            qubit_of[i], pos_of[i] = i, i

    assert f.is_origin(), "frame synthesis must terminate on the origin frame"
    return steps
