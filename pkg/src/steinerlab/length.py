"""Closed-form length of a realized type and its exact gradient.

For a full type the total length is |sum(c_i * p_i)| with one unit complex
coefficient per terminal, conjugate to the outgoing edge direction there.
The coefficients are extracted from a single realization and stay valid on
the whole connected realizability cell that contains it, which turns length
evaluation anywhere in the cell into a closed form. Non-full types evaluate
as the sum of the moduli of their full components.
"""

from dataclasses import dataclass

from .errors import DegenerateInput
from .geom import GEOM_TOL, Point
from .realization import Configuration, RealizedTree
from .topology import CombinatorialType, full_components


@dataclass
class MaxwellCoefficients:
    """Per-terminal unit coefficients of a full type (indexed 0..n-1)."""

    type_ref: CombinatorialType
    c: tuple[complex, ...]


@dataclass
class LengthFunction:
    """Sum of component Maxwell moduli for an arbitrary (possibly glued) type.

    Each entry pairs component coefficients with the parent terminal ids its
    local terminals map to.
    """

    type_ref: CombinatorialType
    components: list[tuple[MaxwellCoefficients, tuple[int, ...]]]

    def evaluate(self, p: Configuration) -> float:
        total = 0.0
        for mc, ids in self.components:
            z = sum(ci * p[pid - 1] for ci, pid in zip(mc.c, ids))
            total += abs(z)
        return total


def maxwell_coefficients(rt: RealizedTree) -> MaxwellCoefficients:
    """Extract the unit coefficients from a realization of a full type."""
    t = rt.type_ref
    if not t.is_full:
        raise DegenerateInput("Maxwell coefficients need a full type")
    coeffs = []
    for i in range(1, t.n_terminals + 1):
        (nbr,) = t.adjacency[i]
        d = rt.positions[i] - rt.positions[nbr]
        r = abs(d)
        if r <= GEOM_TOL:
            raise DegenerateInput(f"terminal {i} sits on its neighbor")
        coeffs.append((d / r).conjugate())
    return MaxwellCoefficients(t, tuple(coeffs))


def maxwell_length(mc: MaxwellCoefficients, p: Configuration) -> float:
    """|sum c_i p_i|; exact on the realizability cell the coefficients came from."""
    return abs(sum(ci * pi for ci, pi in zip(mc.c, p)))


def length_gradient(mc: MaxwellCoefficients, p: Configuration) -> list[float]:
    """Gradient of |sum c_i p_i| in the 2n real coordinates (x1, y1, x2, ...).

    Per terminal the gradient block is conj(c_i) rotated by the phase of the
    sum, hence always a unit vector.
    """
    z = sum(ci * pi for ci, pi in zip(mc.c, p))
    r = abs(z)
    if r < GEOM_TOL:
        raise DegenerateInput("gradient undefined: coefficient sum vanished")
    phase = z / r
    out: list[float] = []
    for ci in mc.c:
        g: Point = ci.conjugate() * phase
        out.extend((g.real, g.imag))
    return out


def length_function(rt: RealizedTree) -> LengthFunction:
    """Componentwise Maxwell form of any realized type, full or glued."""
    t = rt.type_ref
    comps: list[tuple[MaxwellCoefficients, tuple[int, ...]]] = []
    for piece in full_components(t).components:
        sub_coeffs = []
        m = len(piece.terminal_ids)
        back = {i + 1: pid for i, pid in enumerate(piece.terminal_ids)}
        back.update({m + j + 1: pid for j, pid in enumerate(piece.steiner_ids)})
        for i in range(1, m + 1):
            (nbr,) = piece.type.adjacency[i]
            d = rt.positions[back[i]] - rt.positions[back[nbr]]
            r = abs(d)
            if r <= GEOM_TOL:
                raise DegenerateInput("collapsed terminal edge in component")
            sub_coeffs.append((d / r).conjugate())
        comps.append(
            (MaxwellCoefficients(piece.type, tuple(sub_coeffs)), piece.terminal_ids)
        )
    return LengthFunction(t, comps)
