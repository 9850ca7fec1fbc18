"""Reflector and rotator block matrices over complexified quaternions.

A ``Reflector(upper, lower)`` denotes the anti-diagonal 2x2 block matrix
[[0, upper], [lower, 0]]; a ``Rotator(upper, lower)`` the diagonal one
[[upper, 0], [0, lower]].  Multiplication follows a parity rule enforced
by the types: the product of two reflectors (or two rotators) is a
rotator, while a mixed product is a reflector.  Sums of mixed shapes are
deliberately not provided.

The quaternion-valued trace of a rotator is the sum of its diagonal
blocks; the trace of any reflector is zero.  Under a similarity transform
by a rotator with unit-modulus blocks the temporal part of the trace is
invariant (the full quaternion trace is merely conjugated), which is the
statement inherited by the 4x4 scalar trace.
"""

from __future__ import annotations

from .quaternion import Quat, conjugate

__all__ = [
    "Reflector",
    "Rotator",
    "block_conj",
    "block_trace",
    "temporal_of",
    "similarity",
    "block_power",
    "identity_rotator",
]

_SCALARS = (int, float, complex)


def _as_quat(x) -> Quat:
    if isinstance(x, Quat):
        return x
    if isinstance(x, _SCALARS):
        return Quat(x)
    raise TypeError("block entries must be quaternions or scalars, got %r" % (x,))


class _Block:
    __slots__ = ("upper", "lower")

    def __init__(self, upper, lower):
        self.upper = _as_quat(upper)
        self.lower = _as_quat(lower)

    def __repr__(self):
        return "%s(%r, %r)" % (type(self).__name__, self.upper, self.lower)

    def __eq__(self, other):
        if isinstance(other, _Block):
            return (
                type(self) is type(other)
                and self.upper == other.upper
                and self.lower == other.lower
            )
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self.upper, self.lower))

    def __add__(self, other):
        if type(other) is type(self):
            return type(self)(self.upper + other.upper, self.lower + other.lower)
        if isinstance(other, _Block):
            raise TypeError("cannot add blocks of different shape")
        return NotImplemented

    def __sub__(self, other):
        if type(other) is type(self):
            return type(self)(self.upper - other.upper, self.lower - other.lower)
        if isinstance(other, _Block):
            raise TypeError("cannot subtract blocks of different shape")
        return NotImplemented

    def __neg__(self):
        return type(self)(-self.upper, -self.lower)

    def __rmul__(self, other):
        # scalar * block; scalars multiply both blocks
        if isinstance(other, _SCALARS):
            return type(self)(self.upper * other, self.lower * other)
        return NotImplemented

    def conj(self, kind: str = "quat"):
        """Entrywise conjugation of the chosen flavour; shape is preserved."""
        return type(self)(
            conjugate(self.upper, kind), conjugate(self.lower, kind)
        )

    def temporal(self):
        return type(self)(self.upper.temporal_part(), self.lower.temporal_part())

    def max_abs(self) -> float:
        return max(self.upper.max_abs(), self.lower.max_abs())


class Rotator(_Block):
    """Diagonal block matrix [[upper, 0], [0, lower]]."""

    def __mul__(self, other):
        if isinstance(other, Rotator):
            return Rotator(self.upper * other.upper, self.lower * other.lower)
        if isinstance(other, Reflector):
            return Reflector(self.upper * other.upper, self.lower * other.lower)
        if isinstance(other, _SCALARS):
            return Rotator(self.upper * other, self.lower * other)
        return NotImplemented

    def inverse(self) -> "Rotator":
        return Rotator(self.upper.inverse(), self.lower.inverse())

    def trace(self) -> Quat:
        return self.upper + self.lower


class Reflector(_Block):
    """Anti-diagonal block matrix [[0, upper], [lower, 0]]."""

    def __mul__(self, other):
        if isinstance(other, Reflector):
            return Rotator(self.upper * other.lower, self.lower * other.upper)
        if isinstance(other, Rotator):
            return Reflector(self.upper * other.lower, self.lower * other.upper)
        if isinstance(other, _SCALARS):
            return Reflector(self.upper * other, self.lower * other)
        return NotImplemented

    def inverse(self) -> "Reflector":
        return Reflector(self.lower.inverse(), self.upper.inverse())

    def trace(self) -> Quat:
        return Quat()


def block_conj(x: _Block, kind: str = "quat") -> _Block:
    return x.conj(kind)


def block_trace(x: _Block) -> Quat:
    """Sum of diagonal quaternion blocks; zero for any reflector."""
    return x.trace()


def temporal_of(x: _Block) -> _Block:
    """Replace each block by its temporal part."""
    return x.temporal()


def identity_rotator() -> Rotator:
    return Rotator(Quat(1.0), Quat(1.0))


def similarity(x: _Block, r: Rotator) -> _Block:
    """Return r * x * r.conj('quat'); r must have invertible blocks."""
    if not isinstance(r, Rotator):
        raise TypeError("similarity transforms are taken with rotators")
    # verify invertibility loudly, propagating SingularQuaternion
    r.upper.inverse()
    r.lower.inverse()
    return r * x * r.conj("quat")


def block_power(r: Rotator, n: int) -> Rotator:
    """Integer power of a rotator; negative powers use block inverses."""
    if n < 0:
        return block_power(r.inverse(), -n)
    out = identity_rotator()
    for _ in range(n):
        out = out * r
    return out
