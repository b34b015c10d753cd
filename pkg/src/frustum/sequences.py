"""Integer parameter sequences for the clique-extension model.

A sequence assigns a positive integer to every step t >= 1.  Three kinds
are supported:

* ``constant c``        -- c for every t
* ``affine a, b``       -- a*t + b
* ``table v1, ..., vT`` -- explicit values; evaluation past the table is
  an error, never a silent extension

Evaluation at t = 0 is defined as the value at t = 1.  Step 0 never
drives growth; the t = 0 value exists only so the seed feasibility
checks in :func:`frustum.model.validate_params` have something to look
at.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SequenceRangeError

_KINDS = ("constant", "affine", "table")


@dataclass(frozen=True)
class SequenceSpec:
    """Declarative description of one integer parameter sequence.

    ``params`` holds ``(c,)`` for a constant, ``(a, b)`` for the affine
    map ``a*t + b``, and the table values for a table.
    """

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        object.__setattr__(self, "params", tuple(int(v) for v in self.params))
        if any(not isinstance(v, int) for v in self.params):
            raise ValueError("sequence parameters must be integers")
        if self.kind == "constant":
            if len(self.params) != 1 or self.params[0] < 1:
                raise ValueError("constant sequence needs one value >= 1")
        elif self.kind == "affine":
            if len(self.params) != 2:
                raise ValueError("affine sequence needs coefficients (a, b)")
            a, b = self.params
            if a < 0 or b < 0 or a + b < 1:
                raise ValueError("affine sequence must be >= 1 for all t >= 1")
        else:
            if not self.params:
                raise ValueError("table sequence needs at least one value")
            if any(v < 1 for v in self.params):
                raise ValueError("table values must be >= 1")

    @classmethod
    def constant(cls, c: int) -> "SequenceSpec":
        return cls("constant", (c,))

    @classmethod
    def affine(cls, a: int, b: int) -> "SequenceSpec":
        return cls("affine", (a, b))

    @classmethod
    def table(cls, values) -> "SequenceSpec":
        return cls("table", tuple(values))

    @property
    def max_t(self) -> int | None:
        """Largest valid step, or None when the sequence is unbounded."""
        return len(self.params) if self.kind == "table" else None

    def describe(self) -> str:
        if self.kind == "constant":
            return f"constant {self.params[0]}"
        if self.kind == "affine":
            a, b = self.params
            return f"{a}*t+{b}"
        return "table " + ",".join(str(v) for v in self.params)


def eval_sequence(spec: SequenceSpec, t: int) -> int:
    """Value of ``spec`` at step ``t``.

    ``t`` must be >= 0; t = 0 returns the t = 1 value.  Table sequences
    reject any t past their length.
    """
    if t < 0:
        raise SequenceRangeError(f"step must be >= 0, got {t}")
    if t == 0:
        t = 1
    if spec.kind == "constant":
        value = spec.params[0]
    elif spec.kind == "affine":
        a, b = spec.params
        value = a * t + b
    else:
        if t > len(spec.params):
            raise SequenceRangeError(
                f"table sequence has {len(spec.params)} entries, step {t} requested"
            )
        value = spec.params[t - 1]
    if value < 1:
        raise SequenceRangeError(f"sequence value at t={t} is {value}, must be >= 1")
    return value


def parse_sequence_spec(text: str) -> SequenceSpec:
    """Parse the compact form ``kind:v1,v2,...`` used by the CLI.

    Examples: ``constant:2``, ``affine:1,0`` (meaning 1*t+0),
    ``table:1,1,2,3``.
    """
    head, sep, tail = text.strip().partition(":")
    if not sep:
        raise ValueError(f"expected kind:params, got {text!r}")
    kind = head.strip().lower()
    try:
        values = tuple(int(p) for p in tail.replace(",", " ").split())
    except ValueError as exc:
        raise ValueError(f"non-integer parameter in {text!r}") from exc
    return SequenceSpec(kind, values)


def format_sequence_spec(spec: SequenceSpec) -> str:
    """Inverse of :func:`parse_sequence_spec` (canonical comma form)."""
    return spec.kind + ":" + ",".join(str(v) for v in spec.params)
