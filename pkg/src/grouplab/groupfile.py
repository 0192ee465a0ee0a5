"""Line-oriented group definition files (``.grp``).

    # optional comments
    name Q8
    degree 8
    family generalized_quaternion
    params 8
    gen (1 2 3 4)(5 6 7 8)
    gen (1 5 3 7)(2 8 4 6)

``name`` and ``degree`` are required, ``gen`` may repeat (none means the
trivial group), ``family`` and ``params`` are free-form metadata. Any other
key is an error.
"""

from __future__ import annotations

from .errors import CapExceededError, GroupFileError, PermutationError
from .group import FiniteGroup, generate
from .perm import format_cycles, parse_cycles

__all__ = ["parse_group_file", "write_group_file", "KEYS"]

KEYS = ("name", "degree", "gen", "family", "params")


def parse_group_file(text: str, order_cap: int | None = None) -> tuple[str, FiniteGroup]:
    fields: dict[str, tuple[int, str]] = {}
    gen_lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition(" ")
        value = value.strip()
        if key not in KEYS:
            raise GroupFileError(f"unknown key {key!r}", lineno)
        if key == "gen":
            gen_lines.append((lineno, value))
        elif key in fields:
            raise GroupFileError(f"duplicate key {key!r}", lineno)
        else:
            if not value:
                raise GroupFileError(f"missing value for {key!r}", lineno)
            fields[key] = (lineno, value)
    if "name" not in fields:
        raise GroupFileError("missing 'name'")
    if "degree" not in fields:
        raise GroupFileError("missing 'degree'")
    dline, dval = fields["degree"]
    try:
        degree = int(dval)
    except ValueError:
        raise GroupFileError(f"degree must be an integer, got {dval!r}", dline) from None
    if degree < 1:
        raise GroupFileError("degree must be positive", dline)

    gens = []
    for lineno, value in gen_lines:
        try:
            gens.append(parse_cycles(value, degree))
        except PermutationError as exc:
            raise GroupFileError(str(exc), lineno) from None
    name = fields["name"][1]
    try:
        G = generate(gens, order_cap=order_cap, degree=degree, name=name)
    except CapExceededError as exc:
        raise GroupFileError(str(exc)) from exc
    return name, G


def write_group_file(name: str, G: FiniteGroup, family: str | None = None, params: str | None = None) -> str:
    lines = [f"name {name}", f"degree {G.degree}"]
    if family:
        lines.append(f"family {family}")
    if params:
        lines.append(f"params {params}")
    lines.extend(f"gen {format_cycles(g)}" for g in G.generators)
    return "\n".join(lines) + "\n"
