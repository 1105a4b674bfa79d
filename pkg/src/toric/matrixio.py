"""The shared matrix file format.

First line "d n", then d whitespace-separated rows of n integers, then an
optional trailing line "labels: <n tokens>".
"""

from .errors import InputError
from .lattice import Configuration


def parse_matrix(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty matrix file")
    head = lines[0].split()
    if len(head) != 2:
        raise InputError("first line must be 'd n'")
    try:
        d, n = int(head[0]), int(head[1])
    except ValueError:
        raise InputError("first line must hold two integers") from None
    if d < 1 or n < 1:
        raise InputError("need d >= 1 and n >= 1")
    if len(lines) < 1 + d:
        raise InputError(f"expected {d} matrix rows")
    rows = []
    for ln in lines[1:1 + d]:
        try:
            row = [int(x) for x in ln.split()]
        except ValueError:
            raise InputError(f"non-integer matrix entry in row {ln!r}") from None
        if len(row) != n:
            raise InputError(f"row {ln!r} does not have {n} entries")
        rows.append(row)
    labels = None
    rest = lines[1 + d:]
    if rest:
        if len(rest) != 1 or not rest[0].startswith("labels:"):
            raise InputError("trailing content must be a single 'labels:' line")
        labels = rest[0][len("labels:"):].split()
        if len(labels) != n:
            raise InputError(f"expected {n} labels")
    return Configuration(rows, labels)


def serialize_matrix(config):
    lines = [f"{config.d} {config.n}"]
    for row in config.entries:
        lines.append(" ".join(str(x) for x in row))
    default = tuple(f"x{i + 1}" for i in range(config.n))
    if config.labels != default:
        lines.append("labels: " + " ".join(config.labels))
    return "\n".join(lines) + "\n"
